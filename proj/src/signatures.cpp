#include "gaugecount/signatures.hpp"

#include <cmath>
#include <cstdlib>

#include "gaugecount/errors.hpp"

namespace gaugecount {

namespace {

/// Coefficients (lowest first) of (a x + b)^r (c x + e)^(d-r) over any ring.
template <typename T>
std::vector<T> binomial_product(unsigned d, unsigned r, const T& a, const T& b, const T& c, const T& e) {
  std::vector<T> poly{T(1)};
  auto multiply_linear = [&poly](const T& lead, const T& constant) {
    std::vector<T> next(poly.size() + 1, T(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j] * constant;
      next[j + 1] += poly[j] * lead;
    }
    poly = std::move(next);
  };
  for (unsigned i = 0; i < r; ++i) multiply_linear(a, b);
  for (unsigned i = r; i < d; ++i) multiply_linear(c, e);
  return poly;
}

}  // namespace

GaussianRational LinearForm::evaluate(const SignatureVector& x) const {
  if (x.size() != b_.size())
    throw InputError("linear form of degree " + std::to_string(degree()) +
                     " evaluated on a vector of length " + std::to_string(x.size()));
  GaussianRational total;
  for (std::size_t k = 0; k < b_.size(); ++k)
    if (!b_[k].is_zero() && !x[k].is_zero()) total += b_[k] * x[k];
  return total;
}

LinearForm LinearForm::times(const Matrix& m) const {
  if (m.rows() != b_.size()) throw InputError("row vector and matrix shapes differ");
  std::vector<GaussianRational> out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!b_[r].is_zero() && !m(r, c).is_zero()) out[c] += b_[r] * m(r, c);
  return LinearForm(std::move(out));
}

LinearForm LinearForm::scaled(const GaussianRational& s) const {
  auto out = b_;
  for (auto& x : out) x *= s;
  return LinearForm(std::move(out));
}

LinearForm q_coefficients(unsigned d, int k) {
  if (static_cast<unsigned>(std::abs(k)) > d)
    throw InputError("Q index " + std::to_string(k) + " exceeds degree " + std::to_string(d));
  if ((static_cast<int>(d) - k) % 2 != 0)
    throw InputError("Q index " + std::to_string(k) + " must have the parity of degree " +
                     std::to_string(d));
  const unsigned r = static_cast<unsigned>((static_cast<int>(d) - k) / 2);
  const auto i = GaussianRational::i();
  // (i z + 1)^r (-i z + 1)^(d-r)
  return LinearForm(binomial_product<GaussianRational>(d, r, i, 1, -i, 1));
}

std::vector<double> RotationMatrix::apply(std::span<const double> x) const {
  std::vector<double> out(d + 1, 0.0);
  for (unsigned r = 0; r <= d; ++r)
    for (unsigned c = 0; c <= d; ++c) out[r] += (*this)(r, c) * x[c];
  return out;
}

RotationMatrix RotationMatrix::operator*(const RotationMatrix& o) const {
  RotationMatrix out{d, angle + o.angle, std::vector<double>((d + 1) * (d + 1), 0.0)};
  for (unsigned r = 0; r <= d; ++r)
    for (unsigned k = 0; k <= d; ++k)
      for (unsigned c = 0; c <= d; ++c) out.entries[r * (d + 1) + c] += (*this)(r, k) * o(k, c);
  return out;
}

RotationMatrix rotation_matrix(unsigned d, double t) {
  const double c = std::cos(t), s = std::sin(t);
  RotationMatrix out{d, t, {}};
  out.entries.reserve((d + 1) * (d + 1));
  for (unsigned r = 0; r <= d; ++r) {
    auto row = binomial_product<double>(d, r, c, -s, s, c);
    out.entries.insert(out.entries.end(), row.begin(), row.end());
  }
  return out;
}

Matrix rotation_matrix_exact(unsigned d, const Rational& cos_t, const Rational& sin_t) {
  if (cos_t * cos_t + sin_t * sin_t != 1) throw InputError("(cos t, sin t) is not on the unit circle");
  Matrix out(d + 1, d + 1);
  for (unsigned r = 0; r <= d; ++r) {
    auto row = binomial_product<Rational>(d, r, cos_t, -sin_t, sin_t, cos_t);
    for (unsigned c = 0; c <= d; ++c) out(r, c) = GaussianRational(row[c]);
  }
  return out;
}

Matrix ScaledMatrix::rational() const {
  if (!is_rational()) throw InputError("matrix carries an odd power of sqrt(2)");
  Matrix out = entries;
  out *= GaussianRational(pow2(sqrt2_exp / 2));
  return out;
}

bool operator==(const ScaledMatrix& a, const ScaledMatrix& b) {
  // Compare a * sqrt2^(ea) with b * sqrt2^(eb) by bringing both to the smaller exponent.
  const int diff = a.sqrt2_exp - b.sqrt2_exp;
  if (diff % 2 != 0) return false;  // entries are Gaussian rationals; sqrt(2) never cancels
  Matrix x = a.entries, y = b.entries;
  if (diff > 0)
    x *= GaussianRational(pow2(diff / 2));
  else
    y *= GaussianRational(pow2(-diff / 2));
  return x == y;
}

ScaledMatrix krawtchouk_matrix(unsigned d) {
  Matrix out(d + 1, d + 1);
  for (unsigned r = 0; r <= d; ++r) {
    auto row = binomial_product<Integer>(d, r, 1, -1, 1, 1);
    for (unsigned c = 0; c <= d; ++c) out(r, c) = GaussianRational(Rational(row[c]));
  }
  return {std::move(out), -static_cast<int>(d)};
}

ScaledMatrix rotation_quarter_pi(unsigned d, int j) {
  const int steps = ((j % 8) + 8) % 8;
  ScaledMatrix result{Matrix::identity(d + 1), 0};
  const ScaledMatrix k = krawtchouk_matrix(d);
  for (int s = 0; s < steps; ++s) result = result * k;
  return result;
}

Matrix clement_matrix(unsigned d) {
  Matrix a(d + 1, d + 1);
  for (unsigned k = 0; k <= d; ++k) {
    if (k < d) a(k, k + 1) = static_cast<long>(d - k);
    if (k > 0) a(k, k - 1) = -static_cast<long>(k);
  }
  return a;
}

namespace {

void require_even(unsigned d) {
  if (d % 2 != 0) throw InputError("evaluation vectors need an even degree, got " + std::to_string(d));
}

}  // namespace

SignatureVector s_vector(unsigned d) {
  require_even(d);
  std::vector<GaussianRational> s(d + 1);
  const Integer lead = binomial(d, d / 2);
  for (unsigned k = 0; k <= d; k += 2) {
    Rational value(Integer(lead * binomial(d / 2, k / 2)), binomial(d, k));
    value.canonicalize();
    s[k] = GaussianRational(value * pow2(-static_cast<int>(d / 2)));
  }
  return SignatureVector(std::move(s));
}

SignatureVector c_vector(unsigned d) {
  SignatureVector c = s_vector(d);
  for (unsigned k = 2; k <= d; k += 4) c[k] = -c[k];
  return c;
}

SignatureVector s_prime_vector(unsigned d) {
  require_even(d);
  std::vector<GaussianRational> s(d + 1);
  for (unsigned t = 0; 2 * t <= d; ++t) {
    Rational value(binomial(d / 2, t), binomial(d, 2 * t));
    value.canonicalize();
    s[2 * t] = GaussianRational(value);
  }
  return SignatureVector(std::move(s));
}

SignatureVector apply(const Matrix& m, const SignatureVector& x) {
  if (m.cols() != x.size()) throw InputError("matrix and vector shapes differ");
  std::vector<GaussianRational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && !x[c].is_zero()) out[r] += m(r, c) * x[c];
  return SignatureVector(std::move(out));
}

double a_hat(unsigned d, unsigned r, double t, std::span<const double> x) {
  if (r > d) throw InputError("row index exceeds degree");
  if (x.size() != d + 1u) throw InputError("signature length must be d+1");
  auto row = binomial_product<double>(d, r, std::cos(t), -std::sin(t), std::sin(t), std::cos(t));
  double total = 0.0;
  for (unsigned k = 0; k <= d; ++k) total += row[k] * x[k];
  return total;
}

}  // namespace gaugecount
