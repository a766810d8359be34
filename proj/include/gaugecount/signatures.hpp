#pragma once

#include <span>
#include <vector>

#include "gaugecount/matrix.hpp"
#include "gaugecount/rational.hpp"

namespace gaugecount {

/// Per-degree weights (x_0, ..., x_d) of a symmetric binary signature.
class SignatureVector {
 public:
  SignatureVector() = default;
  explicit SignatureVector(std::vector<GaussianRational> entries) : x_(std::move(entries)) {}

  unsigned degree() const { return x_.empty() ? 0 : static_cast<unsigned>(x_.size() - 1); }
  std::size_t size() const { return x_.size(); }
  const GaussianRational& operator[](std::size_t k) const { return x_[k]; }
  GaussianRational& operator[](std::size_t k) { return x_[k]; }
  const std::vector<GaussianRational>& entries() const { return x_; }

  friend bool operator==(const SignatureVector&, const SignatureVector&) = default;

 private:
  std::vector<GaussianRational> x_;
};

/// sum_k b_k x_k over the variables of a degree-d signature.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<GaussianRational> coefficients) : b_(std::move(coefficients)) {}

  unsigned degree() const { return b_.empty() ? 0 : static_cast<unsigned>(b_.size() - 1); }
  const GaussianRational& operator[](std::size_t k) const { return b_[k]; }
  const std::vector<GaussianRational>& coefficients() const { return b_; }

  /// Throws InputError on a length mismatch.
  GaussianRational evaluate(const SignatureVector& x) const;
  /// Row-vector action b * M.
  LinearForm times(const Matrix& m) const;
  LinearForm scaled(const GaussianRational& s) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<GaussianRational> b_;
};

/// Q_(k): coefficient j is the z^j coefficient of (1+iz)^r (1-iz)^(d-r), r = (d-k)/2.
/// The x_0 coefficient is 1 and Q_(k) * A^(d) = k*i * Q_(k).
/// Throws InputError unless |k| <= d and k = d (mod 2).
LinearForm q_coefficients(unsigned d, int k);

/// Rotation R_t in floating point: row r holds the coefficients of
/// (x cos t - sin t)^r (x sin t + cos t)^(d-r), lowest power first.
struct RotationMatrix {
  unsigned d = 0;
  double angle = 0.0;
  std::vector<double> entries;  // (d+1)^2, row-major

  double operator()(std::size_t r, std::size_t c) const { return entries[r * (d + 1) + c]; }
  std::vector<double> apply(std::span<const double> x) const;
  RotationMatrix operator*(const RotationMatrix& o) const;
};

RotationMatrix rotation_matrix(unsigned d, double t);

/// Exact R_t for a rational point (c, s) = (cos t, sin t) on the unit circle.
/// Throws InputError unless c^2 + s^2 = 1.
Matrix rotation_matrix_exact(unsigned d, const Rational& cos_t, const Rational& sin_t);

/// Matrix whose true value is entries * sqrt(2)^sqrt2_exp. Keeps odd-degree
/// Krawtchouk matrices exact without storing irrationals.
struct ScaledMatrix {
  Matrix entries;
  int sqrt2_exp = 0;

  bool is_rational() const { return sqrt2_exp % 2 == 0; }
  /// Throws InputError when sqrt2_exp is odd.
  Matrix rational() const;
  ScaledMatrix operator*(const ScaledMatrix& o) const { return {entries * o.entries, sqrt2_exp + o.sqrt2_exp}; }
  friend bool operator==(const ScaledMatrix& a, const ScaledMatrix& b);
};

/// R_{pi/4}: integer coefficients of (x-1)^r (x+1)^(d-r) with sqrt2_exp = -d.
ScaledMatrix krawtchouk_matrix(unsigned d);

/// R_{j*pi/4} as the j-th power of the Krawtchouk matrix (j taken mod 8).
ScaledMatrix rotation_quarter_pi(unsigned d, int j);

/// Signed tridiagonal matrix: A[k][k+1] = d-k, A[k][k-1] = -k.
Matrix clement_matrix(unsigned d);

/// Eulerian evaluation vector: s_k = C(d,d/2) C(d/2,k/2) / (2^(d/2) C(d,k)) for even k, else 0.
/// Throws InputError for odd d.
SignatureVector s_vector(unsigned d);
/// Half-graph evaluation vector: c_k = (-1)^(k/2) s_k.
SignatureVector c_vector(unsigned d);
/// s rescaled so that the first entry is 1: s'_{2t} = C(d/2,t) / C(d,2t).
SignatureVector s_prime_vector(unsigned d);

/// M x for a square exact matrix.
SignatureVector apply(const Matrix& m, const SignatureVector& x);

/// Row r of R_t applied to x.
double a_hat(unsigned d, unsigned r, double t, std::span<const double> x);

}  // namespace gaugecount
