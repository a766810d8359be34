#include "gaugecount/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "gaugecount/counting.hpp"
#include "gaugecount/errors.hpp"
#include "gaugecount/factor_graph.hpp"
#include "gaugecount/random.hpp"
#include "gaugecount/signatures.hpp"

namespace gaugecount::cli {

using Json = nlohmann::ordered_json;

std::optional<int> Angle::quarter_pi_steps() const {
  if (!pi_multiple) return std::nullopt;
  Rational q = *pi_multiple * 4;
  if (q.get_den() != 1 || !q.get_num().fits_sint_p()) return std::nullopt;
  return static_cast<int>(q.get_num().get_si());
}

Angle parse_angle(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
  if (s.empty()) throw InputError("empty angle");
  Angle angle;
  if (auto pos = s.find("pi"); pos != std::string::npos) {
    std::string before = s.substr(0, pos);
    std::string after = s.substr(pos + 2);
    if (!before.empty() && before.back() == '*') before.pop_back();
    Rational coefficient = 1;
    if (before == "-")
      coefficient = -1;
    else if (!before.empty() && before != "+")
      coefficient = parse_rational(before);
    if (!after.empty()) {
      if (after.front() != '/') throw InputError("malformed angle '" + std::string(text) + "'");
      Rational divisor = parse_rational(after.substr(1));
      if (sgn(divisor) == 0) throw InputError("zero divisor in angle");
      coefficient /= divisor;
    }
    angle.pi_multiple = coefficient;
    angle.radians = coefficient.get_d() * std::numbers::pi;
  } else {
    angle.radians = parse_rational(s).get_d();
  }
  return angle;
}

namespace {

struct Options {
  std::string verb;
  std::string target;
  std::string family;
  std::string file;
  std::string graph6;
  std::string format = "json";
  unsigned guard = kDefaultGuardBits;
  unsigned workers = 1;
  bool use_float = false;
  std::string tau = "2";
  std::optional<unsigned> degree;
  std::string angle;
  std::uint64_t seed = 1;
  unsigned trials = 0;
};

/// Exit code carried through to run() for verification failures.
struct Mismatch {
  Json payload;
};

std::string float_string(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

Multigraph load_graph(const Options& o) {
  const int given = !o.family.empty() + !o.file.empty() + !o.graph6.empty();
  if (given != 1) throw InputError("give exactly one of --family, --file, --graph6");
  if (!o.family.empty()) return generate(o.family);
  if (!o.graph6.empty()) return parse_graph6(o.graph6);
  std::ifstream in(o.file);
  if (!in) throw InputError("cannot read '" + o.file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

EnumerationOptions enumeration(const Options& o) {
  EnumerationOptions e;
  e.guard_bits = o.guard;
  e.workers = std::max(1u, o.workers);
  if (o.guard > e.duality_guard_bits && o.guard != kDefaultGuardBits) e.duality_guard_bits = o.guard;
  return e;
}

unsigned require_degree(const Options& o) {
  if (!o.degree) throw InputError("this target needs -d <degree>");
  if (*o.degree > 64) throw InputError("degree too large");
  return *o.degree;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json scaled_json(const ScaledMatrix& m) {
  if (m.is_rational()) return matrix_json(m.rational());
  return matrix_json(m.entries);
}

Json signature_json(const SignatureVector& x) {
  Json a = Json::array();
  for (const auto& v : x.entries()) a.push_back(to_string(v));
  return a;
}

// ---- count / verify on graphs --------------------------------------------------

Json count_eulerian(const Multigraph& g, const EnumerationOptions& e) {
  CountReport report;
  report.graph = describe(g);
  report.quantity = "eulerian-orientations";
  report.add_value("evaluation", Rational(count_eulerian_eval(g, e)));
  if (!g.has_loops()) {
    report.method = Method::Both;
    report.add_value("brute_force", Rational(count_eulerian_bruteforce(g, e)));
  }
  report.settle();
  if (!report.ok()) throw Mismatch{report.to_json()};
  return report.to_json();
}

Json count_half_graphs(const Multigraph& g, const EnumerationOptions& e) {
  CountReport report;
  report.graph = describe(g);
  report.quantity = "half-graphs";
  report.method = Method::Both;
  report.add_value("evaluation", Rational(count_half_graphs_eval(g, e)));
  report.add_value("brute_force", Rational(count_half_graphs_bruteforce(g, e)));
  if (auto k = count_half_graphs_krawtchouk(g, e)) report.add_value("krawtchouk_column", Rational(*k));
  report.settle();
  if (!report.ok()) throw Mismatch{report.to_json()};
  return report.to_json();
}

Json checked_report(const CountReport& report) {
  if (!report.ok()) throw Mismatch{report.to_json()};
  return report.to_json();
}

Json verify_gauge(const Options& o) {
  Rng rng(o.seed);
  const unsigned trials = o.trials == 0 ? 200 : o.trials;
  unsigned invariance_failures = 0, composition_failures = 0;
  std::uniform_int_distribution<unsigned> alphabet(2, 3);
  for (unsigned t = 0; t < trials; ++t) {
    const Multigraph g = random_loop_free_graph(rng, 5, 6);
    const unsigned q = alphabet(rng);
    const NormalFactorGraph h = random_factor_graph(rng, g, q);
    const GaugePair first = random_gauges(rng, g.edge_count(), q);
    const GaugePair second = random_gauges(rng, g.edge_count(), q);
    const NormalFactorGraph once = apply_gauge(h, first);
    if (!(partition_function(once) == partition_function(h))) ++invariance_failures;
    const NormalFactorGraph twice = apply_gauge(once, second);
    const NormalFactorGraph composed = apply_gauge(h, compose_gauges(first, second));
    if (twice.functions() != composed.functions()) ++composition_failures;
  }
  Json j;
  j["target"] = "gauge";
  j["trials"] = std::to_string(trials);
  j["seed"] = std::to_string(o.seed);
  j["invariance_failures"] = std::to_string(invariance_failures);
  j["composition_failures"] = std::to_string(composition_failures);
  j["pass"] = invariance_failures == 0 && composition_failures == 0;
  if (!j["pass"].get<bool>()) throw Mismatch{j};
  return j;
}

Json verify_duality(const Options& o, const Multigraph& g, const EnumerationOptions& e) {
  Rng rng(o.seed);
  const unsigned trials = o.trials == 0 ? 20 : o.trials;
  unsigned failures = 0;
  bool real_right = true;
  Json first;
  for (unsigned t = 0; t < trials; ++t) {
    WeightAssignment w;
    for (Vertex v = 0; v < g.vertex_count(); ++v) w.push_back(random_signature(rng, g.degree(v)));
    const DualityResult r = duality_check(g, w, e);
    failures += !r.equal;
    real_right = real_right && r.right.is_real();
    if (t == 0) first = Json{{"left", to_string(r.left)}, {"right", to_string(r.right)}};
  }
  Json j;
  j["target"] = "duality";
  j["graph"] = describe(g);
  j["trials"] = std::to_string(trials);
  j["seed"] = std::to_string(o.seed);
  j["failures"] = std::to_string(failures);
  j["first_trial"] = first;
  j["pass"] = failures == 0;
  if (failures != 0) throw Mismatch{j};
  return j;
}

/// F_G(M x) with M = entries * sqrt2^e on every vertex of a regular graph.
GaussianRational rotated_value(const Multigraph& g, const ScaledMatrix& rot, const SignatureVector& x,
                               const EnumerationOptions& e) {
  const SignatureVector y = apply(rot.entries, x);
  // The product over n vertices carries sqrt2^(e*n), an integer power of 2 since d*n is even.
  const long exponent = static_cast<long>(rot.sqrt2_exp) * static_cast<long>(g.vertex_count());
  return subgraph_poly_eval(g, uniform_weights(g, y), e) * GaussianRational(pow2(static_cast<int>(exponent / 2)));
}

Json verify_rotation(const Options& o, const Multigraph& g, const EnumerationOptions& e) {
  const auto d = regular_degree(g);
  if (!d) throw InputError("rotation invariance needs a regular graph");
  Rng rng(o.seed);
  Json j;
  j["target"] = "rotation";
  j["graph"] = describe(g);
  bool pass = true;

  std::optional<Angle> angle;
  if (!o.angle.empty()) angle = parse_angle(o.angle);

  if (o.use_float) {
    std::vector<double> angles;
    if (angle) {
      angles.push_back(angle->radians);
    } else {
      std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
      for (int i = 0; i < 5; ++i) angles.push_back(u(rng));
    }
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    const unsigned vectors = o.trials == 0 ? 20 : o.trials;
    double worst = 0.0;
    for (unsigned v = 0; v < vectors; ++v) {
      std::vector<double> x(*d + 1);
      for (auto& xi : x) xi = entry(rng);
      const double base = subgraph_poly_eval(g, std::vector<std::vector<double>>(g.vertex_count(), x), e);
      for (double t : angles) {
        const auto y = rotation_matrix(*d, t).apply(x);
        const double rotated = subgraph_poly_eval(g, std::vector<std::vector<double>>(g.vertex_count(), y), e);
        worst = std::max(worst, std::abs(rotated - base) / (1.0 + std::abs(base)));
      }
    }
    j["float_vectors"] = std::to_string(vectors);
    j["float_angles"] = std::to_string(angles.size());
    j["max_relative_error"] = float_string(worst);
    j["float_tolerance"] = float_string(1e-9);
    pass = pass && worst <= 1e-9;
  }

  int steps = 1;
  if (angle) {
    if (auto s = angle->quarter_pi_steps())
      steps = *s;
    else if (!o.use_float)
      throw InputError("exact rotation needs a multiple of pi/4; use --float for other angles");
  }
  if (!angle || angle->quarter_pi_steps()) {
    const ScaledMatrix rot = rotation_quarter_pi(*d, steps);
    const unsigned vectors = o.trials == 0 ? 20 : o.trials;
    unsigned failures = 0;
    for (unsigned v = 0; v < vectors; ++v) {
      const SignatureVector x = random_signature(rng, *d);
      const GaussianRational base = subgraph_poly_eval(g, uniform_weights(g, x), e);
      failures += !(rotated_value(g, rot, x, e) == base);
    }
    j["exact_quarter_pi_steps"] = std::to_string(steps);
    j["exact_vectors"] = std::to_string(vectors);
    j["exact_failures"] = std::to_string(failures);
    pass = pass && failures == 0;
    if (*d % 2 == 0) {
      std::vector<GaussianRational> unit(*d + 1);
      unit[*d / 2] = 1;
      const SignatureVector e_mid(unit);
      const GaussianRational lhs = subgraph_poly_eval(g, uniform_weights(g, e_mid), e);
      const GaussianRational rhs = subgraph_poly_eval(g, uniform_weights(g, c_vector(*d)), e);
      j["middle_unit_value"] = to_string(lhs);
      j["c_vector_value"] = to_string(rhs);
      pass = pass && lhs == rhs;
    }
  }
  j["pass"] = pass;
  if (!pass) throw Mismatch{j};
  return j;
}

// ---- matrices ------------------------------------------------------------------

Json matrix_target(const Options& o) {
  const unsigned d = require_degree(o);
  Json j;
  j["matrix"] = o.target;
  j["d"] = std::to_string(d);
  if (o.target == "krawtchouk") {
    const ScaledMatrix k = krawtchouk_matrix(d);
    if (!k.is_rational()) j["sqrt2_exponent"] = std::to_string(k.sqrt2_exp);
    j["entries"] = scaled_json(k);
  } else if (o.target == "clement") {
    j["entries"] = matrix_json(clement_matrix(d));
    if (d % 2 == 0) {
      j["s_vector"] = signature_json(s_vector(d));
      j["c_vector"] = signature_json(c_vector(d));
    }
  } else if (o.target == "q") {
    Json rows = Json::object();
    for (int k = static_cast<int>(d); k >= -static_cast<int>(d); k -= 2) {
      Json row = Json::array();
      const LinearForm form = q_coefficients(d, k);
      for (const auto& b : form.coefficients()) row.push_back(to_string(b));
      rows[std::to_string(k)] = std::move(row);
    }
    j["entries"] = std::move(rows);
  } else {  // rotation
    if (o.angle.empty()) throw InputError("rotation matrix needs -t <angle>");
    const Angle angle = parse_angle(o.angle);
    j["angle"] = o.angle;
    if (auto steps = angle.quarter_pi_steps()) {
      const ScaledMatrix r = rotation_quarter_pi(d, *steps);
      if (!r.is_rational()) j["sqrt2_exponent"] = std::to_string(r.sqrt2_exp);
      j["entries"] = scaled_json(r);
    } else {
      if (!o.use_float) throw InputError("angle is not a multiple of pi/4; pass --float for a float matrix");
      const RotationMatrix r = rotation_matrix(d, angle.radians);
      Json rows = Json::array();
      for (unsigned a = 0; a <= d; ++a) {
        Json row = Json::array();
        for (unsigned b = 0; b <= d; ++b) row.push_back(float_string(r(a, b)));
        rows.push_back(std::move(row));
      }
      j["entries"] = std::move(rows);
    }
  }
  return j;
}

// ---- distribution / identity ---------------------------------------------------

Json distribution_cubic(const Multigraph& g, const EnumerationOptions& e) {
  const CubicDistribution dist = cubic_distribution(g, e);
  Json j;
  j["target"] = "cubic";
  j["graph"] = describe(g);
  Json table = Json::array();
  std::vector<int> keys;
  for (const auto& [k, p] : dist.enumerated) keys.push_back(k);
  for (const auto& [k, p] : dist.closed_form) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (int k : keys) {
    auto lookup = [k](const std::map<int, Rational>& m) {
      auto it = m.find(k);
      return it == m.end() ? Rational(0) : it->second;
    };
    auto count = dist.counts.find(k);
    table.push_back(Json{{"k", std::to_string(k)},
                         {"orientations", count == dist.counts.end() ? "0" : to_string(count->second)},
                         {"enumerated", to_string(lookup(dist.enumerated))},
                         {"closed_form", to_string(lookup(dist.closed_form))}});
  }
  j["table"] = std::move(table);
  j["match"] = dist.match;
  if (!dist.match) throw Mismatch{j};
  return j;
}

Json identity_cubic_hg(const Options& o, const Multigraph& g, const EnumerationOptions& e) {
  const Rational tau = parse_rational(o.tau);
  const CubicIdentity r = cubic_hg_identity_check(g, tau, e);
  Json j;
  j["target"] = "cubic-hg";
  j["graph"] = describe(g);
  j["tau"] = to_string(tau);
  j["orientation_side"] = to_string(r.orientation_side);
  j["subgraph_side"] = to_string(r.subgraph_side);
  j["closed_form"] = to_string(r.closed_form);
  j["equal"] = r.equal;
  j["closed_form_equal"] = r.closed_form_equal;
  if (!r.equal || !r.closed_form_equal) throw Mismatch{j};
  return j;
}

Json dispatch(const Options& o) {
  const EnumerationOptions e = enumeration(o);
  const std::string& v = o.verb;
  const std::string& t = o.target;
  if (v == "matrix") {
    if (t == "rotation" || t == "krawtchouk" || t == "clement" || t == "q") return matrix_target(o);
  } else if (v == "count") {
    if (t == "eulerian") return count_eulerian(load_graph(o), e);
    if (t == "half-graphs") return count_half_graphs(load_graph(o), e);
  } else if (v == "verify") {
    if (t == "gauge") return verify_gauge(o);
    if (t == "eulerian") return count_eulerian(load_graph(o), e);
    if (t == "half-graphs") return checked_report(eulerian_vs_halfgraphs(load_graph(o), e));
    if (t == "schrijver") return checked_report(schrijver_report(load_graph(o), e));
    if (t == "duality") return verify_duality(o, load_graph(o), e);
    if (t == "rotation") return verify_rotation(o, load_graph(o), e);
  } else if (v == "distribution") {
    if (t == "cubic") return distribution_cubic(load_graph(o), e);
  } else if (v == "identity") {
    if (t == "cubic-hg") return identity_cubic_hg(o, load_graph(o), e);
    if (t == "duality") return verify_duality(o, load_graph(o), e);
  }
  throw InputError("target '" + t + "' is not available for '" + v + "'");
}

// ---- text rendering --------------------------------------------------------------

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  return j.dump();
}

void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured()) {
        os << pad << key << ":\n";
        render_text(value, os, indent + 2);
      } else {
        os << pad << key << ": " << scalar_text(value) << '\n';
      }
    }
    return;
  }
  if (j.is_array()) {
    const bool table = !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& r) { return r.is_array(); });
    if (table) {
      std::size_t width = 0;
      for (const auto& row : j)
        for (const auto& cell : row) width = std::max(width, scalar_text(cell).size());
      for (const auto& row : j) {
        os << pad;
        for (const auto& cell : row) os << std::setw(static_cast<int>(width) + 1) << scalar_text(cell);
        os << '\n';
      }
      return;
    }
    for (const auto& item : j) {
      if (item.is_structured()) {
        os << pad << "-\n";
        render_text(item, os, indent + 2);
      } else {
        os << pad << "- " << scalar_text(item) << '\n';
      }
    }
    return;
  }
  os << pad << scalar_text(j) << '\n';
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.format == "text")
    render_text(j, out, 0);
  else
    out << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact counts of Eulerian orientations and half-graphs via gauge transformations",
               "gaugecount"};
  app.require_subcommand(1);

  struct VerbSpec {
    const char* name;
    const char* help;
    std::vector<std::string> targets;
  };
  const std::vector<VerbSpec> verbs = {
      {"count", "count orientations or subgraphs by evaluation and brute force", {"eulerian", "half-graphs"}},
      {"verify", "check an identity and report",
       {"eulerian", "half-graphs", "gauge", "duality", "schrijver", "rotation"}},
      {"matrix", "render an exact matrix", {"rotation", "krawtchouk", "clement", "q"}},
      {"distribution", "exact orientation statistics", {"cubic"}},
      {"identity", "check a closed-form identity", {"cubic-hg", "duality"}},
  };
  for (const auto& spec : verbs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("target", o.target, "what to compute")->required()->check(CLI::IsMember(spec.targets));
    sub->add_option("--family", o.family, "graph family, e.g. K5, C4, K3,3, petersen, C3+C3");
    sub->add_option("--file", o.file, "edge-list file");
    sub->add_option("--graph6", o.graph6, "graph6 string");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--guard", o.guard, "maximum enumeration size in bits")->check(CLI::Range(1u, 62u));
    sub->add_option("--workers", o.workers, "enumeration threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--float", o.use_float, "allow floating-point rotation checks");
    sub->add_option("--tau", o.tau, "non-zero rational; t = tau^4");
    sub->add_option("-d,--degree", o.degree, "signature degree");
    sub->add_option("-t,--angle", o.angle, "angle: multiple of pi (e.g. pi/4) or decimal radians");
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    sub->add_option("--trials", o.trials, "number of randomized trials");
    sub->callback([&o, name = std::string(spec.name)] { o.verb = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  }

  try {
    emit(dispatch(o), o, out);
    return kExitOk;
  } catch (const Mismatch& m) {
    emit(m.payload, o, out);
    err << "error: verification failed\n";
    return kExitMismatch;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  }
}

}  // namespace gaugecount::cli
