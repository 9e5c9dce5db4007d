#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "kesten/discrete_fock.hpp"
#include "kesten/fock.hpp"
#include "kesten/kesten_measure.hpp"
#include "kesten/mixed_moments.hpp"
#include "kesten/moments.hpp"
#include "kesten/partition.hpp"
#include "kesten/rational.hpp"
#include "kesten/signature.hpp"
#include "kesten/verify.hpp"

namespace kesten::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown for anything the user can fix by changing the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_parameter(const std::string& name, const std::string& text) {
  Rational value;
  try {
    value = parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
  if (value < 0) throw UsageError("--" + name + " must be nonnegative");
  return value;
}

json header(const std::string& command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string fixed(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

struct Parameters {
  std::string p = "1";
  std::string q = "1";
  Rational p_value{1};
  Rational q_value{1};
  bool given = false;

  void add_to(CLI::App* cmd, const std::string& default_note) {
    cmd->add_option("--p", p, "p, as a/b or a decimal (" + default_note + ")");
    cmd->add_option("--q", q, "q, as a/b or a decimal (" + default_note + ")");
  }
  void resolve(CLI::App* cmd) {
    given = cmd->count("--p") > 0 || cmd->count("--q") > 0;
    p_value = parse_parameter("p", p);
    q_value = parse_parameter("q", q);
  }
};

// ---- commands ----

struct EnumerateArgs {
  unsigned n = 4;
  bool pairs = false;
  bool ordered = false;
  bool covered = false;
  std::optional<unsigned> outer;
  bool count_only = false;
  bool override_limits = false;
  std::string output = "json";
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  json j = header("enumerate");
  j["n"] = a.n;
  j["pairs"] = a.pairs;
  j["ordered"] = a.ordered;
  json list = json::array();
  std::size_t count = 0;
  std::vector<std::string> lines;

  if (a.ordered) {
    EnumerationOptions options;
    options.pair_only = a.pairs;
    options.covered_only = a.covered;
    if (a.outer) options.outer_blocks = *a.outer;
    options.override_limits = a.override_limits;
    for_each_ordered(a.n, options, [&](const OrderedPartition& P) {
      ++count;
      if (a.count_only) return;
      const std::string w = weight(P).to_string();
      if (a.output == "json") {
        list.push_back(json{{"partition", P.to_string()}, {"weight", w}});
      } else {
        lines.push_back(P.to_string() + "  " + w);
      }
    });
  } else {
    for_each_noncrossing(
        a.n, a.pairs,
        [&](const SetPartition& pi) {
          if (a.covered && !pi.is_covered()) return;
          if (a.outer && nesting_forest(pi).outer_count() != *a.outer) return;
          ++count;
          if (a.count_only) return;
          if (a.output == "json") {
            list.push_back(pi.to_string());
          } else {
            lines.push_back(pi.to_string());
          }
        },
        a.override_limits);
  }

  if (a.output == "json") {
    j["count"] = count;
    if (!a.count_only) j["partitions"] = std::move(list);
    print_json(out, j);
  } else {
    for (const auto& l : lines) out << l << "\n";
    out << "count " << count << "\n";
  }
  return kOk;
}

std::vector<MomentRoute> routes_from(const std::string& name) {
  if (name == "all") return {all_routes().begin(), all_routes().end()};
  if (name == "enum") return {MomentRoute::enumeration};
  if (name == "rec") return {MomentRoute::recursion};
  if (name == "closed") return {MomentRoute::closed_form};
  if (name == "jacobi") return {MomentRoute::jacobi};
  if (name == "delaney") return {MomentRoute::delaney};
  throw UsageError("unknown route '" + name + "'");
}

int cmd_moments(unsigned n, const std::string& route, const Parameters& params, bool override_limits, std::ostream& out,
                std::ostream& err) {
  if (n == 0) throw UsageError("--n must be >= 1");
  const MomentReport report = compute_moment(n, routes_from(route), override_limits);
  json j = header("moments");
  j["n"] = n;
  json routes = json::object();
  for (const auto& [r, value] : report.routes) routes[route_name(r)] = value.to_string();
  j["routes"] = std::move(routes);
  j["agreement"] = report.agreement;
  if (params.given) {
    j["p"] = to_string(params.p_value);
    j["q"] = to_string(params.q_value);
    j["value"] = to_string(report.value.evaluate(params.p_value, params.q_value));
  }
  print_json(out, j);
  if (!report.agreement) {
    for (const auto& [r, value] : report.routes) {
      if (!(value == report.value)) {
        err << "route " << route_name(r) << " disagrees: " << diff_text(report.value, value) << "\n";
        break;
      }
    }
    return kMismatch;
  }
  return kOk;
}

int cmd_verify(unsigned order, std::uint64_t seed, bool keep_going, std::ostream& out, std::ostream& err) {
  if (order == 0) throw UsageError("--order must be >= 1");
  VerifyOptions options;
  options.order = order;
  options.seed = seed;
  options.stop_on_failure = !keep_going;
  const VerifyReport report = run_verification(options);

  json j = header("verify");
  j["order"] = order;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"name", c.name}, {"description", c.description}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  json errata = json::array();
  for (const auto& e : report.errata) {
    errata.push_back(
        json{{"item", e.item}, {"printed", e.printed}, {"computed", e.computed}, {"printed_matches", e.printed_matches}});
  }
  j["paper_errata"] = std::move(errata);
  j["passed"] = report.passed();
  print_json(out, j);
  if (const CheckResult* f = report.first_failure()) {
    err << "check " << f->name << " failed: " << f->detail << "\n";
    return kMismatch;
  }
  return kOk;
}

KestenMeasure make_measure(const Parameters& params) {
  if (params.p_value == 0 && params.q_value == 0) return KestenMeasure::boolean_limit();
  return KestenMeasure(params.p_value.get_d(), params.q_value.get_d());
}

int cmd_density(const Parameters& params, unsigned grid, const std::string& output, std::ostream& out) {
  if (grid < 2) throw UsageError("--grid must be >= 2");
  const KestenMeasure m = make_measure(params);
  const double edge = m.is_boolean_limit() ? 1.0 : m.edge();
  if (output == "json") {
    json j = header("density");
    j["p"] = to_string(params.p_value);
    j["q"] = to_string(params.q_value);
    j["edge"] = edge;
    json points = json::array();
    for (unsigned i = 0; i <= grid; ++i) {
      const double x = -edge + 2 * edge * i / grid;
      points.push_back(json{{"x", x}, {"density", m.density(x)}});
    }
    j["points"] = std::move(points);
    json atoms = json::array();
    for (const auto& a : m.atoms()) atoms.push_back(json{{"position", a.position}, {"mass", a.mass}});
    j["atoms"] = std::move(atoms);
    print_json(out, j);
    return kOk;
  }
  out << "x,density\n";
  for (unsigned i = 0; i <= grid; ++i) {
    const double x = -edge + 2 * edge * i / grid;
    out << fixed(x) << "," << fixed(m.density(x)) << "\n";
  }
  out << "\natom_position,atom_mass\n";
  for (const auto& a : m.atoms()) out << fixed(a.position) << "," << fixed(a.mass) << "\n";
  return kOk;
}

int cmd_quadcheck(const Parameters& params, unsigned nmax, double tol, std::ostream& out, std::ostream& err) {
  if (nmax > 12) throw UsageError("--nmax must be <= 12");
  const KestenMeasure m = make_measure(params);
  const SequenceTable t = sequences_by_recursion(std::max(1U, nmax / 2), 1);
  json j = header("quadcheck");
  j["p"] = to_string(params.p_value);
  j["q"] = to_string(params.q_value);
  j["tolerance"] = tol;
  json rows = json::array();
  double worst = 0;
  for (unsigned n = 0; n <= nmax; ++n) {
    const Rational exact = n % 2 ? Rational(0) : t.r[n / 2].evaluate(params.p_value, params.q_value);
    const double quad = quadrature_moment(m, n, tol);
    const double error = std::abs(quad - exact.get_d());
    worst = std::max(worst, error);
    rows.push_back(json{{"n", n}, {"quadrature", quad}, {"exact", to_string(exact)}, {"abs_error", error}});
  }
  j["moments"] = std::move(rows);
  j["max_abs_error"] = worst;
  print_json(out, j);
  if (!(worst < 1e-8)) {
    err << "quadrature deviates from the exact moments by " << worst << "\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_brownian(const std::string& signature, const std::string& intervals, bool override_limits, std::ostream& out,
                 std::ostream& err) {
  IntervalSignature sig = [&] {
    try {
      return IntervalSignature::parse(signature, intervals);
    } catch (const SignatureError& e) {
      throw UsageError(e.what());
    }
  }();
  const MultiPoly op = position_moment(sig, override_limits);
  const MultiPoly comb = mixed_moment_brownian(sig, override_limits);
  json j = header("brownian");
  j["signature"] = sig.to_string();
  j["operator_route"] = op.to_string();
  j["combinatorial_route"] = comb.to_string();
  j["equal"] = op == comb;
  print_json(out, j);
  if (!(op == comb)) {
    err << diff_text(comb, op) << "\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_poisson(unsigned n, const std::string& output, bool override_limits, std::ostream& out, std::ostream& err) {
  if (n == 0) throw UsageError("--n must be >= 1");
  const MultiPoly comb = poisson_moment(n, override_limits);
  const MultiPoly op = poisson_moment_operator(n, override_limits);
  if (output == "json") {
    json j = header("poisson");
    j["n"] = n;
    j["operator_route"] = op.to_string();
    j["combinatorial_route"] = comb.to_string();
    json by_power = json::object();
    for (std::uint32_t k = 1; k <= n; ++k) by_power["T^" + std::to_string(k)] = t_coefficient(comb, k).to_string();
    j["coefficients"] = std::move(by_power);
    j["equal"] = op == comb;
    print_json(out, j);
  } else {
    out << comb.to_string() << "\n";
  }
  if (!(op == comb)) {
    err << diff_text(comb, op) << "\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_clt(std::uint64_t N, unsigned moment, const Parameters& params, bool override_limits, std::ostream& out) {
  if (N == 0) throw UsageError("--N must be >= 1");
  const UniPoly series = clt_moment_series(moment, override_limits);
  const Rational eps(Integer(1), Integer(static_cast<unsigned long>(N)));
  const MultiPoly finite = series.evaluate(MultiPoly(eps));
  const MultiPoly limit = series.coefficient(0);
  const Rational value = finite.evaluate(params.p_value, params.q_value);
  const Rational limit_value = limit.evaluate(params.p_value, params.q_value);
  const Rational distance = abs(value - limit_value);

  json j = header("clt");
  j["N"] = N;
  j["moment"] = moment;
  j["p"] = to_string(params.p_value);
  j["q"] = to_string(params.q_value);
  j["series_in_inverse_N"] = series.to_string("e");
  j["value"] = to_string(value);
  j["limit"] = to_string(limit_value);
  j["distance"] = to_string(distance);
  j["distance_approx"] = distance.get_d();
  j["N_times_distance"] = to_string(distance * Rational(Integer(static_cast<unsigned long>(N))));
  print_json(out, j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordered non-crossing partitions, (p,q)-Fock moments and Kesten laws"};
  app.require_subcommand(1);
  app.fallthrough();
  bool override_limits = false;
  app.add_flag("--override-limits", override_limits, "allow enumerations beyond the default size limits");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "list non-crossing (ordered, pair) partitions of [n]");
  enumerate->add_option("--n", ea.n, "ground set size")->required();
  enumerate->add_flag("--pairs", ea.pairs, "pair partitions only");
  enumerate->add_flag("--ordered", ea.ordered, "all colorings of each partition, with weights p^e q^e'");
  enumerate->add_flag("--covered", ea.covered, "1 and n in the same block");
  enumerate->add_option("--outer", ea.outer, "exact number of outer blocks");
  enumerate->add_flag("--count-only", ea.count_only, "print the count only");
  enumerate->add_option("--output", ea.output, "json or text")->check(CLI::IsMember({"json", "text"}));

  unsigned moment_n = 1;
  std::string route = "all";
  Parameters moment_params;
  auto* moments = app.add_subcommand("moments", "the even moment r_n by several independent routes");
  moments->add_option("--n", moment_n, "moment index (r_n is the 2n-th moment)")->required();
  moments->add_option("--route", route, "all|enum|rec|closed|jacobi|delaney")
      ->check(CLI::IsMember({"all", "enum", "rec", "closed", "jacobi", "delaney"}));
  moment_params.add_to(moments, "optional; also evaluates the polynomial");

  unsigned verify_order = 6;
  std::uint64_t seed = 0x6b657374656eULL;
  bool keep_going = false;
  auto* verify = app.add_subcommand("verify", "run every cross-route identity; exit 1 on the first failure");
  verify->add_option("--order", verify_order, "series order and largest moment index");
  verify->add_option("--seed", seed, "seed for the randomized checks");
  verify->add_flag("--keep-going", keep_going, "run all checks even after a failure");

  Parameters density_params;
  unsigned grid = 200;
  std::string density_output = "csv";
  auto* density = app.add_subcommand(
      "density", "sample the density on [-edge, edge]; CSV columns x,density then atom_position,atom_mass");
  density_params.add_to(density, "default 1");
  density->add_option("--grid", grid, "number of grid intervals");
  density->add_option("--output", density_output, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  Parameters quad_params;
  unsigned nmax = 10;
  double tol = 1e-12;
  auto* quadcheck = app.add_subcommand("quadcheck", "quadrature moments against the exact polynomials");
  quad_params.add_to(quadcheck, "default 1");
  quadcheck->add_option("--nmax", nmax, "largest moment (<= 12)");
  quadcheck->add_option("--tol", tol, "absolute quadrature tolerance");

  std::string signature;
  std::string intervals;
  auto* brownian = app.add_subcommand("brownian", "mixed moment of position operators on interval indicators");
  brownian->add_option("--signature", signature, "interval names in word order, e.g. \"f f g g f f\"")->required();
  brownian->add_option("--intervals", intervals, "e.g. \"g=[0,1],f=[1,2]\"")->required();

  unsigned poisson_n = 1;
  std::string poisson_output = "text";
  auto* poisson = app.add_subcommand("poisson", "vacuum moment of gamma_T^n as a polynomial in p, q, T");
  poisson->add_option("--n", poisson_n, "power")->required();
  poisson->add_option("--output", poisson_output, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::uint64_t clt_N = 100;
  unsigned clt_moment_n = 4;
  Parameters clt_params;
  auto* clt = app.add_subcommand("clt", "exact moments of the normalized sum S_N and their distance to the limit");
  clt->add_option("--N", clt_N, "number of summands")->required();
  clt->add_option("--moment", clt_moment_n, "moment order (<= 6 without override)")->required();
  clt_params.add_to(clt, "default 1");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) {
      ea.override_limits = override_limits;
      return cmd_enumerate(ea, out);
    }
    if (*moments) {
      moment_params.resolve(moments);
      return cmd_moments(moment_n, route, moment_params, override_limits, out, err);
    }
    if (*verify) return cmd_verify(verify_order, seed, keep_going, out, err);
    if (*density) {
      density_params.resolve(density);
      return cmd_density(density_params, grid, density_output, out);
    }
    if (*quadcheck) {
      quad_params.resolve(quadcheck);
      return cmd_quadcheck(quad_params, nmax, tol, out, err);
    }
    if (*brownian) return cmd_brownian(signature, intervals, override_limits, out, err);
    if (*poisson) return cmd_poisson(poisson_n, poisson_output, override_limits, out, err);
    if (*clt) {
      clt_params.resolve(clt);
      return cmd_clt(clt_N, clt_moment_n, clt_params, override_limits, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

}  // namespace kesten::cli
