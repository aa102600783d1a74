// Command-line workbench for the padicops library.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "padicops/crossed.hpp"
#include "padicops/json_io.hpp"
#include "padicops/ktheory.hpp"

using namespace padic;
using padic::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct RunConfig {
  long p = 2;
  int precision = 32;
  long window = 64;
  long margin = -1;  // -1: derive from the operator's bandwidth
  std::string format = "text";
  unsigned long seed = 0;
  std::vector<std::string> files;
  std::string preset;

  bool json_out() const { return format == "json"; }
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--p", cfg.p, "prime p");
  cmd->add_option("--precision", cfg.precision, "relative precision N");
  cmd->add_option("--window", cfg.window, "window size M");
  cmd->add_option("--margin", cfg.margin, "interior margin");
  cmd->add_option("--format", cfg.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", cfg.seed, "seed for randomized suites");
  cmd->add_option("--file", cfg.files, "input file (repeat for several)");
  cmd->add_option("--preset", cfg.preset, "named example input");
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw padic_error(errc::bad_input, "cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

json file_json(const RunConfig& cfg, size_t index) {
  if (cfg.files.size() <= index)
    throw padic_error(errc::bad_input, "missing input file (use --file)");
  return load_json(cfg.files[index]);
}

void emit(const RunConfig& cfg, const json& payload,
          const std::function<void()>& text) {
  if (cfg.json_out())
    std::cout << payload.dump(2) << "\n";
  else
    text();
}

OperatorMatrix all_ones2x2(long p, int prec) {
  OperatorMatrix a(Window::integer_range(0, 1), p, prec);
  auto one = PadicScalar::from_integer(1, p, prec);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) a.set(i, j, one);
  return a;
}

OperatorMatrix zero_divisor_p5(int prec) {
  long p = 5;
  auto alpha = hensel_sqrt(-PadicScalar::from_integer(1, p, prec));
  auto beta = PadicScalar::from_integer(1, p, prec);
  OperatorMatrix a(Window::integer_range(0, 1), p, prec);
  a.set(0, 0, alpha);
  a.set(0, 1, beta);
  a.set(1, 0, -beta);
  a.set(1, 1, alpha);
  return a;
}

// Matrix input: --preset or --file, with the preset fixing p.
OperatorMatrix input_matrix(RunConfig& cfg) {
  if (cfg.preset == "allones2x2") return all_ones2x2(cfg.p, cfg.precision);
  if (cfg.preset == "zerodivisor-p5") {
    cfg.p = 5;
    return zero_divisor_p5(cfg.precision);
  }
  if (!cfg.preset.empty())
    throw padic_error(errc::bad_input, "unknown preset: " + cfg.preset);
  return matrix_from_json(file_json(cfg, 0), cfg.p, cfg.precision);
}

Graph input_graph(const RunConfig& cfg) {
  if (!cfg.preset.empty()) {
    if (cfg.preset.size() > 1 && cfg.preset[0] == 'e') {
      unsigned n = static_cast<unsigned>(std::stoul(cfg.preset.substr(1)));
      return Graph::rose(n);
    }
    throw padic_error(errc::bad_input, "unknown graph preset: " + cfg.preset);
  }
  return graph_from_json(file_json(cfg, 0));
}

std::string scalar_text(const PadicScalar& x) { return x.to_string(); }

// ---- scalar ----------------------------------------------------------------

int run_scalar_arith(RunConfig& cfg, const std::string& lhs,
                     const std::string& op, const std::string& rhs) {
  auto a = PadicScalar::from_integer(mpz_class(lhs), cfg.p, cfg.precision);
  auto b = PadicScalar::from_integer(mpz_class(rhs), cfg.p, cfg.precision);
  PadicScalar r = PadicScalar::zero(cfg.p, cfg.precision);
  if (op == "add")
    r = a + b;
  else if (op == "sub")
    r = a - b;
  else if (op == "mul")
    r = a * b;
  else if (op == "div")
    r = a * b.invert();
  else
    throw padic_error(errc::bad_input, "unknown operation: " + op);
  emit(cfg, json{{"result", scalar_to_json(r)}},
       [&] { std::cout << scalar_text(r) << "\n"; });
  return kOk;
}

int run_scalar_hensel(RunConfig& cfg, const std::string& c) {
  auto x = PadicScalar::from_integer(mpz_class(c), cfg.p, cfg.precision);
  auto r = hensel_sqrt(x);
  emit(cfg, json{{"sqrt", scalar_to_json(r)}},
       [&] { std::cout << scalar_text(r) << "\n"; });
  return kOk;
}

int run_scalar_binom(RunConfig& cfg, const std::string& x, unsigned long n) {
  auto v = PadicScalar::from_integer(mpz_class(x), cfg.p, cfg.precision);
  auto r = padic_binomial(v, n);
  emit(cfg, json{{"binomial", scalar_to_json(r)}},
       [&] { std::cout << scalar_text(r) << "\n"; });
  return kOk;
}

// ---- operator --------------------------------------------------------------

int run_op_norm(RunConfig& cfg) {
  auto m = input_matrix(cfg);
  auto n = op_norm(m);
  emit(cfg, json{{"norm", norm_to_json(n, cfg.p)}},
       [&] { std::cout << norm_to_string(n, m.prime()) << "\n"; });
  return kOk;
}

int run_op_adjoint(RunConfig& cfg) {
  auto m = adjoint(input_matrix(cfg));
  emit(cfg, matrix_to_json(m), [&] {
    std::cout << matrix_to_json(m).dump(2) << "\n";
  });
  return kOk;
}

int run_op_compose(RunConfig& cfg) {
  auto a = matrix_from_json(file_json(cfg, 0), cfg.p, cfg.precision);
  auto b = matrix_from_json(file_json(cfg, 1), cfg.p, cfg.precision);
  auto m = compose(a, b);
  emit(cfg, matrix_to_json(m), [&] {
    std::cout << matrix_to_json(m).dump(2) << "\n";
  });
  return kOk;
}

int run_op_classify(RunConfig& cfg) {
  auto m = input_matrix(cfg);
  auto c = classify(m);
  json out{{"unitary", c.unitary},
           {"projection", c.projection},
           {"isometry", c.isometry},
           {"co_isometry", c.co_isometry},
           {"partial_isometry", c.partial_isometry},
           {"self_adjoint", c.self_adjoint}};
  emit(cfg, out, [&] {
    for (auto& [key, value] : out.items())
      std::cout << key << ": " << (value.get<bool>() ? "yes" : "no") << "\n";
  });
  return kOk;
}

int run_op_cstar(RunConfig& cfg) {
  auto m = input_matrix(cfg);
  auto rep = cstar_defect(m);
  json out{{"norm_sq", norm_to_json(rep.norm_sq, m.prime())},
           {"norm_adj_prod", norm_to_json(rep.norm_adj_prod, m.prime())},
           {"identity_holds", rep.identity_holds}};
  emit(cfg, out, [&] {
    std::cout << "||T||^2    = " << norm_to_string(rep.norm_sq, m.prime())
              << "\n||T*T||    = "
              << norm_to_string(rep.norm_adj_prod, m.prime())
              << "\nidentity_holds = "
              << (rep.identity_holds ? "true" : "false") << "\n";
  });
  return kOk;
}

int run_op_cuntz_verify(RunConfig& cfg, unsigned n) {
  if (cfg.preset == "cuntz-n2") n = 2;
  auto fam = cuntz_family(n, static_cast<size_t>(cfg.window), cfg.p,
                          cfg.precision);
  auto w = fam[0].window();
  auto id = OperatorMatrix::identity(w, cfg.p, cfg.precision);
  auto zero = OperatorMatrix::zero(w, cfg.p, cfg.precision);
  bool ok = true;
  for (unsigned i = 0; i < n && ok; ++i)
    for (unsigned j = 0; j < n && ok; ++j)
      ok = compose(adjoint(fam[i]), fam[j])
               .congruent_on_interior(i == j ? id : zero);
  auto sum = zero;
  for (const auto& s : fam) sum = sum + compose(s, adjoint(s));
  ok = ok && sum.congruent_on_interior(id);
  json out{{"n", n},
           {"window", cfg.window},
           {"interior", cuntz_interior_size(n, static_cast<size_t>(cfg.window))},
           {"relations_hold", ok}};
  emit(cfg, out, [&] {
    std::cout << "Cuntz relations for n=" << n << " on M=" << cfg.window
              << ": " << (ok ? "hold" : "FAIL") << " (interior "
              << out["interior"] << ")\n";
  });
  return ok ? kOk : kCheckFailed;
}

int run_op_shift(RunConfig& cfg, const std::string& direction) {
  auto w = Window::integer_range(0, cfg.window - 1)
               .with_margin(0, cfg.margin < 0 ? 1 : static_cast<size_t>(cfg.margin));
  auto m = shift_operator(
      w, direction == "left" ? ShiftDirection::left : ShiftDirection::right,
      cfg.p, cfg.precision);
  emit(cfg, matrix_to_json(m), [&] {
    std::cout << matrix_to_json(m).dump(2) << "\n";
  });
  return kOk;
}

int run_op_tensor(RunConfig& cfg) {
  auto a = matrix_from_json(file_json(cfg, 0), cfg.p, cfg.precision);
  auto b = matrix_from_json(file_json(cfg, 1), cfg.p, cfg.precision);
  auto m = kronecker(a, b);
  emit(cfg, matrix_to_json(m), [&] {
    std::cout << matrix_to_json(m).dump(2) << "\n";
  });
  return kOk;
}

// ---- mahler ----------------------------------------------------------------

int run_mahler_coeffs(RunConfig& cfg) {
  auto values_json = file_json(cfg, 0);
  std::vector<PadicScalar> values;
  for (const auto& v : values_json)
    values.push_back(scalar_from_json(v, cfg.p, cfg.precision));
  auto coeffs = mahler_coefficients(values);
  json out = json::array();
  for (const auto& c : coeffs) out.push_back(scalar_to_json(c));
  emit(cfg, out, [&] {
    for (size_t n = 0; n < coeffs.size(); ++n)
      std::cout << "c_" << n << " = " << scalar_text(coeffs[n]) << "\n";
  });
  return kOk;
}

int run_mahler_eval(RunConfig& cfg, unsigned n_max) {
  auto coeffs_json = file_json(cfg, 0);
  std::vector<PadicScalar> coeffs;
  for (const auto& c : coeffs_json)
    coeffs.push_back(scalar_from_json(c, cfg.p, cfg.precision));
  auto a = matrix_from_json(file_json(cfg, 1), cfg.p, cfg.precision);
  auto m = mahler_evaluate(coeffs, a, n_max);
  emit(cfg, matrix_to_json(m), [&] {
    std::cout << matrix_to_json(m).dump(2) << "\n";
  });
  return kOk;
}

// ---- algebra ---------------------------------------------------------------

GroupAlgebraElement element_from_json(const json& j, const FiniteGroup& g,
                                      long p, int prec) {
  GroupAlgebraElement phi(g, p, prec);
  for (const auto& [label, value] : j.items())
    phi.set(g.index_of(label), scalar_from_json(value, p, prec));
  return phi;
}

json element_to_json(const GroupAlgebraElement& phi) {
  json out = json::object();
  for (size_t g = 0; g < phi.group().order(); ++g)
    if (!phi.at(g).below_precision())
      out[phi.group().label(g)] = scalar_to_json(phi.at(g));
  return out;
}

int run_algebra_convolve(RunConfig& cfg) {
  auto j = file_json(cfg, 0);
  auto g = group_from_json(j.at("group"));
  auto phi = element_from_json(j.at("phi"), g, cfg.p, cfg.precision);
  auto psi = element_from_json(j.at("psi"), g, cfg.p, cfg.precision);
  auto conv = convolve(phi, psi);
  emit(cfg, element_to_json(conv), [&] {
    std::cout << element_to_json(conv).dump(2) << "\n";
  });
  return kOk;
}

int run_algebra_rep(RunConfig& cfg) {
  auto j = file_json(cfg, 0);
  auto g = group_from_json(j.at("group"));
  auto phi = element_from_json(j.at("phi"), g, cfg.p, cfg.precision);
  auto m = regular_representation(phi);
  emit(cfg, matrix_to_json(m), [&] {
    std::cout << matrix_to_json(m).dump(2) << "\n";
  });
  return kOk;
}

int run_algebra_twisted_rep(RunConfig& cfg) {
  auto j = file_json(cfg, 0);
  auto omega = cocycle_from_json(j.at("cocycle"), cfg.p, cfg.precision);
  auto phi =
      element_from_json(j.at("phi"), omega.group(), cfg.p, cfg.precision);
  auto m = twisted_regular_representation(phi, omega);
  emit(cfg, matrix_to_json(m), [&] {
    std::cout << matrix_to_json(m).dump(2) << "\n";
  });
  return kOk;
}

CrossedProductElement crossed_from_json(const json& j, const GroupAction& act,
                                        long p, int prec) {
  CrossedProductElement phi(act, p, prec);
  for (const auto& [glabel, fiber] : j.items()) {
    size_t g = act.group().index_of(glabel);
    for (const auto& [xlabel, value] : fiber.items()) {
      auto x = std::find(act.space().begin(), act.space().end(), xlabel);
      if (x == act.space().end())
        throw padic_error(errc::bad_input, "unknown point: " + xlabel);
      phi.set(g, static_cast<size_t>(x - act.space().begin()),
              scalar_from_json(value, p, prec));
    }
  }
  return phi;
}

json crossed_to_json(const CrossedProductElement& phi) {
  json out = json::object();
  const auto& act = phi.action();
  for (size_t g = 0; g < act.group().order(); ++g) {
    json fiber = json::object();
    for (size_t x = 0; x < act.space().size(); ++x)
      if (!phi.at(g, x).below_precision())
        fiber[act.space()[x]] = scalar_to_json(phi.at(g, x));
    if (!fiber.empty()) out[act.group().label(g)] = fiber;
  }
  return out;
}

int run_algebra_crossed(RunConfig& cfg) {
  auto j = file_json(cfg, 0);
  auto act = action_from_json(j.at("action"));
  auto phi = crossed_from_json(j.at("phi"), act, cfg.p, cfg.precision);
  auto psi = crossed_from_json(j.at("psi"), act, cfg.p, cfg.precision);
  auto conv = crossed_convolve(phi, psi);
  emit(cfg, crossed_to_json(conv), [&] {
    std::cout << crossed_to_json(conv).dump(2) << "\n";
  });
  return kOk;
}

int run_algebra_action_groupoid(RunConfig& cfg) {
  auto j = file_json(cfg, 0);
  auto act = action_from_json(j.at("action"));
  auto gpd = FiniteGroupoid::action_groupoid(act);
  auto phi = crossed_from_json(j.at("phi"), act, cfg.p, cfg.precision);
  auto img = action_groupoid_iso(phi, gpd);
  json values = json::object();
  for (size_t a = 0; a < gpd.arrow_count(); ++a)
    if (!img.at(a).below_precision())
      values[gpd.arrow_label(a)] = scalar_to_json(img.at(a));
  json out{{"groupoid", groupoid_to_json(gpd)}, {"values", values}};
  emit(cfg, out, [&] { std::cout << values.dump(2) << "\n"; });
  return kOk;
}

int run_algebra_rotation_verify(RunConfig& cfg, long z_in, long half_size) {
  if (cfg.preset == "rotation-z2-p5") {
    cfg.p = 5;
    z_in = 2;
  } else if (!cfg.preset.empty()) {
    throw padic_error(errc::bad_input, "unknown preset: " + cfg.preset);
  }
  auto z = PadicScalar::from_integer(z_in, cfg.p, cfg.precision);
  auto gen = rotation_generators(z, half_size);
  long margin = cfg.margin < 0 ? 1 : cfg.margin;
  bool ok = rotation_relation_check(gen, z, half_size, margin);
  json out{{"z", z_in},       {"p", cfg.p},      {"half_size", half_size},
           {"margin", margin}, {"relation_holds", ok}};
  emit(cfg, out, [&] {
    std::cout << "UV = zVU with z=" << z_in << " at p=" << cfg.p
              << " on {-M..M}^2, M=" << half_size << ": "
              << (ok ? "holds" : "FAIL") << "\n";
  });
  return ok ? kOk : kCheckFailed;
}

// ---- tate-check ------------------------------------------------------------

int run_tate_check(RunConfig& cfg, unsigned degree, unsigned trials) {
  long p = cfg.p;
  int N = cfg.precision;
  long m = cfg.window;
  long margin = cfg.margin < 0 ? static_cast<long>(degree) + 1 : cfg.margin;
  if (m < 2 * margin + 1)
    throw padic_error(errc::bad_input, "window too small for the margin");
  auto w = Window::integer_range(0, m - 1, static_cast<size_t>(margin));
  auto tau = shift_operator(w, ShiftDirection::right, p, N) +
             shift_operator(w, ShiftDirection::left, p, N);
  std::vector<OperatorMatrix> powers{OperatorMatrix::identity(w, p, N)};
  for (unsigned k = 1; k <= degree; ++k)
    powers.push_back(compose(powers.back(), tau));
  std::mt19937_64 rng(cfg.seed);
  unsigned passed = 0;
  for (unsigned iter = 0; iter < trials; ++iter) {
    size_t deg = rng() % (degree + 1);
    std::vector<PadicScalar> coeff;
    bool any = false;
    long best = N;
    for (size_t k = 0; k <= deg; ++k) {
      auto x = PadicScalar::from_integer(static_cast<long>(rng() % 10000), p, N);
      coeff.push_back(x);
      if (!x.below_precision()) {
        any = true;
        best = std::min(best, x.valuation());
      }
    }
    auto acc = OperatorMatrix::zero(w, p, N);
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = 0; j < w.size(); ++j) {
        auto sum = PadicScalar::zero(p, N);
        for (size_t k = 0; k <= deg; ++k) {
          const auto& e = powers[k].at(i, j);
          if (e.below_precision() || coeff[k].below_precision()) continue;
          sum = sum + coeff[k] * e;
        }
        acc.set(i, j, sum);
      }
    auto norm = op_norm_interior(acc);
    bool ok = any ? norm == NormValue::exact(best) : !norm.is_exact();
    if (ok) ++passed;
  }
  bool all = passed == trials;
  json out{{"p", p},          {"window", m},     {"degree", degree},
           {"trials", trials}, {"passed", passed}, {"isometry_holds", all}};
  emit(cfg, out, [&] {
    std::cout << "Gauss-norm isometry ||f(tau)|| = max|a_k| at p=" << p << ": "
              << passed << "/" << trials << " trials "
              << (all ? "pass" : "FAIL") << "\n";
  });
  return all ? kOk : kCheckFailed;
}

// ---- ktheory ---------------------------------------------------------------

std::pair<long, long> parse_range(const std::string& range) {
  auto dots = range.find("..");
  if (dots == std::string::npos)
    throw padic_error(errc::bad_input, "range must look like -2..6");
  return {std::stol(range.substr(0, dots)), std::stol(range.substr(dots + 2))};
}

int run_ktheory_quillen(RunConfig& cfg, const std::string& range) {
  auto [lo, hi] = parse_range(range);
  json table = json::array();
  for (long m = lo; m <= hi; ++m) {
    auto g = quillen_k(m, cfg.p);
    table.push_back(
        json{{"degree", m}, {"group", group_report_to_json(g)}});
  }
  emit(cfg, table, [&] {
    for (long m = lo; m <= hi; ++m)
      std::cout << "K_" << m << "(F_" << cfg.p
                << ") = " << quillen_k(m, cfg.p).to_string() << "\n";
  });
  return kOk;
}

int run_ktheory_graph(RunConfig& cfg, long degree) {
  auto graph = input_graph(cfg);
  auto ext = graph_kh(graph, cfg.p, degree);
  emit(cfg, kh_report_to_json(degree, ext), [&] {
    std::cout << "KH_" << degree << " = "
              << (ext.resolved ? ext.resolved->to_string()
                               : "extension of " + ext.quot.to_string() +
                                     " by " + ext.sub.to_string())
              << "\n";
  });
  return kOk;
}

int run_ktheory_cuntz(RunConfig& cfg, unsigned n, long degree) {
  auto g = cuntz_kh(n, cfg.p, degree);
  emit(cfg,
       json{{"degree", degree}, {"n", n}, {"group", group_report_to_json(g)}},
       [&] {
         std::cout << "KH_" << degree << "(O_" << n << ") = " << g.to_string()
                   << "\n";
       });
  return kOk;
}

int run_ktheory_laurent(RunConfig& cfg, long degree) {
  auto g = laurent_kh(cfg.p, degree);
  emit(cfg, json{{"degree", degree}, {"group", group_report_to_json(g)}},
       [&] {
         std::cout << "KH_" << degree << " = " << g.to_string() << "\n";
       });
  return kOk;
}

int run_ktheory_rotation(RunConfig& cfg, long lambda, long degree) {
  auto r = rotation_kh(lambda, cfg.p, degree);
  json out{{"degree", degree},
           {"lambda", lambda},
           {"c_lambda", extension_to_json(r.c_lambda)},
           {"a_lambda", r.a_lambda ? group_report_to_json(*r.a_lambda)
                                   : json(nullptr)},
           {"rational_dim", r.rational_dim},
           {"notes", r.notes.empty() ? r.c_lambda.notes : r.notes}};
  emit(cfg, out, [&] {
    std::cout << "KH_" << degree << "(C_lambda) = "
              << (r.c_lambda.resolved ? r.c_lambda.resolved->to_string()
                                      : "unresolved extension")
              << "\n";
    if (r.a_lambda)
      std::cout << "KH_" << degree << "(A_lambda) = " << r.a_lambda->to_string()
                << "\n";
    std::cout << "dim_Q (KH_" << degree << "(A_lambda) (x) Q) = "
              << r.rational_dim << "\n";
    for (const auto& n : r.c_lambda.notes) std::cout << "note: " << n << "\n";
  });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact p-adic operator algebra workbench"};
  app.require_subcommand(1);
  RunConfig cfg;
  int rc = kOk;
  std::function<void()> action;

  // scalar
  auto* scalar = app.add_subcommand("scalar", "scalar arithmetic in Q_p");
  scalar->require_subcommand(1);
  {
    static std::string lhs, op, rhs;
    auto* arith = scalar->add_subcommand("arith", "a (add|sub|mul|div) b");
    add_common(arith, cfg);
    arith->add_option("lhs", lhs, "left operand")->required();
    arith->add_option("op", op, "operation")
        ->required()
        ->check(CLI::IsMember({"add", "sub", "mul", "div"}));
    arith->add_option("rhs", rhs, "right operand")->required();
    arith->callback([&] { rc = run_scalar_arith(cfg, lhs, op, rhs); });

    static std::string c;
    auto* hensel = scalar->add_subcommand("hensel", "square root by Hensel lifting");
    add_common(hensel, cfg);
    hensel->add_option("c", c, "value")->required();
    hensel->callback([&] { rc = run_scalar_hensel(cfg, c); });

    static std::string x;
    static unsigned long n = 0;
    auto* binom = scalar->add_subcommand("binom", "binomial coefficient binom(x, n)");
    add_common(binom, cfg);
    binom->add_option("x", x, "upper argument")->required();
    binom->add_option("n", n, "lower argument")->required();
    binom->callback([&] { rc = run_scalar_binom(cfg, x, n); });
  }

  // operator
  auto* op = app.add_subcommand("operator", "operator matrices");
  op->require_subcommand(1);
  {
    auto* norm = op->add_subcommand("norm", "operator norm");
    add_common(norm, cfg);
    norm->callback([&] { rc = run_op_norm(cfg); });

    auto* adj = op->add_subcommand("adjoint", "transpose");
    add_common(adj, cfg);
    adj->callback([&] { rc = run_op_adjoint(cfg); });

    auto* comp = op->add_subcommand("compose", "product of two matrices");
    add_common(comp, cfg);
    comp->callback([&] { rc = run_op_compose(cfg); });

    auto* cls = op->add_subcommand("classify", "unitary/projection/isometry flags");
    add_common(cls, cfg);
    cls->callback([&] { rc = run_op_classify(cfg); });

    auto* cstar = op->add_subcommand("cstar-check", "C*-identity defect report");
    add_common(cstar, cfg);
    cstar->callback([&] { rc = run_op_cstar(cfg); });

    static unsigned cuntz_n = 2;
    auto* cuntz = op->add_subcommand("cuntz-verify", "Cuntz family relations");
    add_common(cuntz, cfg);
    cuntz->add_option("--n", cuntz_n, "number of isometries");
    cuntz->callback([&] { rc = run_op_cuntz_verify(cfg, cuntz_n); });

    static std::string direction = "right";
    auto* shift = op->add_subcommand("shift", "shift operator matrix");
    add_common(shift, cfg);
    shift->add_option("--direction", direction, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    shift->callback([&] { rc = run_op_shift(cfg, direction); });

    auto* tensor = op->add_subcommand("tensor", "Kronecker product");
    add_common(tensor, cfg);
    tensor->callback([&] { rc = run_op_tensor(cfg); });
  }

  // mahler
  auto* mahler = app.add_subcommand("mahler", "Mahler coefficient calculus");
  mahler->require_subcommand(1);
  {
    auto* coeffs = mahler->add_subcommand("coeffs", "finite-difference coefficients");
    add_common(coeffs, cfg);
    coeffs->callback([&] { rc = run_mahler_coeffs(cfg); });

    static unsigned n_max = 8;
    auto* eval = mahler->add_subcommand("eval", "functional calculus f(A)");
    add_common(eval, cfg);
    eval->add_option("--nmax", n_max, "number of Mahler terms");
    eval->callback([&] { rc = run_mahler_eval(cfg, n_max); });
  }

  // algebra
  auto* algebra = app.add_subcommand("algebra", "convolution algebras");
  algebra->require_subcommand(1);
  {
    auto* conv = algebra->add_subcommand("convolve", "group algebra product");
    add_common(conv, cfg);
    conv->callback([&] { rc = run_algebra_convolve(cfg); });

    auto* rep = algebra->add_subcommand("rep", "left regular representation");
    add_common(rep, cfg);
    rep->callback([&] { rc = run_algebra_rep(cfg); });

    auto* trep = algebra->add_subcommand("twisted-rep",
                                         "cocycle-twisted representation");
    add_common(trep, cfg);
    trep->callback([&] { rc = run_algebra_twisted_rep(cfg); });

    auto* crossed = algebra->add_subcommand("crossed", "crossed product convolution");
    add_common(crossed, cfg);
    crossed->callback([&] { rc = run_algebra_crossed(cfg); });

    auto* agpd = algebra->add_subcommand("action-groupoid",
                                         "image in the action groupoid algebra");
    add_common(agpd, cfg);
    agpd->callback([&] { rc = run_algebra_action_groupoid(cfg); });

    static long z = 2;
    static long half_size = 4;
    auto* rot = algebra->add_subcommand("rotation-verify", "UV = zVU check");
    add_common(rot, cfg);
    rot->add_option("--z", z, "rotation parameter (unit)");
    rot->add_option("--half-size", half_size, "window half size M");
    rot->callback([&] { rc = run_algebra_rotation_verify(cfg, z, half_size); });
  }

  // tate-check
  {
    static unsigned degree = 20;
    static unsigned trials = 50;
    auto* tate = app.add_subcommand("tate-check", "Gauss-norm isometry experiment");
    add_common(tate, cfg);
    tate->add_option("--degree", degree, "max polynomial degree");
    tate->add_option("--trials", trials, "number of random polynomials");
    tate->callback([&] {
      if (cfg.preset == "tate-tau") {
        cfg.window = 200;
        degree = 20;
      } else if (!cfg.preset.empty()) {
        throw padic_error(errc::bad_input, "unknown preset: " + cfg.preset);
      }
      rc = run_tate_check(cfg, degree, trials);
    });
  }

  // ktheory
  auto* kth = app.add_subcommand("ktheory", "analytic K-theory computations");
  kth->require_subcommand(1);
  {
    static std::string range = "0..6";
    auto* quillen = kth->add_subcommand("quillen", "K_m(F_p) table");
    add_common(quillen, cfg);
    quillen->add_option("--range", range, "degree range lo..hi");
    quillen->callback([&] { rc = run_ktheory_quillen(cfg, range); });

    static long degree = 0;
    auto* graph = kth->add_subcommand("graph", "graph algebra KH");
    add_common(graph, cfg);
    graph->add_option("--degree", degree, "K-theory degree");
    graph->callback([&] { rc = run_ktheory_graph(cfg, degree); });

    static unsigned n = 2;
    static long cdeg = 0;
    auto* cuntz = kth->add_subcommand("cuntz", "Cuntz algebra KH closed form");
    add_common(cuntz, cfg);
    cuntz->add_option("--n", n, "number of generators");
    cuntz->add_option("--degree", cdeg, "K-theory degree");
    cuntz->callback([&] { rc = run_ktheory_cuntz(cfg, n, cdeg); });

    static long ldeg = 0;
    auto* laurent = kth->add_subcommand("laurent", "Laurent polynomial KH");
    add_common(laurent, cfg);
    laurent->add_option("--degree", ldeg, "K-theory degree");
    laurent->callback([&] { rc = run_ktheory_laurent(cfg, ldeg); });

    static long lambda = 2;
    static long rdeg = 1;
    auto* rot = kth->add_subcommand("rotation", "rotation algebra KH");
    add_common(rot, cfg);
    rot->add_option("--lambda", lambda, "rotation parameter residue");
    rot->add_option("--degree", rdeg, "K-theory degree");
    rot->callback([&] { rc = run_ktheory_rotation(cfg, lambda, rdeg); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  } catch (const padic_error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return kBadInput;
  } catch (const json::exception& e) {
    std::cerr << "error (bad_input): " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return rc;
}
