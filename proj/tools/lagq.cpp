// lagq: command-line front end for the exact Laguerre constructors.
//
// Subcommands: coeffs, table, eval, verify, bench. Rationals cross the CLI
// boundary as strings ("p/q"), never as floats, so exactness survives
// serialization. Exit codes: 0 success, 1 verification failure, 2 usage or
// parameter error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lagq/lagq.hpp"

namespace {

using nlohmann::json;
using namespace lagq;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) out.push_back(item);
  return out;
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> out;
  for (const auto& name : split_csv(text)) out.push_back(method_from_string(name));
  if (out.empty()) throw std::invalid_argument("no methods given");
  return out;
}

void require_method_supports_q(Method m, int q) {
  if (q != 1 && m != Method::series && m != Method::closed)
    throw unsupported_parameter("method '" + std::string(to_string(m)) +
                                "' requires q = 1 (got q = " + std::to_string(q) + ")");
}

Poly construct(const Params& params, int n, Method m, int composition_cap) {
  switch (m) {
    case Method::series: return laguerre_series(params, n).poly;
    case Method::closed: return laguerre_closed(params, n).poly;
    case Method::recurrence:
      return laguerre_recurrence(params, n)[static_cast<std::size_t>(n)].poly;
    case Method::determinant: return laguerre_det(params, n).poly;
    case Method::composition: return laguerre_composition(params, n, composition_cap).poly;
  }
  throw std::invalid_argument("unknown method");
}

json params_json(const Params& params, int n) {
  return json{{"alpha", params.alpha()},
              {"beta", params.beta().to_string()},
              {"q", params.q()},
              {"n", n}};
}

json coeffs_json(const Params& params, int n, Method m, const Poly& p) {
  json j = params_json(params, n);
  j["method"] = std::string(to_string(m));
  j["coeffs"] = p.to_strings();
  return j;
}

void print_coeffs_csv(std::ostream& os, const Poly& p) {
  os << "k,coeff\n";
  const auto strings = p.to_strings();
  for (std::size_t k = 0; k < strings.size(); ++k) os << k << "," << strings[k] << "\n";
}

json float_eval_json(const FloatEval& fe) {
  json j{{"value", fe.value}, {"abs_term_sum", fe.abs_term_sum}};
  if (std::isfinite(fe.condition))
    j["condition"] = fe.condition;
  else
    j["condition"] = "inf";
  return j;
}

json point_json(const GridPoint& pt) {
  return json{{"alpha", pt.alpha}, {"beta", pt.beta.to_string()}, {"q", pt.q}, {"n", pt.n}};
}

json report_json(const VerifyReport& report) {
  json grid = json::array();
  std::size_t pair_count = 0;
  for (const auto& point : report.points) {
    json pairs = json::array();
    for (const auto& pc : point.pairs) {
      pairs.push_back(json{{"a", std::string(to_string(pc.a))},
                           {"b", std::string(to_string(pc.b))},
                           {"pass", pc.pass}});
      ++pair_count;
    }
    json entry = point_json(point.point);
    entry["pairs"] = pairs;
    entry["pass"] = point.pass();
    grid.push_back(std::move(entry));
  }
  json j{{"pass", report.pass()},
         {"points", report.points.size()},
         {"pairs_checked", pair_count},
         {"grid", std::move(grid)}};
  if (report.first_discrepancy) {
    const auto& d = *report.first_discrepancy;
    json dj = point_json(d.point);
    dj["method_a"] = std::string(to_string(d.a));
    dj["method_b"] = std::string(to_string(d.b));
    dj["coeff_index"] = d.coeff_index;
    dj["value_a"] = d.lhs.to_string();
    dj["value_b"] = d.rhs.to_string();
    j["first_discrepancy"] = std::move(dj);
  } else {
    j["first_discrepancy"] = nullptr;
  }
  return j;
}

struct CoeffsArgs {
  int alpha = 1;
  std::string beta = "0";
  int q = 1;
  int n = 0;
  int nmax = 0;
  std::string method = "closed";
  std::string format = "plain";
  int composition_cap = kDefaultCompositionCap;
};

int run_coeffs(const CoeffsArgs& a) {
  Params params(a.alpha, Rational::parse(a.beta), a.q);
  Method m = method_from_string(a.method);
  require_method_supports_q(m, a.q);
  Poly p = construct(params, a.n, m, a.composition_cap);
  if (a.format == "json") {
    std::cout << coeffs_json(params, a.n, m, p).dump() << "\n";
  } else if (a.format == "csv") {
    print_coeffs_csv(std::cout, p);
  } else {
    std::cout << p.pretty() << "\n";
  }
  return 0;
}

int run_table(const CoeffsArgs& a) {
  Params params(a.alpha, Rational::parse(a.beta), a.q);
  Method m = method_from_string(a.method);
  require_method_supports_q(m, a.q);

  std::vector<Poly> polys;
  if (m == Method::recurrence) {
    for (auto& r : laguerre_recurrence(params, a.nmax)) polys.push_back(std::move(r.poly));
  } else {
    for (int n = 0; n <= a.nmax; ++n) {
      if (m == Method::composition && n > a.composition_cap) break;
      polys.push_back(construct(params, n, m, a.composition_cap));
    }
  }

  if (a.format == "json") {
    json arr = json::array();
    for (std::size_t n = 0; n < polys.size(); ++n)
      arr.push_back(coeffs_json(params, static_cast<int>(n), m, polys[n]));
    std::cout << arr.dump() << "\n";
  } else if (a.format == "csv") {
    std::cout << "n,k,coeff\n";
    for (std::size_t n = 0; n < polys.size(); ++n) {
      const auto strings = polys[n].to_strings();
      for (std::size_t k = 0; k < strings.size(); ++k)
        std::cout << n << "," << k << "," << strings[k] << "\n";
    }
  } else {
    for (std::size_t n = 0; n < polys.size(); ++n)
      std::cout << "n=" << n << ": " << polys[n].pretty() << "\n";
  }
  return 0;
}

struct EvalArgs {
  std::string alpha = "1";
  std::string beta = "0";
  int q = 1;
  int n = 0;
  std::string z = "0";
  std::string method = "closed";
  std::string format = "plain";
  bool use_float = false;
  int composition_cap = kDefaultCompositionCap;
};

int run_eval(const EvalArgs& a) {
  if (a.use_float) {
    const double alpha = Rational::parse(a.alpha).to_double();
    const double beta = Rational::parse(a.beta).to_double();
    const double z = Rational::parse(a.z).to_double();
    FloatEval fe = laguerre_eval_float(alpha, beta, a.q, a.n, z);
    if (a.format == "json") {
      json j{{"alpha", alpha}, {"beta", beta}, {"q", a.q}, {"n", a.n}, {"z", z}};
      j.update(float_eval_json(fe));
      std::cout << j.dump() << "\n";
    } else {
      std::cout.precision(17);
      std::cout << "value=" << fe.value << " abs_term_sum=" << fe.abs_term_sum
                << " condition=" << fe.condition << "\n";
    }
    return 0;
  }

  // Exact path: alpha must be a positive integer, z an exact rational.
  Rational alpha_r = Rational::parse(a.alpha);
  if (!alpha_r.is_integer())
    throw std::domain_error("exact eval needs an integer alpha; use --float for real alpha");
  Params params(static_cast<int>(alpha_r.numerator().convert_to<long long>()),
                Rational::parse(a.beta), a.q);
  Method m = method_from_string(a.method);
  require_method_supports_q(m, a.q);
  Rational z = Rational::parse(a.z);
  Rational value = construct(params, a.n, m, a.composition_cap).eval(z);
  if (a.format == "json") {
    json j = params_json(params, a.n);
    j["method"] = std::string(to_string(m));
    j["z"] = z.to_string();
    j["value"] = value.to_string();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << value.to_string() << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string alphas = "1,2,3";
  std::string betas = "0,1/2,-1/3,7/2";
  std::string qs = "1";
  int nmax = 12;
  std::string methods = "series,closed,recurrence,determinant,composition";
  int composition_nmax = 10;
  std::string format = "plain";
  std::string inject_fault;  // "method,n,k" test hook
};

int run_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  opt.alphas.clear();
  for (const auto& s : split_csv(a.alphas)) opt.alphas.push_back(std::stoi(s));
  opt.betas.clear();
  for (const auto& s : split_csv(a.betas)) opt.betas.push_back(Rational::parse(s));
  opt.qs.clear();
  for (const auto& s : split_csv(a.qs)) opt.qs.push_back(std::stoi(s));
  opt.nmax = a.nmax;
  opt.methods = parse_methods(a.methods);
  opt.composition_nmax = a.composition_nmax;
  if (!a.inject_fault.empty()) {
    auto parts = split_csv(a.inject_fault);
    if (parts.size() != 3)
      throw std::invalid_argument("--inject-fault expects 'method,n,k'");
    opt.fault = FaultInjection{method_from_string(parts[0]), std::stoi(parts[1]),
                               std::stoi(parts[2])};
  }

  VerifyReport report = run_verify(opt);

  if (a.format == "json") {
    std::cout << report_json(report).dump() << "\n";
  } else {
    std::size_t pair_count = 0;
    for (const auto& point : report.points) {
      pair_count += point.pairs.size();
      if (point.pass()) continue;
      std::cout << "FAIL alpha=" << point.point.alpha << " beta=" << point.point.beta
                << " q=" << point.point.q << " n=" << point.point.n << ":";
      for (const auto& pc : point.pairs)
        if (!pc.pass) std::cout << " " << to_string(pc.a) << "!=" << to_string(pc.b);
      std::cout << "\n";
    }
    if (report.first_discrepancy) {
      const auto& d = *report.first_discrepancy;
      std::cout << "first discrepancy: alpha=" << d.point.alpha << " beta=" << d.point.beta
                << " q=" << d.point.q << " n=" << d.point.n << " " << to_string(d.a) << " vs "
                << to_string(d.b) << " at coefficient " << d.coeff_index << ": " << d.lhs
                << " != " << d.rhs << "\n";
    }
    std::cout << (report.pass() ? "verify: PASS" : "verify: FAIL") << " ("
              << report.points.size() << " grid points, " << pair_count
              << " method pairs)\n";
  }
  return report.pass() ? 0 : 1;
}

struct BenchArgs {
  int alpha = 1;
  std::string beta = "0";
  int q = 1;
  int nmax = 12;
  std::string methods = "series,closed,recurrence,determinant,composition";
  std::string format = "plain";
  int composition_cap = kDefaultCompositionCap;
};

int run_bench(const BenchArgs& a) {
  Params params(a.alpha, Rational::parse(a.beta), a.q);
  auto methods = parse_methods(a.methods);
  for (Method m : methods) require_method_supports_q(m, a.q);

  struct Row {
    Method method;
    int n;
    std::int64_t nanos;
  };
  std::vector<Row> rows;
  for (Method m : methods) {
    for (int n = 0; n <= a.nmax; ++n) {
      if (m == Method::composition && n > a.composition_cap) break;
      const auto start = std::chrono::steady_clock::now();
      Poly p = construct(params, n, m, a.composition_cap);
      const auto stop = std::chrono::steady_clock::now();
      (void)p;
      rows.push_back(
          {m, n, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()});
    }
  }

  if (a.format == "csv") {
    std::cout << "method,n,nanos\n";
    for (const auto& r : rows)
      std::cout << to_string(r.method) << "," << r.n << "," << r.nanos << "\n";
  } else if (a.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(json{{"method", std::string(to_string(r.method))},
                         {"n", r.n},
                         {"nanos", r.nanos}});
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << to_string(r.method) << " n=" << r.n << " " << r.nanos << " ns\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generalized Laguerre polynomial toolkit"};
  app.require_subcommand(1);

  static const std::string kFormats = "plain, json, csv";

  CoeffsArgs coeffs;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "coefficient vector of one polynomial");
  coeffs_cmd->add_option("--alpha", coeffs.alpha, "alpha (positive integer)")->required();
  coeffs_cmd->add_option("--beta", coeffs.beta, "beta as p/q, integer, or decimal (> -1)");
  coeffs_cmd->add_option("--q", coeffs.q, "series step q (positive integer)");
  coeffs_cmd->add_option("--n", coeffs.n, "order n")->required();
  coeffs_cmd->add_option("--method", coeffs.method,
                         "series|closed|recurrence|determinant|composition");
  coeffs_cmd->add_option("--format", coeffs.format, kFormats);
  coeffs_cmd->add_option("--composition-cap", coeffs.composition_cap,
                         "max order for the composition method");

  CoeffsArgs table;
  auto* table_cmd = app.add_subcommand("table", "coefficient vectors for n = 0..nmax");
  table_cmd->add_option("--alpha", table.alpha, "alpha (positive integer)")->required();
  table_cmd->add_option("--beta", table.beta, "beta as p/q, integer, or decimal (> -1)");
  table_cmd->add_option("--q", table.q, "series step q (positive integer)");
  table_cmd->add_option("--nmax", table.nmax, "largest order")->required();
  table_cmd->add_option("--method", table.method,
                        "series|closed|recurrence|determinant|composition");
  table_cmd->add_option("--format", table.format, kFormats);
  table_cmd->add_option("--composition-cap", table.composition_cap,
                        "max order for the composition method");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate at a point");
  eval_cmd->add_option("--alpha", eval.alpha, "alpha (integer; any real > 0 with --float)")
      ->required();
  eval_cmd->add_option("--beta", eval.beta, "beta as p/q, integer, or decimal (> -1)");
  eval_cmd->add_option("--q", eval.q, "series step q (positive integer)");
  eval_cmd->add_option("--n", eval.n, "order n")->required();
  eval_cmd->add_option("--z", eval.z, "evaluation point (exact rational unless --float)")
      ->required();
  eval_cmd->add_option("--method", eval.method, "construction route for the exact path");
  eval_cmd->add_flag("--float", eval.use_float,
                     "double-precision series evaluation (reports value, abs_term_sum, condition)");
  eval_cmd->add_option("--format", eval.format, "plain, json");
  eval_cmd->add_option("--composition-cap", eval.composition_cap,
                       "max order for the composition method");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "cross-method equality sweep");
  verify_cmd->add_option("--alphas", verify.alphas, "comma-separated alpha grid");
  verify_cmd->add_option("--betas", verify.betas, "comma-separated beta grid");
  verify_cmd->add_option("--qs", verify.qs, "comma-separated q grid");
  verify_cmd->add_option("--nmax", verify.nmax, "orders 0..nmax");
  verify_cmd->add_option("--methods", verify.methods, "comma-separated method list");
  verify_cmd->add_option("--composition-nmax", verify.composition_nmax,
                         "largest order checked by the composition method");
  verify_cmd->add_option("--format", verify.format, "plain, json");
  verify_cmd->add_option("--inject-fault", verify.inject_fault,
                         "test hook: corrupt one coefficient, as 'method,n,k'");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "wall time per method per order");
  bench_cmd->add_option("--alpha", bench.alpha, "alpha (positive integer)");
  bench_cmd->add_option("--beta", bench.beta, "beta as p/q, integer, or decimal (> -1)");
  bench_cmd->add_option("--q", bench.q, "series step q (positive integer)");
  bench_cmd->add_option("--nmax", bench.nmax, "largest order");
  bench_cmd->add_option("--methods", bench.methods, "comma-separated method list");
  bench_cmd->add_option("--format", bench.format, kFormats);
  bench_cmd->add_option("--composition-cap", bench.composition_cap,
                        "max order for the composition method");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (coeffs_cmd->parsed()) return run_coeffs(coeffs);
    if (table_cmd->parsed()) return run_table(table);
    if (eval_cmd->parsed()) return run_eval(eval);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (bench_cmd->parsed()) return run_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
