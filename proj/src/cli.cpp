#include "pert/cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "pert/algebraic.hpp"
#include "pert/archimedes.hpp"
#include "pert/error.hpp"
#include "pert/integral.hpp"
#include "pert/problem.hpp"
#include "pert/secular.hpp"
#include "pert/series.hpp"
#include "pert/singular.hpp"

namespace pert::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<ojson>> rows;
};

struct Report {
  ojson fields = ojson::object();
  std::set<std::string> json_only;
  std::vector<Table> tables;

  void set(const std::string& key, ojson v) { fields[key] = std::move(v); }
  void set_json(const std::string& key, ojson v) {
    fields[key] = std::move(v);
    json_only.insert(key);
  }
  Table& table(std::string name, std::vector<std::string> columns) {
    tables.push_back({std::move(name), std::move(columns), {}});
    return tables.back();
  }
};

std::string cell(const ojson& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return v.dump();
  if (v.is_number_float()) return fmt::format("{:.10g}", v.get<double>());
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ", ") + cell(e);
    return s;
  }
  return v.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void render_table(const Report& r, std::ostream& out) {
  for (const auto& [key, value] : r.fields.items()) {
    if (r.json_only.contains(key)) continue;
    out << key << ": " << cell(value) << '\n';
  }
  for (const auto& t : r.tables) {
    out << '\n' << t.name << '\n';
    std::vector<std::vector<std::string>> text;
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows) {
      auto& line = text.emplace_back();
      for (std::size_t c = 0; c < row.size(); ++c) {
        line.push_back(cell(row[c]));
        width[c] = std::max(width[c], line.back().size());
      }
    }
    const auto emit = [&](const std::vector<std::string>& line) {
      std::string s;
      for (std::size_t c = 0; c < line.size(); ++c) {
        if (c) s += "  ";
        s += line[c];
        if (c + 1 < line.size()) s.append(width[c] - line[c].size(), ' ');
      }
      out << s << '\n';
    };
    emit(t.columns);
    for (const auto& line : text) emit(line);
  }
}

void render_csv(const Report& r, std::ostream& out) {
  const auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) out << (c ? "," : "") << csv_quote(line[c]);
    out << '\n';
  };
  if (r.tables.empty()) {
    emit({"key", "value"});
    for (const auto& [key, value] : r.fields.items())
      if (!r.json_only.contains(key)) emit({key, cell(value)});
    return;
  }
  bool first = true;
  for (const auto& t : r.tables) {
    if (!first) out << '\n';
    first = false;
    emit(t.columns);
    for (const auto& row : t.rows) {
      std::vector<std::string> line;
      for (const auto& v : row) line.push_back(cell(v));
      emit(line);
    }
  }
}

void render_json(const Report& r, std::ostream& out) {
  ojson doc = r.fields;
  for (const auto& t : r.tables) {
    ojson rows = ojson::array();
    for (const auto& row : t.rows) {
      ojson o = ojson::object();
      for (std::size_t c = 0; c < row.size(); ++c) o[t.columns[c]] = row[c];
      rows.push_back(std::move(o));
    }
    doc[t.name] = std::move(rows);
  }
  out << doc.dump(2) << '\n';
}

ojson opt(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

// Tables show float coefficients to 10 digits; JSON keeps the full value.
std::string display(const Coefficient& c) {
  if (c.mode() == CoefficientMode::Rational) return c.to_string();
  const auto z = c.as_complex();
  if (z.imag() == 0.0) return fmt::format("{:.10g}", z.real() + 0.0);
  return fmt::format("{:.10g}{:+.10g}i", z.real() + 0.0, z.imag() + 0.0);
}

// Real values print as numbers, genuinely complex ones as "re+imi".
ojson complex_cell(std::complex<double> z) {
  if (std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z.real()))) return z.real();
  return display(Coefficient(z));
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

std::string joined(const TruncatedSeries& s) {
  std::string out;
  for (const auto& c : s.coefficients()) {
    if (!out.empty()) out += "; ";
    out += display(c);
  }
  return out;
}

std::string poly_text(const std::vector<mpq_class>& c) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    const mpq_class mag = abs(c[k]);
    std::string term;
    if (k == 0)
      term = rational_text(mag);
    else {
      const std::string xk = k == 1 ? "x" : fmt::format("x^{}", k);
      term = mag == 1 ? xk : rational_text(mag) + "*" + xk;
    }
    if (out.empty())
      out = sgn(c[k]) < 0 ? "-" + term : term;
    else
      out += (sgn(c[k]) < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

// nlohmann::json keeps keys sorted; reports list the documented keys first.
ojson ordered(const nlohmann::json& j) {
  static const std::vector<std::string> lead = {"var", "order", "mode", "coeffs", "cos_poly", "sin_poly"};
  ojson o = ojson::object();
  for (const auto& k : lead)
    if (j.contains(k)) o[k] = ojson::parse(j[k].dump());
  for (const auto& [k, v] : j.items())
    if (!o.contains(k)) o[k] = ojson::parse(v.dump());
  return o;
}

std::string caret_line(std::size_t pos) { return std::string(pos, ' ') + "^"; }

std::vector<double> grid_of(const RunConfig& cfg) {
  if (!cfg.grid.empty()) {
    for (double e : cfg.grid)
      if (!(e > 0.0)) throw Error(ErrorKind::InvalidArgument, "grid points must be positive");
    return cfg.grid;
  }
  return geometric_grid(cfg.grid_start, cfg.grid_ratio, cfg.grid_count);
}

void grid_table(Report& r, const ResidualReport& rep) {
  auto& t = r.table("grid", {"eps", "residual", "kappa", "bound", "oracle_root", "oracle_error"});
  for (const auto& s : rep.samples)
    t.rows.push_back({s.eps, s.residual, opt(s.kappa), opt(s.bound), opt(s.oracle_root), opt(s.oracle_error)});
  r.set("order_slope", opt(rep.order_slope));
}

// Picks the base root: explicit index, nearest to a guess, or the first
// rational, then first real, then first root.
Coefficient choose_root(const std::vector<Coefficient>& roots, std::optional<int> branch, std::optional<double> guess) {
  if (roots.empty()) throw Error(ErrorKind::DegenerateAtZero, "Phi(x, 0) has no roots");
  if (branch) {
    if (*branch < 0 || *branch >= static_cast<int>(roots.size()))
      throw Error(ErrorKind::InvalidArgument,
                  fmt::format("branch {} out of range (0..{})", *branch, roots.size() - 1));
    return roots[static_cast<std::size_t>(*branch)];
  }
  if (guess) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < roots.size(); ++i)
      if (std::abs(roots[i].to_complex() - *guess) < std::abs(roots[best].to_complex() - *guess)) best = i;
    return roots[best];
  }
  for (const auto& r : roots)
    if (r.mode() == CoefficientMode::Rational) return r;
  for (const auto& r : roots)
    if (r.to_complex().imag() == 0.0) return r;
  return roots.front();
}

Coefficient in_mode(const Coefficient& c, const RunConfig& cfg) {
  if (cfg.mode == "float") return Coefficient(c.to_complex());
  return c;
}

struct SolveArgs {
  std::string expr;
  std::optional<int> branch;
  std::optional<double> guess;
  std::optional<double> eval;
};

Report do_solve(const RunConfig& cfg, const SolveArgs& a, std::string& input) {
  input = a.expr;
  const auto p = parse(a.expr);
  const auto roots = zeroth_roots(p);
  const auto a0 = in_mode(choose_root(roots, a.branch, a.guess), cfg);
  const auto sol = expand_root(p, a0, cfg.order);
  const auto grid = grid_of(cfg);
  const auto rep = residual_report(p, sol.series, grid);

  Report r;
  r.set("command", "solve");
  r.set("problem", format(p));
  r.set("mode", std::string(to_string(sol.series.mode())));
  r.set("order", cfg.order);
  r.set("base_root", display(a0));
  const int lead = cfg.zero_tolerance ? leading_index(rep.residual, *cfg.zero_tolerance) : sol.residual_leading_order;
  r.set("residual_leading_order", lead);
  r.set("exact", sol.exact);
  r.set_json("series", ordered(to_json(sol.series)));
  r.set_json("residual_series", ordered(to_json(rep.residual)));

  auto& ct = r.table("coefficients", {"n", "a_n"});
  for (int n = 0; n <= sol.order(); ++n) ct.rows.push_back({n, display(sol.series[n])});

  if (a.eval) {
    const double e = *a.eval;
    if (!std::isfinite(e)) throw Error(ErrorKind::InvalidArgument, "evaluation point must be finite");
    auto& et = r.table("evaluations", {"order", "eps", "z", "residual", "kappa", "bound", "oracle_root", "oracle_error"});
    for (int k = 0; k <= sol.order(); ++k) {
      const auto zk = sol.series.with_order(k);
      const auto value = evaluate(zk, e);
      const double res = std::abs(evaluate_at(p, value, e));
      std::optional<double> kappa, bound, oracle, error;
      try {
        const auto cb = condition_bound(p, zk, e);
        kappa = cb.kappa;
        bound = cb.bound;
      } catch (const Error&) {
      }
      if (a0.to_complex().imag() == 0.0) {
        try {
          oracle = oracle_root(p, e, value.real());
          error = std::abs(value.real() - *oracle);
        } catch (const Error&) {
        }
      }
      et.rows.push_back({k, e, complex_cell(value), res, opt(kappa), opt(bound), opt(oracle), opt(error)});
    }
  }

  auto& rt = r.table("residual", {"n", "delta_n"});
  for (int n = 0; n <= rep.residual.order(); ++n) rt.rows.push_back({n, display(rep.residual[n])});
  grid_table(r, rep);
  return r;
}

Report do_branches(const RunConfig& cfg, const std::string& expr, std::optional<double> eps, std::string& input) {
  input = expr;
  const auto p = parse(expr);
  const auto diag = is_singular(p);
  const auto sols = all_branches(p, cfg.order);

  Report r;
  r.set("command", "branches");
  r.set("problem", format(p));
  r.set("order", cfg.order);
  r.set("singular", diag.singular);
  r.set("generic_degree", diag.generic_degree);
  r.set("degree_at_zero", diag.degree_at_zero);
  r.set("roots_lost", diag.roots_lost);
  r.set("branch_count", static_cast<int>(sols.size()));

  std::vector<std::string> cols = {"branch", "balance", "substitution", "laurent_offset", "ramification",
                                   "base_root", "coefficients", "residual_leading_order"};
  if (eps) cols.push_back("value");
  auto& t = r.table("branches", cols);
  ojson full = ojson::array();
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    const std::string balance = s.scaling ? rational_text(s.scaling->exponent) : "0";
    const std::string subst = s.scaling && !s.scaling->is_identity() ? s.scaling->substitution : "none";
    std::vector<ojson> row = {static_cast<int>(i), balance, subst, s.laurent_offset, s.ramification,
                              display(s.base_root), joined(s.series), s.residual_leading_order};
    if (eps) row.push_back(complex_cell(evaluate_branch(s, *eps)));
    t.rows.push_back(std::move(row));

    ojson b = ojson::object();
    b["balance"] = balance;
    b["laurent_offset"] = s.laurent_offset;
    b["ramification"] = s.ramification;
    b["series"] = ordered(to_json(s.series));
    full.push_back(std::move(b));
  }
  r.set_json("branch_series", std::move(full));
  return r;
}

Report do_residual(const RunConfig& cfg, const std::string& expr, std::string series_arg, std::string& input) {
  input = expr;
  const auto p = parse(expr);
  if (!series_arg.empty() && series_arg.front() == '@') {
    const std::string path = series_arg.substr(1);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read series file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    series_arg = ss.str();
  }
  input = series_arg;
  const auto z = series_from_json(nlohmann::json::parse(series_arg));
  const auto grid = grid_of(cfg);
  const auto rep = residual_report(p, z, grid);

  Report r;
  r.set("command", "residual");
  r.set("problem", format(p));
  r.set("mode", std::string(to_string(z.mode())));
  r.set("series_order", z.order());
  const double tol = cfg.zero_tolerance.value_or(kDefaultZeroTolerance);
  r.set("residual_leading_order", leading_index(rep.residual, tol));
  r.set_json("residual_series", ordered(to_json(rep.residual)));
  auto& rt = r.table("residual", {"n", "delta_n"});
  for (int n = 0; n <= rep.residual.order(); ++n) rt.rows.push_back({n, display(rep.residual[n])});
  grid_table(r, rep);
  return r;
}

constexpr int kOptimalScanCap = 500;

Report do_integral(double eps, int nmax, bool profile) {
  const auto coeffs = expansion_coefficients(nmax);
  const auto tv = evaluate_truncated(eps, nmax);
  const double oracle = quadrature_oracle(eps);

  Report r;
  r.set("command", "integral");
  r.set("eps", eps);
  r.set("nmax", nmax);
  ojson c = ojson::array();
  for (const auto& q : coeffs) c.push_back(q.to_string());
  r.set("coefficients", c);
  r.set("value", tv.value);
  r.set("oracle", oracle);
  r.set("error", std::abs(tv.value - oracle));
  r.set("bound", remainder_bound(eps, nmax));
  if (eps > 0.0) {
    const auto opt_n = optimal_truncation(eps, kOptimalScanCap);
    r.set("optimal_order", opt_n.order);
    r.set("optimal_still_decreasing", opt_n.still_decreasing);
  }
  if (profile) {
    const auto prof = divergence_profile(eps, nmax);
    r.set("min_term_index", prof.min_term_index);
    r.set("overflow", prof.overflow);
    auto& t = r.table("profile", {"n", "term", "partial_sum", "bound"});
    for (const auto& row : prof.rows) t.rows.push_back({row.n, row.term, row.partial_sum, row.bound});
  }
  return r;
}

constexpr int kMaxArchimedesSteps = 60;

Report do_archimedes(int steps, bool naive) {
  if (steps > kMaxArchimedesSteps)
    throw Error(ErrorKind::InvalidArgument, fmt::format("at most {} steps are supported", kMaxArchimedesSteps));
  const auto seq = archimedes_sequence<double>(steps, naive ? ArchimedesForm::Naive : ArchimedesForm::Stable);
  Report r;
  r.set("command", "archimedes");
  r.set("steps", steps);
  r.set("form", naive ? "naive" : "stable");
  auto& t = r.table("polygons", {"k", "n", "s", "p_k", "abs_err"});
  for (const auto& st : seq)
    t.rows.push_back({st.k, static_cast<long long>(st.sides), st.side, fmt::format("{:.4f}", st.ratio),
                      std::abs(st.ratio - std::numbers::pi)});
  return r;
}

Report do_secular(const RunConfig& cfg, std::optional<double> eps, double threshold, bool improved) {
  const auto e = derive_expansion(cfg.order);
  const auto res = residual_expansion(e, cfg.order + 1);

  Report r;
  r.set("command", "secular");
  r.set("order", cfg.order);
  ojson slices = ojson::array();
  auto& st = r.table("expansion", {"n", "cos_poly", "sin_poly"});
  for (int n = 0; n <= e.order(); ++n) {
    const auto& y = e.slices[static_cast<std::size_t>(n)];
    st.rows.push_back({n, poly_text(y.cos_part), poly_text(y.sin_part)});
    slices.push_back(ordered(to_json(y, n)));
  }
  r.set_json("slices", std::move(slices));

  auto& rt = r.table("residual", {"n", "cos_poly", "sin_poly", "degree"});
  ojson rs = ojson::array();
  for (std::size_t m = 0; m < res.size(); ++m) {
    rt.rows.push_back({static_cast<int>(m), poly_text(res[m].cos_part), poly_text(res[m].sin_part), res[m].degree()});
    rs.push_back(ordered(to_json(res[m], static_cast<int>(m))));
  }
  r.set_json("residual_slices", std::move(rs));

  if (eps) {
    if (!(*eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
    const auto v = validity_region(e, *eps, threshold);
    r.set("eps", *eps);
    r.set("threshold", threshold);
    r.set("x_max", v.x_max);
    r.set("marker", v.marker);
    r.set("perturbation_not_small", v.perturbation_not_small);
    r.set("scan_exhausted", v.scan_exhausted);
    if (improved) {
      const double x_end = 1.0 / *eps;
      r.set("x_end", x_end);
      r.set("improved_max_residual", max_improved_residual(*eps, x_end));
      r.set("regular_max_residual", max_expansion_residual(e, *eps, x_end));
    }
  } else if (improved) {
    throw Error(ErrorKind::InvalidArgument, "--improved needs --eps");
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perturbation series toolkit", args.empty() ? "pertkit" : args.front()};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--mode", cfg.mode, "Coefficient arithmetic")->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--zero-tol", cfg.zero_tolerance, "Zero tolerance for float coefficients")
      ->check(CLI::PositiveNumber);
  app.add_option("--grid-start", cfg.grid_start, "First eps of the geometric grid");
  app.add_option("--grid-ratio", cfg.grid_ratio, "Ratio of the geometric grid");
  app.add_option("--grid-count", cfg.grid_count, "Points in the geometric grid");
  app.add_option("--grid", cfg.grid, "Explicit eps grid")->delimiter(',');

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Expand one root as a power series in eps");
  solve_cmd->add_option("expr", solve.expr, "Equation in x and eps")->required();
  solve_cmd->add_option("--order", cfg.order, "Truncation order")->check(CLI::NonNegativeNumber);
  auto* root_opt = solve_cmd->add_option("--root", solve.guess, "Pick the base root nearest this value");
  solve_cmd->add_option("--branch", solve.branch, "Pick the base root by index")->excludes(root_opt);
  solve_cmd->add_option("--eval", solve.eval, "Evaluate truncations at this eps");

  std::string branches_expr;
  std::optional<double> branches_eps;
  auto* branches_cmd = app.add_subcommand("branches", "Every root branch, rescaled where needed");
  branches_cmd->add_option("expr", branches_expr, "Equation in x and eps")->required();
  branches_cmd->add_option("--order", cfg.order, "Truncation order")->check(CLI::NonNegativeNumber);
  branches_cmd->add_option("--eps", branches_eps, "Evaluate each branch at this eps")->check(CLI::PositiveNumber);

  std::string residual_expr, residual_series_arg;
  auto* residual_cmd = app.add_subcommand("residual", "Residual of a given series");
  residual_cmd->add_option("expr", residual_expr, "Equation in x and eps")->required();
  residual_cmd->add_option("--series", residual_series_arg, "Series JSON, or @file")->required();

  double integral_eps = 0.0;
  int integral_nmax = 2;
  bool integral_profile = false;
  auto* integral_cmd = app.add_subcommand("integral", "Asymptotic series of int exp(-x)/(1+eps x)");
  integral_cmd->add_option("--eps", integral_eps, "Value of eps")->required()->check(CLI::NonNegativeNumber);
  integral_cmd->add_option("--nmax", integral_nmax, "Truncation order")->check(CLI::NonNegativeNumber);
  integral_cmd->add_flag("--profile", integral_profile, "Tabulate terms and partial sums");

  int archimedes_steps = 7;
  bool archimedes_naive = false;
  auto* archimedes_cmd = app.add_subcommand("archimedes", "Inscribed polygon approximations of pi");
  archimedes_cmd->add_option("--steps", archimedes_steps, "Number of polygons")->required()->check(CLI::PositiveNumber);
  archimedes_cmd->add_flag("--naive", archimedes_naive, "Use the cancelling side formula");

  std::optional<double> secular_eps;
  double secular_threshold = 0.1;
  bool secular_improved = false;
  auto* secular_cmd = app.add_subcommand("secular", "Regular expansion of y'' + (1 - eps x) y = 0");
  secular_cmd->add_option("--order", cfg.order, "Truncation order")->check(CLI::NonNegativeNumber);
  secular_cmd->add_option("--eps", secular_eps, "Value of eps for the validity scan");
  secular_cmd->add_option("--threshold", secular_threshold, "Relative size of the next correction")
      ->check(CLI::PositiveNumber);
  secular_cmd->add_flag("--improved", secular_improved, "Compare with exp(eps x/4) cos(x - eps x^2/4)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("pertkit");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  if (!(cfg.grid_ratio > 0.0 && cfg.grid_ratio < 1.0)) {
    err << "error: --grid-ratio must lie in (0, 1), got " << cfg.grid_ratio << '\n';
    return kUsageError;
  }
  if (cfg.grid_count < 1 || !(cfg.grid_start > 0.0)) {
    err << "error: --grid-start must be positive and --grid-count at least 1\n";
    return kUsageError;
  }
  cfg.format = format_name == "csv" ? OutputFormat::Csv : format_name == "json" ? OutputFormat::Json : OutputFormat::Table;

  std::string input;
  try {
    Report r;
    if (*solve_cmd) {
      cfg.command = "solve";
      r = do_solve(cfg, solve, input);
    } else if (*branches_cmd) {
      cfg.command = "branches";
      r = do_branches(cfg, branches_expr, branches_eps, input);
    } else if (*residual_cmd) {
      cfg.command = "residual";
      r = do_residual(cfg, residual_expr, residual_series_arg, input);
    } else if (*integral_cmd) {
      cfg.command = "integral";
      r = do_integral(integral_eps, integral_nmax, integral_profile);
    } else if (*archimedes_cmd) {
      cfg.command = "archimedes";
      r = do_archimedes(archimedes_steps, archimedes_naive);
    } else {
      cfg.command = "secular";
      r = do_secular(cfg, secular_eps, secular_threshold, secular_improved);
    }
    std::ostringstream buf;
    switch (cfg.format) {
      case OutputFormat::Table: render_table(r, buf); break;
      case OutputFormat::Csv: render_csv(r, buf); break;
      case OutputFormat::Json: render_json(r, buf); break;
    }
    out << buf.str();
    return kSuccess;
  } catch (const ParseError& e) {
    err << "parse error (" << to_string(e.kind()) << "): " << e.message() << '\n';
    err << "  " << input << '\n' << "  " << caret_line(e.position()) << '\n';
    return kParseError;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: invalid series JSON: " << e.what() << '\n';
    if (!input.empty()) err << "  " << input << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (!input.empty()) err << "  input: " << input << '\n';
    return kDomainError;
  }
}

}  // namespace pert::cli
