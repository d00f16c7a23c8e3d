#include "charcalc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "charcalc/arithgrp.hpp"
#include "charcalc/dualcoh.hpp"
#include "charcalc/genera.hpp"
#include "charcalc/jsonio.hpp"
#include "charcalc/k3family.hpp"

namespace charcalc::cli {

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string format = "text";
  std::string a_values_path;
  bool unicode = false;
};

void add_format_option(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

void add_a_values_option(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--a-values", opts.a_values_path,
                  "Override file with lines \"a0 = 24\" .. \"a8 = <value>\"");
}

void add_unicode_option(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_flag("--unicode", opts.unicode, "Render the base class as a Greek lambda");
}

k3::FamilyModel load_family(const CommonOpts& opts) {
  if (opts.a_values_path.empty()) return k3::FamilyModel::with_default_a();
  std::ifstream in(opts.a_values_path);
  if (!in) throw std::runtime_error("cannot open a-values file: " + opts.a_values_path);
  return k3::FamilyModel::with_a_values(k3::parse_a_values(in));
}

std::string lambda_symbol(const CommonOpts& opts) { return opts.unicode ? "λ" : "l"; }

json kappa_json(const k3::KappaResult& k) {
  return {{"num", k.coefficient.num_string()},
          {"den", k.coefficient.den_string()},
          {"lambda_power", k.lambda_power}};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void poly_csv(std::ostream& out, const GradedPoly& p) {
  out << "monomial,num,den\n";
  for (const auto& [m, c] : p.terms())
    out << p.ring()->monomial_string(m) << "," << c.num_string() << "," << c.den_string()
        << "\n";
}

// ---- kappa-table ----------------------------------------------------------

void run_kappa_table(std::ostream& out, const CommonOpts& opts, unsigned i_max) {
  auto family = load_family(opts);
  auto rows = family.kappa_table(i_max);

  // The i = 0 entry is ambiguous and reported separately: the fiber
  // integral of L_1 is -16 (the fiber signature), while the integral of
  // t_2 is 24 (the fiber Euler characteristic).
  auto l1 = genera::multiplicative_sequence(genera::l_genus_series(1), 1).entry(1);
  Rational l1_integral = family.kappa(l1).coefficient;
  Rational euler = family.fiber_integrate(GradedPoly::generator(family.fiber_ring(), "t2"))
                       .coefficient(Monomial(1));

  if (opts.format == "json") {
    json jrows = json::array();
    for (unsigned i = 1; i <= i_max; ++i) {
      json r = kappa_json(rows[i - 1]);
      r["i"] = i;
      jrows.push_back(r);
    }
    emit_json(out, {{"command", "kappa-table"},
                    {"rows", jrows},
                    {"i0_note",
                     {{"l1_integral", l1_integral.to_string()},
                      {"euler_number", euler.to_string()}}}});
    return;
  }
  if (opts.format == "csv") {
    out << "i,coefficient_num,coefficient_den,lambda_power\n";
    for (unsigned i = 1; i <= i_max; ++i)
      out << i << "," << rows[i - 1].coefficient.num_string() << ","
          << rows[i - 1].coefficient.den_string() << "," << rows[i - 1].lambda_power << "\n";
    out << "# i=0: integral of L_1 = " << l1_integral << " (fiber signature); integral of t_2 = "
        << euler << " (fiber Euler characteristic)\n";
    return;
  }
  for (unsigned i = 1; i <= i_max; ++i)
    out << "i=" << i << "  " << rows[i - 1].to_string(lambda_symbol(opts)) << "\n";
  out << "# i=0: integral of L_1 = " << l1_integral << " (fiber signature); integral of t_2 = "
      << euler << " (fiber Euler characteristic); neither value is asserted\n";
}

// ---- franke ---------------------------------------------------------------

void run_franke(std::ostream& out, const CommonOpts& opts, const std::string& spec_text,
                bool with_oracle) {
  auto spec = arithgrp::GroupSpec::parse(spec_text);
  auto bound = arithgrp::franke_bound(spec);

  struct Row {
    unsigned k;
    long dim;
    long oracle = 0;
    bool agree = false;
  };
  std::vector<Row> rows;
  for (unsigned k = 1; k <= spec.max_k(); ++k) {
    Row r{k, arithgrp::unipotent_dim(spec, k)};
    if (with_oracle) {
      r.oracle = arithgrp::oracle_unipotent_dim(spec, k);
      r.agree = r.oracle == r.dim;
    }
    rows.push_back(r);
  }

  if (opts.format == "json") {
    json jrows = json::array();
    for (const auto& r : rows) {
      json jr = {{"k", r.k}, {"dim", r.dim}};
      if (with_oracle) {
        jr["oracle"] = r.oracle;
        jr["agree"] = r.agree;
      }
      jrows.push_back(jr);
    }
    emit_json(out, {{"command", "franke"},
                    {"group", spec.to_string()},
                    {"bound", bound.bound},
                    {"argmin_k", bound.argmin_k},
                    {"dims", jrows}});
    return;
  }
  if (opts.format == "csv") {
    out << (with_oracle ? "k,dim,oracle,agree\n" : "k,dim\n");
    for (const auto& r : rows) {
      out << r.k << "," << r.dim;
      if (with_oracle) out << "," << r.oracle << "," << (r.agree ? "true" : "false");
      out << "\n";
    }
    out << "# bound=" << bound.bound << ",argmin_k=" << bound.argmin_k << "\n";
    return;
  }
  out << "group " << spec.to_string() << "\n";
  out << (with_oracle ? " k  dim N_k  oracle  agree\n" : " k  dim N_k\n");
  for (const auto& r : rows) {
    out << " " << r.k << "  " << r.dim;
    if (with_oracle) out << "  " << r.oracle << "  " << (r.agree ? "yes" : "NO");
    out << "\n";
  }
  out << "injective in degrees <= " << bound.bound << " (minimum at k = " << bound.argmin_k
      << ")\n";
}

// ---- l-poly ---------------------------------------------------------------

void run_l_poly(std::ostream& out, const CommonOpts& opts, unsigned n) {
  auto table = genera::multiplicative_sequence(genera::l_genus_series(n), n);
  const GradedPoly& l = table.entry(n);
  GradedPoly l_tilde = genera::atiyah_singer_l(n);

  if (opts.format == "json") {
    emit_json(out, {{"command", "l-poly"},
                    {"n", n},
                    {"l", poly_to_json(l)},
                    {"l_tilde", poly_to_json(l_tilde)}});
    return;
  }
  if (opts.format == "csv") {
    out << "polynomial,monomial,num,den\n";
    for (const auto& [m, c] : l.terms())
      out << "L_" << n << "," << l.ring()->monomial_string(m) << "," << c.num_string() << ","
          << c.den_string() << "\n";
    for (const auto& [m, c] : l_tilde.terms())
      out << "Ltilde_" << n << "," << l_tilde.ring()->monomial_string(m) << ","
          << c.num_string() << "," << c.den_string() << "\n";
    return;
  }
  out << "L_" << n << " = " << l.to_string() << "\n";
  out << "Ltilde_" << n << " = " << l_tilde.to_string() << "\n";
}

// ---- x-class --------------------------------------------------------------

void run_x_class(std::ostream& out, const CommonOpts& opts, unsigned i) {
  GradedPoly x = arithgrp::x_class(i);
  if (opts.format == "json") {
    emit_json(out, {{"command", "x-class"}, {"i", i}, {"value", poly_to_json(x)}});
    return;
  }
  if (opts.format == "csv") {
    poly_csv(out, x);
    return;
  }
  out << "x_" << 4 * i << " = " << x.to_string() << "\n";
}

// ---- taut -----------------------------------------------------------------

void run_taut(std::ostream& out, const CommonOpts& opts, unsigned g) {
  auto ring = dualcoh::sp_dual_ring(g);
  auto basis = dualcoh::vdg_basis(ring);
  auto kernel = dualcoh::matsushima_kernel_sp(ring);
  bool orth = dualcoh::kernel_orthogonality_check(ring);
  auto dims = ring.graded_dims();

  auto monomial_names = [&](const std::vector<Monomial>& ms) {
    std::vector<std::string> names;
    names.reserve(ms.size());
    for (const auto& m : ms) names.push_back(ring.ring()->monomial_string(m));
    return names;
  };

  if (opts.format == "json") {
    emit_json(out, {{"command", "taut"},
                    {"g", g},
                    {"graded_dims", dims},
                    {"total_dim", ring.total_dim()},
                    {"basis", monomial_names(basis.monomials)},
                    {"kernel", monomial_names(kernel.monomials)},
                    {"orthogonality", orth}});
    return;
  }
  if (opts.format == "csv") {
    out << "weight,dim\n";
    for (std::size_t d = 0; d < dims.size(); ++d) out << d << "," << dims[d] << "\n";
    out << "# total=" << ring.total_dim() << ",basis_size=" << basis.monomials.size()
        << ",kernel_size=" << kernel.monomials.size()
        << ",orthogonality=" << (orth ? "true" : "false") << "\n";
    return;
  }
  out << "g = " << g << "\n";
  out << "graded dims:";
  for (auto d : dims) out << " " << d;
  out << "\n";
  out << "total dim: " << ring.total_dim() << "\n";
  out << "square-free basis (" << basis.monomials.size() << "):";
  for (const auto& name : monomial_names(basis.monomials)) out << " " << name;
  out << "\n";
  out << "kernel (" << kernel.monomials.size() << "):";
  for (const auto& name : monomial_names(kernel.monomials)) out << " " << name;
  out << "\n";
  out << "kernel = orthogonal complement of (u" << g << "): " << (orth ? "true" : "false")
      << "\n";
}

// ---- sl-image -------------------------------------------------------------

void run_sl_image(std::ostream& out, const CommonOpts& opts, unsigned n, unsigned max_degree) {
  auto algebra = dualcoh::sl_image(n);
  auto coeffs = algebra.poincare_polynomial(max_degree);

  if (opts.format == "json") {
    json nonzero = json::array();
    for (unsigned d = 0; d <= max_degree; ++d)
      if (coeffs[d] != 0) nonzero.push_back({{"degree", d}, {"coefficient", coeffs[d]}});
    emit_json(out, {{"command", "sl-image"},
                    {"n", n},
                    {"generator_degrees", algebra.generator_degrees},
                    {"poincare", nonzero}});
    return;
  }
  if (opts.format == "csv") {
    out << "degree,coefficient\n";
    for (unsigned d = 0; d <= max_degree; ++d)
      if (coeffs[d] != 0) out << d << "," << coeffs[d] << "\n";
    return;
  }
  out << "n = " << n << "\n";
  out << "generator degrees:";
  if (algebra.generator_degrees.empty()) out << " (none)";
  for (auto d : algebra.generator_degrees) out << " " << d;
  out << "\n";
  out << "nonzero degrees up to " << max_degree << ":";
  for (unsigned d = 0; d <= max_degree; ++d)
    if (coeffs[d] != 0) out << " " << d;
  out << "\n";
}

// ---- nielsen-report -------------------------------------------------------

void run_nielsen_report(std::ostream& out, const CommonOpts& opts, unsigned i) {
  auto family = load_family(opts);
  auto report = k3::bott_obstruction(family, i);

  if (opts.format == "json") {
    emit_json(out, {{"command", "nielsen-report"},
                    {"i", i},
                    {"class_degree", report.class_degree},
                    {"bott_bound", report.bott_bound},
                    {"obstructs", report.obstructs},
                    {"kappa", kappa_json(report.kappa_value)}});
    return;
  }
  if (opts.format == "csv") {
    out << "i,class_degree,bott_bound,obstructs,kappa_num,kappa_den,lambda_power\n";
    out << i << "," << report.class_degree << "," << report.bott_bound << ","
        << (report.obstructs ? "true" : "false") << ","
        << report.kappa_value.coefficient.num_string() << ","
        << report.kappa_value.coefficient.den_string() << ","
        << report.kappa_value.lambda_power << "\n";
    return;
  }
  out << "i = " << i << "\n";
  out << "class degree 4(i+1) = " << report.class_degree << "\n";
  out << "flat-bundle vanishing bound = " << report.bott_bound << "\n";
  out << "kappa(L_" << i + 1 << ") = " << report.kappa_value.to_string(lambda_symbol(opts))
      << (report.kappa_value.is_zero() ? " (zero)" : " (nonzero)") << "\n";
  if (report.obstructs)
    out << "degree " << report.class_degree << " > " << report.bott_bound
        << ": a flat structure would kill this class, so the nonzero value obstructs\n";
  else
    out << "degree " << report.class_degree << " <= " << report.bott_bound
        << ": no obstruction from this class\n";
}

// ---- solve-a --------------------------------------------------------------

void run_solve_a(std::ostream& out, const CommonOpts& opts) {
  std::vector<Rational> known{24, 88, 184, 352};
  auto result = k3::solve_a_values(known, k3::reference_kappa_rows());

  if (opts.format == "json") {
    json solved = json::array();
    for (std::size_t s = 0; s < result.solved.size(); ++s)
      solved.push_back({{"index", s + 4},
                        {"value", result.solved[s].to_string()},
                        {"integer", static_cast<bool>(result.integer_flags[s])}});
    emit_json(out, {{"command", "solve-a"},
                    {"given", {"24", "88", "184", "352"}},
                    {"solved", solved},
                    {"all_integers", result.all_integers},
                    {"replay_matches", result.replay_matches}});
    return;
  }
  if (opts.format == "csv") {
    out << "index,value_num,value_den,integer\n";
    for (std::size_t s = 0; s < result.solved.size(); ++s)
      out << s + 4 << "," << result.solved[s].num_string() << ","
          << result.solved[s].den_string() << ","
          << (result.integer_flags[s] ? "true" : "false") << "\n";
    return;
  }
  out << "given a_0..a_3 = 24, 88, 184, 352 and the reference rows i = 1..8\n";
  for (std::size_t s = 0; s < result.solved.size(); ++s)
    out << "a_" << s + 4 << " = " << result.solved[s]
        << (result.integer_flags[s] ? " (integer)" : " (NOT an integer)") << "\n";
  out << "replay of the full table matches the targets: "
      << (result.replay_matches ? "yes" : "NO") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characteristic-class calculator"};
  app.require_subcommand(1);

  CommonOpts kappa_opts;
  unsigned kappa_max = 8;
  auto* kappa_cmd = app.add_subcommand("kappa-table", "Kappa classes of the universal family");
  kappa_cmd->add_option("--max", kappa_max, "Largest row index i")->capture_default_str();
  add_format_option(kappa_cmd, kappa_opts);
  add_a_values_option(kappa_cmd, kappa_opts);
  add_unicode_option(kappa_cmd, kappa_opts);

  CommonOpts franke_opts;
  std::string franke_spec;
  bool franke_oracle = false;
  auto* franke_cmd =
      app.add_subcommand("franke", "Injectivity bound from unipotent radical dimensions");
  franke_cmd->add_option("spec", franke_spec, "Group spec: so:p,q | sp:n | sl:n")->required();
  franke_cmd->add_flag("--oracle", franke_oracle,
                       "Recompute each dimension as a nullspace dimension");
  add_format_option(franke_cmd, franke_opts);

  CommonOpts lpoly_opts;
  unsigned lpoly_n = 0;
  auto* lpoly_cmd = app.add_subcommand("l-poly", "Print L_n and its Atiyah-Singer variant");
  lpoly_cmd->add_option("n", lpoly_n, "Index of the polynomial")->required();
  add_format_option(lpoly_cmd, lpoly_opts);

  CommonOpts xclass_opts;
  unsigned xclass_i = 0;
  auto* xclass_cmd = app.add_subcommand("x-class", "The degree-4i class of the flat bundle");
  xclass_cmd->add_option("i", xclass_i, "Index i >= 1")->required();
  add_format_option(xclass_cmd, xclass_opts);

  CommonOpts taut_opts;
  unsigned taut_g = 0;
  auto* taut_cmd = app.add_subcommand("taut", "Tautological quotient-ring computations");
  taut_cmd->add_option("g", taut_g, "Rank, 1..8")->required();
  add_format_option(taut_cmd, taut_opts);

  CommonOpts sl_opts;
  unsigned sl_n = 0, sl_max_degree = 30;
  auto* sl_cmd = app.add_subcommand("sl-image", "Stable exterior-algebra image for sl:n");
  sl_cmd->add_option("n", sl_n, "Rank, n >= 2")->required();
  sl_cmd->add_option("--max-degree", sl_max_degree, "Largest reported degree")
      ->capture_default_str();
  add_format_option(sl_cmd, sl_opts);

  CommonOpts nielsen_opts;
  unsigned nielsen_i = 0;
  auto* nielsen_cmd =
      app.add_subcommand("nielsen-report", "Degree obstruction chain for row i");
  nielsen_cmd->add_option("i", nielsen_i, "Row index i >= 0")->required();
  add_format_option(nielsen_cmd, nielsen_opts);
  add_a_values_option(nielsen_cmd, nielsen_opts);
  add_unicode_option(nielsen_cmd, nielsen_opts);

  CommonOpts solve_opts;
  auto* solve_cmd =
      app.add_subcommand("solve-a", "Recover a_4..a_8 from the reference rows");
  add_format_option(solve_cmd, solve_opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (kappa_cmd->parsed()) run_kappa_table(out, kappa_opts, kappa_max);
    if (franke_cmd->parsed()) run_franke(out, franke_opts, franke_spec, franke_oracle);
    if (lpoly_cmd->parsed()) run_l_poly(out, lpoly_opts, lpoly_n);
    if (xclass_cmd->parsed()) run_x_class(out, xclass_opts, xclass_i);
    if (taut_cmd->parsed()) run_taut(out, taut_opts, taut_g);
    if (sl_cmd->parsed()) run_sl_image(out, sl_opts, sl_n, sl_max_degree);
    if (nielsen_cmd->parsed()) run_nielsen_report(out, nielsen_opts, nielsen_i);
    if (solve_cmd->parsed()) run_solve_a(out, solve_opts);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace charcalc::cli
