#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nwloc/brute_force.hpp"
#include "nwloc/checks.hpp"
#include "nwloc/overlap.hpp"
#include "table.hpp"

namespace nwloc::cli {

namespace {

template <class T, class Parse>
std::vector<T> parse_list(const std::string &text, const char *flag, Parse parse) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(parse(item, &used));
    } catch (const std::exception &) {
      used = std::string::npos;
    }
    if (used != item.size())
      throw usage_error(std::string(flag) + ": cannot parse '" + item + "'");
  }
  if (out.empty())
    throw usage_error(std::string(flag) + ": empty list");
  return out;
}

std::vector<int> parse_ints(const std::string &text, const char *flag) {
  return parse_list<int>(text, flag,
                         [](const std::string &s, std::size_t *n) { return std::stoi(s, n); });
}

std::vector<double> parse_doubles(const std::string &text, const char *flag) {
  return parse_list<double>(text, flag,
                            [](const std::string &s, std::size_t *n) { return std::stod(s, n); });
}

QuadratureSpec quadrature(const RunConfig &cfg) {
  QuadratureSpec q;
  if (cfg.n_theta)
    q.n_theta = *cfg.n_theta;
  if (cfg.n_phi)
    q.n_phi = *cfg.n_phi;
  if (cfg.n_radial)
    q.n_radial = *cfg.n_radial;
  return q;
}

void write(const Table &t, const RunConfig &cfg, std::ostream &out) {
  std::ofstream file;
  std::ostream *os = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary);
    if (!file)
      throw usage_error("--out: cannot open " + cfg.out);
    os = &file;
  }
  if (cfg.format == OutputFormat::csv)
    t.write_csv(*os);
  else
    t.write_json(*os);
}

const char *axis_name(int i) {
  static const char *names[] = {"x", "y", "z"};
  return names[i];
}

HelicitySet helicities_or(const RunConfig &cfg, const HelicitySet &fallback) {
  return cfg.helicities ? HelicitySet(*cfg.helicities) : fallback;
}

int cmd_mmatrix(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const Direction d(cfg.theta, cfg.phi);
  const HelicitySet hs = helicities_or(cfg, HelicitySet::photon());
  const ObstructionMatrix m = helicity_sum_matrix(d, hs, cfg.j);
  const bool closed = cfg.j == 1 && hs == HelicitySet::photon();
  const int dim = 2 * cfg.j + 1;

  Table t{{"sigma1", "sigma2", "re", "im"}, {}};
  Eigen::MatrixXcd ref;
  if (closed) {
    ref = CMat3(CMat3::Identity() - obstruction_closed_form(d));
    t.columns.insert(t.columns.end(), {"closed_form_re", "closed_form_im", "abs_error"});
  }
  double worst = 0.0;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      const cdouble v = m.entries(r, c);
      std::vector<Cell> row{static_cast<long long>(cfg.j - r),
                            static_cast<long long>(cfg.j - c), v.real(), v.imag()};
      if (closed) {
        const double e = std::abs(v - ref(r, c));
        worst = std::max(worst, e);
        row.insert(row.end(), {ref(r, c).real(), ref(r, c).imag(), e});
      }
      t.add(std::move(row));
    }
  write(t, cfg, out);

  const double herm = (m.entries - m.entries.adjoint()).cwiseAbs().maxCoeff();
  err << "trace " << format_number(m.entries.trace().real()) << ", hermiticity residual "
      << format_number(herm);
  if (closed)
    err << ", closed-form residual " << format_number(worst);
  err << "\n";
  return closed && worst >= 1e-12 ? exit_residual : exit_pass;
}

int cmd_kernel_scan(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const FamilyKind kind = parse_family(cfg.family);
  if (kind == FamilyKind::scalar)
    throw usage_error("kernel-scan: the scalar family has no label kernel");
  const StateFamily fam = StateFamily::make(kind);
  const QuadratureSpec q = quadrature(cfg);
  const bool full = kind == FamilyKind::spherical3 || kind == FamilyKind::cartesian3;
  const Vec3 rhat = Direction(cfg.theta, cfg.phi).unit_vector();
  const bool sph = is_spherical(kind);

  Table t{{"r_over_a", sph ? "sigma1" : "i1", sph ? "sigma2" : "i2", "re", "im", "oracle_re",
           "oracle_im", "abs_error", "rel_error"},
          {}};
  // an entry passes when |value - oracle| <= abs_tol + rel_tol * max|oracle|
  double worst = 0.0;
  bool ok = true;
  for (double ra : cfg.r_over_a) {
    const Vec3 r = ra * cfg.a * rhat;
    Eigen::MatrixXcd value, reference;
    const auto semi = [&] { return overlap_kernel_matrix(fam, r, cfg.a, q).entries; };
    const auto brute = [&] { return brute_force::overlap_kernel_matrix(fam, r, cfg.a, q).entries; };
    value = cfg.oracle ? brute() : semi();
    if (full)
      reference = Eigen::MatrixXcd::Identity(3, 3) * regulated_delta(r.norm(), cfg.a);
    else
      reference = cfg.oracle ? semi() : brute();
    double scale = reference.cwiseAbs().maxCoeff();
    if (scale == 0.0)
      scale = 1.0;
    for (int i1 = 0; i1 < 3; ++i1)
      for (int i2 = 0; i2 < 3; ++i2) {
        const cdouble v = value(i1, i2), o = reference(i1, i2);
        const double abs_err = std::abs(v - o);
        const double e = abs_err / scale;
        worst = std::max(worst, e);
        ok = ok && abs_err <= q.abs_tol + q.rel_tol * scale;
        Cell l1 = sph ? Cell(static_cast<long long>(1 - i1)) : Cell(std::string(axis_name(i1)));
        Cell l2 = sph ? Cell(static_cast<long long>(1 - i2)) : Cell(std::string(axis_name(i2)));
        t.add({ra, l1, l2, v.real(), v.imag(), o.real(), o.imag(), abs_err, e});
      }
  }
  write(t, cfg, out);
  err << cfg.family << ": max relative error " << format_number(worst) << ", "
      << (ok ? "within" : "outside") << " abs " << format_number(q.abs_tol) << " + rel "
      << format_number(q.rel_tol) << "\n";
  return ok ? exit_pass : exit_residual;
}

int cmd_check(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const CheckReport rep = run_check_suite(cfg.suite, cfg.seed, quadrature(cfg));
  Table t{{"suite", "seed", "check", "residual", "tolerance", "comparison", "passed", "note"}, {}};
  int n_pass = 0;
  for (const CheckResult &c : rep.checks) {
    t.add({rep.suite, static_cast<long long>(rep.seed), c.name, c.residual, c.tolerance,
           std::string(c.at_least ? ">=" : "<="), c.passed, c.note});
    n_pass += c.passed;
  }
  write(t, cfg, out);
  err << rep.suite << ": " << (rep.passed() ? "PASS" : "FAIL") << " (" << n_pass << "/"
      << rep.checks.size() << " checks)\n";
  return rep.passed() ? exit_pass : exit_residual;
}

int cmd_defect_j(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const HelicitySet kept = helicities_or(cfg, HelicitySet::photon());
  const QuadratureSpec q = quadrature(cfg);
  const Vec3 rhat = Direction(cfg.theta, cfg.phi).unit_vector();
  const int dim = 2 * cfg.j + 1;
  const double scale = regulated_delta(0.0, cfg.a);
  Table t{{"r_over_a", "sigma1", "sigma2", "re", "im", "frobenius_over_delta_scale"}, {}};
  for (double ra : cfg.r_over_a) {
    const Vec3 r = ra * cfg.a * rhat;
    const KernelMatrix k = cfg.oracle ? brute_force::general_j_defect(cfg.j, kept, r, cfg.a, q)
                                      : general_j_defect(cfg.j, kept, r, cfg.a, q);
    const double frob = k.entries.norm() / scale;
    for (int r1 = 0; r1 < dim; ++r1)
      for (int r2 = 0; r2 < dim; ++r2)
        t.add({ra, static_cast<long long>(cfg.j - r1), static_cast<long long>(cfg.j - r2),
               k.entries(r1, r2).real(), k.entries(r1, r2).imag(), frob});
    err << "r/a " << format_number(ra) << ": defect Frobenius norm / delta scale "
        << format_number(frob) << "\n";
  }
  write(t, cfg, out);
  return exit_pass;
}

} // namespace

RunConfig parse_args(const std::vector<std::string> &args) {
  CLI::App app{"Localized-state and helicity-completeness toolkit", "nwloc"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "csv", helicities, r_list_scan = "0,1,2,5,10", r_list_defect = "0";
  int j_mm = 1, j_defect = 2;
  int n_theta = 0, n_phi = 0, n_radial = 0;

  auto output = [&](CLI::App *s) {
    s->add_option("--out", cfg.out, "Write the table to this file instead of stdout");
    s->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--seed", cfg.seed, "Seed for randomized checks");
  };
  auto quadrature_flags = [&](CLI::App *s) {
    s->add_option("--ntheta", n_theta, "Gauss-Legendre nodes in cos(theta)");
    s->add_option("--nphi", n_phi, "Uniform azimuthal nodes");
    s->add_option("--nradial", n_radial, "Radial nodes");
  };
  auto direction = [&](CLI::App *s, const char *what) {
    s->add_option("--theta", cfg.theta, std::string("Polar angle of ") + what + " (radians)");
    s->add_option("--phi", cfg.phi, std::string("Azimuth of ") + what + " (radians)");
  };

  CLI::App *mm = app.add_subcommand("mmatrix", "Helicity-sum matrix at one momentum direction");
  direction(mm, "k");
  mm->add_option("--j", j_mm, "Spin");
  mm->add_option("--helicities", helicities, "Comma list of summed helicities");
  output(mm);

  CLI::App *scan = app.add_subcommand("kernel-scan", "Overlap kernel matrix versus separation");
  scan->add_option("--family", cfg.family, "Localized-state family");
  direction(scan, "the separation");
  scan->add_option("--r-list", r_list_scan, "Comma list of r/a");
  scan->add_option("--a", cfg.a, "Regulator width");
  scan->add_flag("--oracle", cfg.oracle, "Use the brute-force quadrature path");
  quadrature_flags(scan);
  output(scan);

  CLI::App *check = app.add_subcommand("check", "Run an invariant suite");
  check->add_option("suite", cfg.suite, "covariance | gauge | translation | alt-product")
      ->required()
      ->check(CLI::IsMember(check_suite_names()));
  quadrature_flags(check);
  output(check);

  struct Alias {
    const char *command, *suite;
  };
  std::vector<std::pair<CLI::App *, std::string>> aliases;
  for (Alias al : {Alias{"covariance-check", "covariance"}, Alias{"gauge-check", "gauge"},
                   Alias{"translation-check", "translation"}, Alias{"alt-product", "alt-product"}}) {
    CLI::App *s = app.add_subcommand(al.command, std::string("Same as: check ") + al.suite);
    quadrature_flags(s);
    output(s);
    aliases.emplace_back(s, al.suite);
  }

  CLI::App *defect = app.add_subcommand("defect-j", "Spin-j completeness defect kernel");
  defect->add_option("--j", j_defect, "Spin");
  defect->add_option("--helicities", helicities, "Comma list of kept helicities");
  direction(defect, "the separation");
  defect->add_option("--r-list", r_list_defect, "Comma list of r/a");
  defect->add_option("--a", cfg.a, "Regulator width");
  defect->add_flag("--oracle", cfg.oracle, "Use the brute-force quadrature path");
  quadrature_flags(defect);
  output(defect);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    usage_error help(app.help());
    help.code = exit_pass;
    throw help;
  } catch (const CLI::ParseError &e) {
    throw usage_error(e.what());
  }

  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  for (CLI::App *s : {scan, defect, check}) {
    if (!s->parsed())
      continue;
    if (s->count("--ntheta"))
      cfg.n_theta = n_theta;
    if (s->count("--nphi"))
      cfg.n_phi = n_phi;
    if (s->count("--nradial"))
      cfg.n_radial = n_radial;
  }
  for (auto &[s, suite] : aliases) {
    if (!s->parsed())
      continue;
    cfg.command = Command::check;
    cfg.suite = suite;
    if (s->count("--ntheta"))
      cfg.n_theta = n_theta;
    if (s->count("--nphi"))
      cfg.n_phi = n_phi;
    if (s->count("--nradial"))
      cfg.n_radial = n_radial;
  }
  if (mm->parsed()) {
    cfg.command = Command::mmatrix;
    cfg.j = j_mm;
  } else if (scan->parsed()) {
    cfg.command = Command::kernel_scan;
    cfg.r_over_a = parse_doubles(r_list_scan, "--r-list");
  } else if (check->parsed()) {
    cfg.command = Command::check;
  } else if (defect->parsed()) {
    cfg.command = Command::defect_j;
    cfg.j = j_defect;
    cfg.r_over_a = parse_doubles(r_list_defect, "--r-list");
  }
  if (!helicities.empty())
    cfg.helicities = parse_ints(helicities, "--helicities");

  if (!std::isfinite(cfg.theta) || cfg.theta < 0.0 || cfg.theta > pi)
    throw usage_error("--theta must lie in [0, pi] radians");
  if (!std::isfinite(cfg.phi))
    throw usage_error("--phi must be finite");
  if (!(cfg.a > 0.0) || !std::isfinite(cfg.a))
    throw usage_error("--a must be a positive width");
  for (double r : cfg.r_over_a)
    if (!(r >= 0.0) || !std::isfinite(r))
      throw usage_error("--r-list entries must be finite and >= 0");
  try {
    quadrature(cfg).validate();
    if (cfg.command == Command::kernel_scan)
      parse_family(cfg.family);
  } catch (const std::invalid_argument &e) {
    throw usage_error(e.what());
  }
  return cfg;
}

int execute(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  switch (cfg.command) {
  case Command::mmatrix:
    return cmd_mmatrix(cfg, out, err);
  case Command::kernel_scan:
    return cmd_kernel_scan(cfg, out, err);
  case Command::check:
    return cmd_check(cfg, out, err);
  case Command::defect_j:
    return cmd_defect_j(cfg, out, err);
  }
  return exit_usage;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  try {
    return execute(parse_args(args), out, err);
  } catch (const usage_error &e) {
    (e.code == exit_pass ? out : err) << e.what() << (e.code == exit_pass ? "" : "\n");
    return e.code;
  } catch (const std::invalid_argument &e) {
    // library domain errors: bad spin, helicity outside the spin, ...
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const unsupported_configuration &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return exit_residual;
  }
}

} // namespace nwloc::cli
