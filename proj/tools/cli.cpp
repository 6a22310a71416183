#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "orchard/conic.hpp"
#include "orchard/cubic.hpp"
#include "orchard/errors.hpp"
#include "orchard/generators.hpp"
#include "orchard/group_law.hpp"
#include "orchard/incidence.hpp"
#include "orchard/points_file.hpp"
#include "orchard/rich_lines.hpp"
#include "orchard/svg.hpp"
#include "orchard/tenpoint.hpp"

namespace orchard::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<Rational> rational_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Rational> out;
  for (const auto& s : split(text)) out.push_back(parse_rational(s));
  if (expected != 0 && out.size() != expected) {
    throw UsageError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated values");
  }
  return out;
}

std::string homogeneous_row(const ProjPoint& p) {
  return p[0].get_str() + "," + p[1].get_str() + "," + p[2].get_str();
}

// --- generate ----------------------------------------------------------------------

struct GenerateArgs {
  std::string example;
  int n = 0;
  std::string out_file;
  bool double_density = false;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  if (a.example == "ngon") {
    if (!a.out_file.empty()) throw UsageError("ngon is combinatorial and has no points file");
    const auto cfg = gen_ngon_directions(a.n);
    out << "n,direction_classes,chords,two_vertex_direction_lines\n"
        << cfg.n << ',' << cfg.count_direction_classes() << ',' << cfg.chord_count() << ','
        << cfg.two_vertex_direction_lines() << '\n';
    return ok;
  }
  PointSet set;
  if (a.example == "parallel-aps") {
    set = gen_parallel_aps(a.n, a.double_density);
  } else if (a.example == "triangle-ratios") {
    set = gen_triangle_ratios(a.n);
  } else if (a.example == "cubic-power") {
    set = gen_cubic_power(a.n);
  } else if (a.example == "parabola-ap") {
    set = gen_parabola_ap(a.n);
  } else if (a.example == "grid") {
    set = gen_grid(a.n);
  } else {
    throw UsageError("unknown example " + a.example);
  }
  if (a.out_file.empty()) {
    write_points(out, set);
  } else {
    write_points_file(a.out_file, set);
  }
  return ok;
}

// --- count / directions / bound ------------------------------------------------------

struct CountArgs {
  std::string in_file;
  int k = 3;
  bool exactly = false;
  std::string tripartite;
  unsigned workers = 0;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  const PointSet set = read_points_file(a.in_file);
  const EnumerationOptions opts{a.workers, false};
  if (!a.tripartite.empty()) {
    out << tripartite_count(set, parse_pattern(a.tripartite), opts) << '\n';
    return ok;
  }
  if (a.k < 2) throw UsageError("--k must be at least 2");
  const auto table = spanned_lines(set, opts);
  out << k_rich_count(table, static_cast<std::size_t>(a.k), a.exactly ? RichMode::exactly : RichMode::at_least)
      << '\n';
  return ok;
}

// --- fit-cubic -----------------------------------------------------------------------

int cmd_fit_cubic(const std::string& in_file, const std::string& indices, std::ostream& out) {
  const PointSet set = read_points_file(in_file);
  std::vector<ProjPoint> chosen;
  if (indices.empty()) {
    chosen = set.points();
  } else {
    for (const auto& s : split(indices)) {
      std::size_t pos = 0;
      long i = -1;
      try {
        i = std::stol(s, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != s.size() || i < 0 || static_cast<std::size_t>(i) >= set.size()) {
        throw UsageError("bad point index '" + s + "'");
      }
      chosen.push_back(set[static_cast<std::size_t>(i)]);
    }
  }
  std::vector<ProjLine> candidates;
  for (const auto& li : rich_incidences(PointSet(chosen), 3)) candidates.push_back(li.line);
  const auto basis = fit_cubics(chosen);
  out << "dimension," << basis.size() << '\n';
  for (const auto& f : basis) {
    out << "cubic," << f.to_string() << ',' << to_string(classify_with_candidates(f, candidates).kind) << '\n';
  }
  return ok;
}

// --- group-check ---------------------------------------------------------------------

PointSet parabola_with_directions(int n) {
  std::vector<ProjPoint> pts;
  std::vector<int> labels;
  for (int i = 1; i <= n; ++i) {
    pts.push_back(mk_point(Rational(i), Rational(i * i)));
    labels.push_back(1);
  }
  for (int s = -1; s <= 2 * n; ++s) {
    pts.emplace_back(Integer(1), Integer(s), Integer(0));
    labels.push_back(2);
  }
  return PointSet(pts, labels);
}

PointSet hyperbola_with_directions(int n) {
  std::vector<ProjPoint> pts;
  std::vector<int> labels;
  std::vector<Rational> slopes{Rational(1)};
  for (int p = 1; p <= n; ++p) {
    pts.push_back(mk_point(Rational(p), Rational(1) / p));
    labels.push_back(1);
    for (int q = p + 1; q <= n; ++q) slopes.push_back(Rational(-1) / (p * q));
  }
  std::sort(slopes.begin(), slopes.end());
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());
  for (const auto& s : slopes) {
    pts.emplace_back(clear_denominators({Rational(1), s, Rational(0)}));
    labels.push_back(2);
  }
  return PointSet(pts, labels);
}

int cmd_group_check(const std::string& config, int n, std::ostream& out) {
  std::optional<PointSet> set;
  std::optional<GroupDescription> desc;
  if (config == "example1") {
    set = gen_parallel_aps(n);
    desc = parallel_lines_description();
  } else if (config == "example4") {
    set = gen_cubic_power(n);
    desc = cuspidal_description();
  } else if (config == "triangle") {
    set = gen_triangle_ratios(n);
    desc = triangle_description({mk_point(0, 0), mk_point(1, 0), mk_point(0, 1)});
  } else if (config == "parabola-inf") {
    if (n < 1) throw UsageError("--n must be positive");
    set = parabola_with_directions(n);
    desc = parabola_plus_infinity_description();
  } else if (config == "hyperbola-inf") {
    if (n < 1) throw UsageError("--n must be positive");
    set = hyperbola_with_directions(n);
    desc = hyperbola_plus_infinity_description();
  } else {
    throw UsageError("unknown config " + config);
  }
  const auto r = verify_group_description(*set, *desc);
  out << "config,description,n,points,triples_checked,failures,holds\n"
      << config << ',' << to_string(desc->kind) << ',' << n << ',' << set->size() << ',' << r.triples_checked
      << ',' << r.failures << ',' << (r.holds ? "true" : "false") << '\n';
  if (!r.holds) {
    const auto& f = *r.first_failure;
    throw InvariantViolation("collinear iff group identity, first failure at points " + std::to_string(f[0]) +
                             "," + std::to_string(f[1]) + "," + std::to_string(f[2]));
  }
  return ok;
}

// --- tenpoint ------------------------------------------------------------------------

struct TenpointArgs {
  std::string curve;
  std::string base;
  std::string delta;
  int extend = 0;
};

// Lifts the base x-coordinates with signs making the three points collinear.
std::array<ProjPoint, 3> lift_collinear(const WeierstrassCurve& e, const std::vector<Rational>& xs) {
  std::array<std::vector<ProjPoint>, 3> lifts;
  for (std::size_t i = 0; i < 3; ++i) {
    lifts[i] = e.lift(xs[i]);
    if (lifts[i].empty()) throw GeometryError("x = " + xs[i].get_str() + " has no rational point on the curve");
  }
  for (const auto& p : lifts[0])
    for (const auto& q : lifts[1])
      for (const auto& r : lifts[2]) {
        if (p != q && q != r && p != r && collinear(p, q, r)) return {p, q, r};
      }
  throw GeometryError("no sign choice makes the base points collinear");
}

int cmd_tenpoint(const TenpointArgs& a, std::ostream& out) {
  const auto base = rational_list(a.base, 3, "--base");
  const Rational delta = parse_rational(a.delta);
  TenPointConfig cfg = [&] {
    if (a.curve == "cuspidal") return build_tenpoint(CuspidalBase{base[0], base[1], base[2], delta});
    const std::string prefix = "weierstrass:";
    if (a.curve.rfind(prefix, 0) != 0) throw UsageError("unknown curve " + a.curve);
    const auto ab = rational_list(a.curve.substr(prefix.size()), 2, "weierstrass:a,b");
    const WeierstrassCurve e{ab[0], ab[1]};
    const auto abc = lift_collinear(e, base);
    const auto d = e.lift(delta);
    if (d.empty()) throw GeometryError("delta x = " + delta.get_str() + " has no rational point on the curve");
    return build_tenpoint(WeierstrassBase{e, abc[0], abc[1], abc[2], d.front()});
  }();
  if (a.extend < 0) throw UsageError("--extend must be non-negative");
  const Cantilever cl = extend_cantilever(cfg, a.extend);

  out << "point,X,Y,Z\n";
  for (int i = 0; i <= cl.max_a(); ++i) out << 'A' << i << ',' << homogeneous_row(cl.A(i)) << '\n';
  for (int j = 1; j <= cl.max_b(); ++j) out << 'B' << j << ',' << homogeneous_row(cl.B(j)) << '\n';
  for (int k = 0; k <= cl.max_c(); ++k) out << 'C' << k << ',' << homogeneous_row(cl.C(k)) << '\n';

  const auto lattice = lattice_report(cl);
  const auto nine = nine_point_report(cfg);
  std::size_t off_curve = 0;
  for (const auto& p : cl.points()) off_curve += !on_curve(*cfg.curve, p);
  out << "\ncheck,value\n"
      << "lattice_triples," << lattice.triples_checked << '\n'
      << "lattice_coincident," << lattice.coincident << '\n'
      << "lattice_failures," << lattice.failures << '\n'
      << "nine_point," << (nine.holds ? "true" : "false") << '\n'
      << "off_curve," << off_curve << '\n';
  if (!lattice.holds) throw InvariantViolation("A_i, B_j, C_k collinear iff i + k = j");
  if (!nine.holds) throw InvariantViolation("cubics through nine points pass through B3");
  if (off_curve != 0) throw InvariantViolation("cantilever points lie on the curve");
  return ok;
}

// --- conic ---------------------------------------------------------------------------

struct ConicArgs {
  std::string mode;
  std::string a, b, x, y, xs;
  std::string e1, e2, e3;
};

ExternalPoint external(const std::string& ab, const char* what) {
  const auto v = rational_list(ab, 2, what);
  return ExternalPoint(v[0], v[1]);
}

int cmd_conic(const ConicArgs& a, std::ostream& out) {
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string("missing ") + flag);
    return parse_rational(v);
  };
  if (a.mode == "reps") {
    if (a.e1.empty() || a.e2.empty() || a.e3.empty()) throw UsageError("reps needs --e1, --e2, --e3");
    const auto e1 = external(a.e1, "--e1"), e2 = external(a.e2, "--e2"), e3 = external(a.e3, "--e3");
    const auto lambda = affine_coefficient(e1, e2, e3);
    out << "collinear,lambda\n" << (lambda ? "true," + format_rational(*lambda) : std::string("false,")) << '\n';
    return ok;
  }
  const ExternalPoint e(need(a.a, "--a"), need(a.b, "--b"));
  if (a.mode == "collinear") {
    out << (parabola_collinear(need(a.x, "--x"), need(a.y, "--y"), e) ? "true" : "false") << '\n';
  } else if (a.mode == "involution") {
    out << format_rational(involution_value(e, need(a.x, "--x"))) << '\n';
  } else if (a.mode == "image-count") {
    auto xs = a.xs.empty() ? std::vector<Rational>{} : rational_list(a.xs, 0, "--xs");
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    out << image_count(e, xs) << '\n';
  } else {
    throw UsageError("unknown conic mode " + a.mode);
  }
  return ok;
}

// --- experiment ----------------------------------------------------------------------

std::vector<int> int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  for (const auto& s : split(text)) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty()) throw UsageError(std::string("bad integer in ") + what + ": '" + s + "'");
    out.push_back(v);
  }
  return out;
}

int cmd_experiment(const std::string& kind, const std::string& degrees, const std::string& sizes,
                   unsigned workers, std::ostream& out) {
  const auto ds = int_list(degrees, "--degree");
  const auto ns = int_list(sizes, "--n");
  for (int n : ns)
    if (n < 1) throw UsageError("--n must be positive");
  const EnumerationOptions opts{workers, false};
  out.setf(std::ios::fixed);
  out.precision(6);
  if (kind == "dichotomy") {
    out << "status,degree,n,N,count,count_over_n2,count_over_N2_8\n";
    for (const auto& r : dichotomy_experiment(ds, ns, opts)) {
      out << "evidence," << r.degree << ',' << r.n << ',' << r.sample_size << ',' << r.count << ',' << r.per_n2
          << ',' << r.ratio << '\n';
    }
  } else if (kind == "quadruple") {
    out << "degree,n,quadruple_lines\n";
    for (int d : ds)
      for (int n : ns)
        out << d << ',' << n << ',' << quadruple_experiment(CurveSpec::graph_power(d), integer_range(-n, n), opts)
            << '\n';
  } else if (kind == "directions") {
    out << "degree,n,directions\n";
    for (int d : ds)
      for (int n : ns)
        out << d << ',' << n << ','
            << few_directions_experiment(CurveSpec::graph_power(d), integer_range(1, n), opts) << '\n';
  } else {
    throw UsageError("unknown experiment kind " + kind);
  }
  return ok;
}

// --- plot ----------------------------------------------------------------------------

int cmd_plot(const std::string& in_file, const std::string& out_file, bool mark, std::ostream& out) {
  const PointSet set = read_points_file(in_file);
  const std::string svg = render_svg(set, {mark, 640});
  std::ofstream f(out_file, std::ios::binary);
  if (!f) throw FormatError("cannot write " + out_file);
  f << svg;
  out << out_file << '\n';
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on point-line configurations", "orchard"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a generated configuration as a points file");
  generate->add_option("--example", gen.example, "Configuration family")
      ->required()
      ->check(CLI::IsMember({"parallel-aps", "triangle-ratios", "ngon", "cubic-power", "parabola-ap", "grid"}));
  generate->add_option("--n", gen.n, "Size parameter")->required();
  generate->add_option("--out", gen.out_file, "Output file (standard output if omitted)");
  generate->add_flag("--double-density", gen.double_density, "parallel-aps: twice as many points on the middle row");

  CountArgs cnt;
  auto* count = app.add_subcommand("count", "Count rich or tripartite lines");
  count->add_option("--in", cnt.in_file, "Points file")->required();
  count->add_option("--k", cnt.k, "Line richness (default 3)");
  count->add_flag("--exactly", cnt.exactly, "Count lines with exactly k points");
  count->add_option("--tripartite", cnt.tripartite, "Label pattern such as 123 or 112");
  count->add_option("--workers", cnt.workers, "Worker threads (0 = all cores)");

  std::string dir_in;
  auto* directions = app.add_subcommand("directions", "Count distinct directions of connecting lines");
  directions->add_option("--in", dir_in, "Points file")->required();

  long bound_n = 0;
  auto* bound = app.add_subcommand("bound", "Print floor(n(n-3)/6) + 1");
  bound->add_option("--n", bound_n, "Number of points")->required();

  std::string fit_in, fit_indices;
  auto* fit = app.add_subcommand("fit-cubic", "Basis of the cubics through the given points");
  fit->add_option("--in", fit_in, "Points file")->required();
  fit->add_option("--indices", fit_indices, "Comma-separated 0-based point indices");

  std::string gc_config;
  int gc_n = 0;
  auto* group = app.add_subcommand("group-check", "Check collinear iff group identity exhaustively");
  group->add_option("--config", gc_config, "Configuration")
      ->required()
      ->check(CLI::IsMember({"example1", "example4", "triangle", "parabola-inf", "hyperbola-inf"}));
  group->add_option("--n", gc_n, "Size parameter")->required();

  TenpointArgs tp;
  auto* tenpoint = app.add_subcommand("tenpoint", "Build a ten point configuration and extend it");
  tenpoint->alias("cantilever");
  tenpoint->add_option("--curve", tp.curve, "cuspidal or weierstrass:a,b")->required();
  tenpoint->add_option("--base", tp.base, "Base parameters p,q,r (x-coordinates on a Weierstrass curve)")
      ->required()
      ->allow_extra_args(false);
  tenpoint->add_option("--delta", tp.delta, "Step (x-coordinate of the step point on a Weierstrass curve)")
      ->required();
  tenpoint->add_option("--extend", tp.extend, "Number of cantilever steps");

  ConicArgs cn;
  auto* conic = app.add_subcommand("conic", "Parabola involutions and representatives");
  conic->add_option("--mode", cn.mode, "collinear, involution, image-count or reps")
      ->required()
      ->check(CLI::IsMember({"collinear", "involution", "image-count", "reps"}));
  conic->add_option("--a", cn.a, "External point x-coordinate");
  conic->add_option("--b", cn.b, "External point y-coordinate");
  conic->add_option("--x", cn.x, "Parabola x-coordinate");
  conic->add_option("--y", cn.y, "Second parabola x-coordinate");
  conic->add_option("--xs", cn.xs, "Comma-separated sample set");
  conic->add_option("--e1", cn.e1, "External point a,b");
  conic->add_option("--e2", cn.e2, "External point a,b");
  conic->add_option("--e3", cn.e3, "External point a,b");

  std::string ex_kind, ex_degree, ex_n;
  unsigned ex_workers = 0;
  auto* experiment = app.add_subcommand("experiment", "Desk-scale incidence experiments on y = x^d (CSV)");
  experiment->add_option("--kind", ex_kind, "dichotomy, quadruple or directions")
      ->required()
      ->check(CLI::IsMember({"dichotomy", "quadruple", "directions"}));
  experiment->add_option("--degree", ex_degree, "Degree or comma-separated degrees")->required();
  experiment->add_option("--n", ex_n, "Size or comma-separated sizes")->required();
  experiment->add_option("--workers", ex_workers, "Worker threads (0 = all cores)");

  std::string plot_in, plot_out;
  bool plot_mark = false;
  auto* plot = app.add_subcommand("plot", "Draw a points file as SVG");
  plot->add_option("--in", plot_in, "Points file")->required();
  plot->add_option("--out", plot_out, "SVG file")->required();
  plot->add_flag("--mark-triple-lines", plot_mark, "Draw every line through three or more points");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out);
    if (count->parsed()) return cmd_count(cnt, out);
    if (directions->parsed()) {
      out << direction_count(read_points_file(dir_in)) << '\n';
      return ok;
    }
    if (bound->parsed()) {
      out << green_tao_bound(bound_n) << '\n';
      return ok;
    }
    if (fit->parsed()) return cmd_fit_cubic(fit_in, fit_indices, out);
    if (group->parsed()) return cmd_group_check(gc_config, gc_n, out);
    if (tenpoint->parsed()) return cmd_tenpoint(tp, out);
    if (conic->parsed()) return cmd_conic(cn, out);
    if (experiment->parsed()) return cmd_experiment(ex_kind, ex_degree, ex_n, ex_workers, out);
    if (plot->parsed()) return cmd_plot(plot_in, plot_out, plot_mark, out);
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << '\n';
    return invariant_error;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return invariant_error;
  }
  return usage_error;
}

}  // namespace orchard::cli
