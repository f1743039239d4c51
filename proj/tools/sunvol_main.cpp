// sunvol — construction, volumes, integration, sampling, and verification
// for the generalized Euler-angle charts of SU(n), U(n), and their cosets.

#include "sunvol/sampling.hpp"
#include "sunvol/serialize.hpp"
#include "sunvol/verify.hpp"
#include "sunvol/volumes.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using sunvol::CVector;
using sunvol::Complex;
using sunvol::Matrix;
using json = nlohmann::json;

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    out += ch;
    if (ch == '"') out += '"';
  }
  out += '"';
  return out;
}

struct KernelChoice {
  sunvol::kernels::ProductKernel kernel;
  sunvol::euler::AngleVector ranges;
};

// "<context>:<n>" with context one of haar-su | pure-state | truncated | hurwitz
KernelChoice kernel_from_spec(const std::string& spec,
                              sunvol::euler::RangeConvention convention) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw sunvol::serialize::SchemaError(
        "kernel spec must look like \"pure-state:3\" (context:n)");
  const std::string context = spec.substr(0, colon);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing text");
  } catch (const std::exception&) {
    throw sunvol::serialize::SchemaError("kernel spec has a malformed dimension: \"" +
                                         spec + "\"");
  }

  namespace k = sunvol::kernels;
  namespace e = sunvol::euler;
  KernelChoice out;
  if (context == "haar-su") {
    out.kernel = k::haar_kernel_su(n);
    out.ranges = e::range_catalog(n, e::ChartContext::SUFull, convention);
  } else if (context == "pure-state") {
    out.kernel = k::pure_state_kernel(n, convention);
    out.ranges = e::range_catalog(n, e::ChartContext::ProjectiveSpace, convention);
  } else if (context == "truncated") {
    out.kernel = k::truncated_haar_kernel(n, convention);
    out.ranges = e::range_catalog(n, e::ChartContext::TruncatedHaar, convention);
  } else if (context == "hurwitz") {
    if (convention != e::RangeConvention::Covering)
      throw std::invalid_argument("the spherical-coordinate chart has no quotient variant");
    out.kernel = k::hurwitz_kernel(n);
    out.ranges = k::hurwitz_ranges(n);
  } else {
    throw sunvol::serialize::SchemaError("unknown kernel context \"" + context +
                                         "\" (haar-su|pure-state|truncated|hurwitz)");
  }
  return out;
}

// ---------------------------------------------------------------------------
// command handlers
// ---------------------------------------------------------------------------

int cmd_volume(const std::string& expr, const std::string& format) {
  const auto query = sunvol::volumes::parse_volume_expr(expr);
  const auto vol = sunvol::volumes::eval_volume(query);
  if (format == "csv") {
    std::cout << "expr,exact,float\n"
              << csv_quote(expr) << ',' << csv_quote(vol.str()) << ',' << vol.to_double()
              << '\n';
  } else if (format == "pretty") {
    std::cout << expr << " = " << vol.str() << " = " << vol.to_double() << '\n';
  } else {
    json j = sunvol::serialize::to_json(vol);
    j["expr"] = expr;
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_element(const std::string& group, const std::string& angles_path,
                const std::string& format) {
  const auto query = sunvol::volumes::parse_volume_expr(group);
  if (query.kind != sunvol::volumes::VolumeQuery::Kind::Group)
    throw sunvol::serialize::SchemaError("--group must be SU(n) or U(n)");
  const bool special = query.coset.numerator.kind == sunvol::volumes::GroupKind::SU;
  const int n = query.coset.numerator.param;

  std::ifstream in(angles_path);
  if (!in)
    throw sunvol::serialize::SchemaError("cannot open angle file \"" + angles_path + "\"");
  json jin;
  try {
    in >> jin;
  } catch (const json::exception& e) {
    throw sunvol::serialize::SchemaError(std::string("angle file is not valid JSON: ") +
                                         e.what());
  }
  const auto av = sunvol::serialize::angle_vector_from_json(jin);

  std::ostringstream warnings;
  sunvol::algebra::GellMannBasis basis(special ? n : n + 1);
  const Matrix u = special ? sunvol::euler::su_element(basis, av, &warnings)
                           : sunvol::euler::u_element(basis, av, &warnings);

  const Complex det = u.determinant();
  const double unit_defect = sunvol::algebra::unitarity_defect(u);
  const double det_defect = std::abs(det - Complex(1.0, 0.0));

  if (format == "csv") {
    std::cout << "row,col,re,im\n";
    for (Eigen::Index r = 0; r < u.rows(); ++r)
      for (Eigen::Index c = 0; c < u.cols(); ++c)
        std::cout << r + 1 << ',' << c + 1 << ',' << u(r, c).real() << ','
                  << u(r, c).imag() << '\n';
  } else if (format == "pretty") {
    std::cout << group << (special ? "" : " (unit-determinant embedding)") << ":\n"
              << u << "\nunitarity defect " << unit_defect << ", det defect "
              << det_defect << '\n';
  } else {
    json j{{"schema", 1},
           {"group", group},
           {"matrix", matrix_json(u)},
           {"unitarity_defect", unit_defect},
           {"det", {det.real(), det.imag()}},
           {"det_defect", det_defect}};
    if (!special) {
      j["embedding_dim"] = n + 1;
      j["block"] = matrix_json(u.topLeftCorner(n, n));
    }
    std::string warn_text = warnings.str();
    if (!warn_text.empty()) {
      json warn_lines = json::array();
      std::istringstream ws(warn_text);
      for (std::string line; std::getline(ws, line);)
        if (!line.empty()) warn_lines.push_back(line);
      j["warnings"] = std::move(warn_lines);
    }
    std::cout << j.dump(2) << '\n';
  }
  if (!warnings.str().empty() && format != "json") std::cerr << warnings.str();
  return 0;
}

int cmd_kernel(const std::string& context, int n, const std::string& convention,
               const std::string& format) {
  const auto conv = sunvol::serialize::convention_from_string(convention);
  const auto choice = kernel_from_spec(context + ":" + std::to_string(n), conv);
  if (format == "csv") {
    std::cout << "slot,form,p\n";
    for (const auto& f : choice.kernel.factors)
      std::cout << f.angle_index << ',' << sunvol::kernels::to_string(f.form) << ','
                << (f.form == sunvol::kernels::FactorForm::Sin2A ? 1 : f.p) << '\n';
  } else if (format == "pretty") {
    std::cout << "kernel " << context << ":" << n << " (xi = " << choice.kernel.xi
              << ", " << choice.kernel.factors.size() << " weighted factors)\n";
    for (const auto& f : choice.kernel.factors) {
      std::cout << "  slot " << f.angle_index << ": ";
      switch (f.form) {
        case sunvol::kernels::FactorForm::Sin2A: std::cout << "sin(2a)"; break;
        case sunvol::kernels::FactorForm::CosPowSin:
          std::cout << "cos^" << f.p << "(a) sin(a)";
          break;
        case sunvol::kernels::FactorForm::CosSinPow:
          std::cout << "cos(a) sin^" << f.p << "(a)";
          break;
      }
      std::cout << '\n';
    }
  } else {
    std::cout << sunvol::serialize::to_json(choice.kernel).dump(2) << '\n';
  }
  return 0;
}

int cmd_integrate(const std::string& spec, const std::string& method, long long samples,
                  std::optional<std::uint64_t> seed, int workers,
                  const std::string& convention, const std::string& format) {
  const auto conv = sunvol::serialize::convention_from_string(convention);
  const auto choice = kernel_from_spec(spec, conv);

  sunvol::numerics::IntegrationResult result;
  if (method == "factorized") {
    result = sunvol::numerics::integrate_factorized(choice.kernel, choice.ranges);
  } else if (method == "mc") {
    if (!seed) {
      std::cerr << "error: --method mc requires an explicit --seed\n";
      return 2;
    }
    result = sunvol::numerics::integrate_monte_carlo(choice.kernel, choice.ranges,
                                                     samples, *seed, workers);
  } else {
    std::cerr << "error: --method must be factorized or mc\n";
    return 2;
  }

  if (format == "csv") {
    std::cout << "kernel,method,value,abs_error_estimate,n_evals,seed\n"
              << csv_quote(spec) << ',' << sunvol::numerics::to_string(result.method)
              << ',' << result.value << ',' << result.abs_error_estimate << ','
              << result.n_evals << ',';
    if (result.seed) std::cout << *result.seed;
    std::cout << '\n';
  } else if (format == "pretty") {
    std::cout << spec << " [" << sunvol::numerics::to_string(result.method)
              << "] = " << result.value << " +/- " << result.abs_error_estimate << '\n';
  } else {
    json j = sunvol::serialize::to_json(result);
    j["kernel"] = spec;
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_sample(const std::string& what, int n, long long count, std::uint64_t seed,
               double s, long long rejection_cap, const std::string& format) {
  if (count < 1) throw std::invalid_argument("--count must be >= 1");
  sunvol::rng::SeededStream stream(seed);

  if (format == "json") {
    json header{{"schema", 1}, {"what", what}, {"n", n}, {"count", count}, {"seed", seed}};
    if (what == "mixed") header["s"] = s;
    std::cout << header.dump() << '\n';
  }

  if (what == "su") {
    const sunvol::sampling::SuSampler sampler(n);
    if (format == "csv") std::cout << "draw,row,col,re,im\n";
    for (long long i = 0; i < count; ++i) {
      const Matrix u = sampler.draw(stream);
      if (format == "csv") {
        for (Eigen::Index r = 0; r < u.rows(); ++r)
          for (Eigen::Index c = 0; c < u.cols(); ++c)
            std::cout << i + 1 << ',' << r + 1 << ',' << c + 1 << ',' << u(r, c).real()
                      << ',' << u(r, c).imag() << '\n';
      } else if (format == "pretty") {
        std::cout << "draw " << i + 1 << ":\n" << u << '\n';
      } else {
        std::cout << json{{"draw", i + 1}, {"unitary", matrix_json(u)}}.dump() << '\n';
      }
    }
  } else if (what == "pure") {
    const sunvol::sampling::PureStateSampler sampler(n);
    if (format == "csv") std::cout << "draw,i,re,im\n";
    for (long long i = 0; i < count; ++i) {
      const CVector v = sampler.draw(stream);
      if (format == "csv") {
        for (Eigen::Index k = 0; k < v.size(); ++k)
          std::cout << i + 1 << ',' << k + 1 << ',' << v(k).real() << ',' << v(k).imag()
                    << '\n';
      } else if (format == "pretty") {
        std::cout << "draw " << i + 1 << ": " << v.transpose() << '\n';
      } else {
        std::cout << json{{"draw", i + 1}, {"state", vector_json(v)}}.dump() << '\n';
      }
    }
  } else if (what == "mixed") {
    const auto spec = sunvol::kernels::DirichletSpec::make(
        n, s, sunvol::kernels::DirichletMode::NumericallyNormalized);
    if (format == "csv") {
      std::cout << "draw";
      for (int k = 1; k <= n; ++k) std::cout << ",lambda" << k;
      std::cout << '\n';
    }
    for (long long i = 0; i < count; ++i) {
      const auto sample =
          sunvol::sampling::sample_density_matrix(n, spec, stream, rejection_cap);
      if (format == "csv") {
        std::cout << i + 1;
        for (double lam : sample.eigenvalues) std::cout << ',' << lam;
        std::cout << '\n';
      } else if (format == "pretty") {
        std::cout << "draw " << i + 1 << " eigenvalues:";
        for (double lam : sample.eigenvalues) std::cout << ' ' << lam;
        std::cout << "\nrho:\n" << sample.rho << '\n';
      } else {
        json lam = json::array();
        for (double l : sample.eigenvalues) lam.push_back(l);
        std::cout << json{{"draw", i + 1},
                          {"eigenvalues", std::move(lam)},
                          {"unitary", matrix_json(sample.unitary)},
                          {"rho", matrix_json(sample.rho)}}
                         .dump()
                  << '\n';
      }
    }
  } else {
    std::cerr << "error: --what must be su, pure, or mixed\n";
    return 2;
  }
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& format) {
  const auto results = sunvol::verify::run_suite(suite);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;

  if (format == "csv") {
    std::cout << "id,name,pass,seconds\n";
    for (const auto& r : results)
      std::cout << r.id << ',' << csv_quote(r.name) << ',' << (r.pass ? 1 : 0) << ','
                << r.seconds << '\n';
  } else if (format == "pretty") {
    for (const auto& r : results)
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " ("
                << r.seconds << " s) — " << r.detail << '\n';
    std::cout << (all ? "all criteria passed" : "FAILURES PRESENT") << '\n';
  } else {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"id", r.id},
                     {"name", r.name},
                     {"pass", r.pass},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
    std::cout << json{{"schema", 1},
                      {"suite", suite},
                      {"criteria", std::move(arr)},
                      {"all_pass", all}}
                     .dump(2)
              << '\n';
  }
  return all ? 0 : 1;
}

int cmd_fscheck(const std::string& chart_name, int n, int points, std::uint64_t seed,
                double h, double margin, double tol, const std::string& format) {
  const auto chart = chart_name == "hurwitz" ? sunvol::numerics::Chart::Hurwitz
                     : chart_name == "euler"
                         ? sunvol::numerics::Chart::Euler
                         : throw sunvol::serialize::SchemaError(
                               "--chart must be hurwitz or euler");
  if (points < 1) throw std::invalid_argument("--points must be >= 1");

  const auto ranges = sunvol::numerics::chart_ranges(n, chart);
  const auto kernel = chart == sunvol::numerics::Chart::Hurwitz
                          ? sunvol::kernels::hurwitz_kernel(n)
                          : sunvol::kernels::pure_state_kernel(n - 1);
  sunvol::rng::SeededStream stream(seed);

  double max_err = 0.0, sum_err = 0.0;
  std::vector<double> worst_point;
  for (int i = 0; i < points; ++i) {
    sunvol::numerics::StateVectorChart sc;
    sc.n = n;
    sc.chart = chart;
    for (const auto& [lo, hi] : ranges)
      sc.point.push_back(stream.uniform(lo + margin, hi - margin));
    const double got = sunvol::numerics::fubini_study_density(sc, h);
    const double want = kernel.evaluate(sc.point);
    const double err = std::abs(got - want) / std::max(1e-300, std::abs(want));
    sum_err += err;
    if (err > max_err) {
      max_err = err;
      worst_point = sc.point;
    }
  }
  const double mean_err = sum_err / points;
  const bool pass = max_err <= tol;

  if (format == "csv") {
    std::cout << "chart,n,points,h,max_rel_err,mean_rel_err,pass\n"
              << chart_name << ',' << n << ',' << points << ',' << h << ',' << max_err
              << ',' << mean_err << ',' << (pass ? 1 : 0) << '\n';
  } else if (format == "pretty") {
    std::cout << "chart " << chart_name << " n=" << n << ": max rel err " << max_err
              << ", mean " << mean_err << " over " << points << " points ("
              << (pass ? "pass" : "FAIL") << " at tol " << tol << ")\n";
  } else {
    json wp = json::array();
    for (double x : worst_point) wp.push_back(x);
    std::cout << json{{"schema", 1},
                      {"chart", chart_name},
                      {"n", n},
                      {"points", points},
                      {"h", h},
                      {"seed", seed},
                      {"max_rel_err", max_err},
                      {"mean_rel_err", mean_err},
                      {"worst_point", std::move(wp)},
                      {"pass", pass}}
                     .dump(2)
              << '\n';
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sunvol — Euler-angle charts, invariant volumes, product-measure integration, "
      "and Haar/state sampling for SU(n), U(n), and their cosets"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();

  // volume
  auto* volume = app.add_subcommand("volume", "closed-form group/coset volumes");
  std::string coset_expr;
  volume->add_option("--coset", coset_expr,
                     "expression: SU(n), U(n), CP(n), Flag(n), Gr(n,m), or a coset like "
                     "SU(9)/U(4)xU(4) with factors SU(p), U(p), U1[SU(m)]")
      ->required();

  // element
  auto* element = app.add_subcommand("element", "build a group element from angles");
  std::string group_text, angles_path;
  element->add_option("--group", group_text, "SU(n) or U(n)")->required();
  element->add_option("--angles", angles_path, "path to an angle-vector JSON file")
      ->required();

  // kernel
  auto* kernel = app.add_subcommand("kernel", "print a product-measure kernel");
  std::string kernel_context, kernel_convention = "covering";
  int kernel_n = 0;
  kernel->add_option("--context", kernel_context, "haar-su|pure-state|truncated|hurwitz")
      ->required()
      ->check(CLI::IsMember({"haar-su", "pure-state", "truncated", "hurwitz"}));
  kernel->add_option("--n", kernel_n, "dimension parameter")->required();
  kernel->add_option("--convention", kernel_convention, "covering|quotient")
      ->capture_default_str()
      ->check(CLI::IsMember({"covering", "quotient"}));

  // integrate
  auto* integrate = app.add_subcommand("integrate", "integrate a kernel over its box");
  std::string int_spec, int_method, int_convention = "covering";
  long long int_samples = 1000000;
  int int_workers = 4;
  std::optional<std::uint64_t> int_seed;
  integrate->add_option("--kernel", int_spec, "kernel spec, e.g. pure-state:3")
      ->required();
  integrate->add_option("--method", int_method, "factorized|mc")
      ->required()
      ->check(CLI::IsMember({"factorized", "mc"}));
  integrate->add_option("--samples", int_samples, "Monte Carlo sample count")
      ->capture_default_str();
  integrate->add_option("--seed", int_seed, "Monte Carlo seed (required for mc)");
  integrate->add_option("--workers", int_workers, "Monte Carlo stream count")
      ->capture_default_str();
  integrate->add_option("--convention", int_convention, "covering|quotient")
      ->capture_default_str()
      ->check(CLI::IsMember({"covering", "quotient"}));

  // sample
  auto* sample = app.add_subcommand("sample", "draw group elements or states");
  std::string sample_what;
  int sample_n = 0;
  long long sample_count = 1, sample_cap = 100000;
  std::optional<std::uint64_t> sample_seed;
  double sample_s = 1.0;
  sample->add_option("--what", sample_what, "su|pure|mixed")
      ->required()
      ->check(CLI::IsMember({"su", "pure", "mixed"}));
  sample->add_option("--n", sample_n, "dimension")->required();
  sample->add_option("--count", sample_count, "number of draws")->capture_default_str();
  sample->add_option("--seed", sample_seed, "stream seed (required)");
  sample->add_option("--s", sample_s, "eigenvalue concentration (mixed draws)")
      ->capture_default_str();
  sample->add_option("--rejection-cap", sample_cap,
                     "eigenvalue rejection attempt cap (mixed draws)")
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run the built-in verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "volumes|measures|sampling|all")
      ->capture_default_str()
      ->check(CLI::IsMember({"volumes", "measures", "sampling", "all"}));

  // fscheck
  auto* fscheck =
      app.add_subcommand("fscheck", "metric density vs analytic kernel report");
  std::string fs_chart;
  int fs_n = 4, fs_points = 100;
  std::optional<std::uint64_t> fs_seed;
  double fs_h = 1e-5, fs_margin = 0.1, fs_tol = 1e-4;
  fscheck->add_option("--chart", fs_chart, "hurwitz|euler")
      ->required()
      ->check(CLI::IsMember({"hurwitz", "euler"}));
  fscheck->add_option("--n", fs_n, "ambient dimension")->capture_default_str();
  fscheck->add_option("--points", fs_points, "number of random interior points")
      ->capture_default_str();
  fscheck->add_option("--seed", fs_seed, "point-generation seed (required)");
  fscheck->add_option("--step", fs_h, "finite-difference step")->capture_default_str();
  fscheck->add_option("--margin", fs_margin, "interior margin from chart boundaries")
      ->capture_default_str();
  fscheck->add_option("--tol", fs_tol, "pass/fail threshold on max relative error")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // malformed invocation
  }

  try {
    if (volume->parsed()) return cmd_volume(coset_expr, format);
    if (element->parsed()) return cmd_element(group_text, angles_path, format);
    if (kernel->parsed())
      return cmd_kernel(kernel_context, kernel_n, kernel_convention, format);
    if (integrate->parsed())
      return cmd_integrate(int_spec, int_method, int_samples, int_seed, int_workers,
                           int_convention, format);
    if (sample->parsed()) {
      if (!sample_seed) {
        std::cerr << "error: sample requires an explicit --seed\n";
        return 2;
      }
      return cmd_sample(sample_what, sample_n, sample_count, *sample_seed, sample_s,
                        sample_cap, format);
    }
    if (verify->parsed()) return cmd_verify(suite, format);
    if (fscheck->parsed()) {
      if (!fs_seed) {
        std::cerr << "error: fscheck requires an explicit --seed\n";
        return 2;
      }
      return cmd_fscheck(fs_chart, fs_n, fs_points, *fs_seed, fs_h, fs_margin, fs_tol,
                         format);
    }
  } catch (const sunvol::volumes::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const sunvol::serialize::SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;  // constraint violation
  }
  return 0;
}
