#include "heightzeta_cli/cli.hpp"

#include "heightzeta/error.hpp"
#include "heightzeta/geometry.hpp"
#include "heightzeta/local.hpp"
#include "heightzeta/points.hpp"
#include "heightzeta/spectral.hpp"
#include "heightzeta/zeta.hpp"
#include "heightzeta_cli/criteria.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#ifndef HEIGHTZETA_DEFAULT_DATA_DIR
#define HEIGHTZETA_DEFAULT_DATA_DIR "."
#endif

namespace heightzeta::cli {

RunConfig default_run_config() {
  RunConfig cfg;
  cfg.data_dir = HEIGHTZETA_DEFAULT_DATA_DIR;
  return cfg;
}

namespace {

using json = nlohmann::json;

// Raised for command lines that parse but do not make sense.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

std::int64_t int_of(const Rational& q, const char* what) {
  if (!is_integer(q)) throw UsageError(std::string(what) + " must be an integer");
  return numerator_of(q).convert_to<std::int64_t>();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

void write_points_csv(std::ostream& os, const points::HeightBound& bound) {
  os << "x,z,y,norm_sq\n";
  points::enumerate(bound, [&os](const points::HeightPoint& p) {
    os << to_fraction_string(p.g.x) << ',' << to_fraction_string(p.g.z) << ',' << to_fraction_string(p.g.y) << ','
       << p.norm_sq << '\n';
  });
}

struct Command {
  // Fills the JSON result or writes directly to `out` and returns an exit code.
  std::function<int(std::ostream& out)> run;
};

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg = default_run_config();
  CLI::App app{"Height zeta function of the Heisenberg group in P^3", "heightzeta"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string data_dir = cfg.data_dir.string();
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("!--no-timing", cfg.timing, "Omit wall-clock fields");
  app.add_option("--data-dir", data_dir, "Directory holding p3.json");

  std::function<int(std::ostream&)> action;
  auto emit = [&](json result) {
    action = [result = std::move(result)](std::ostream& os) {
      os << result.dump(2) << '\n';
      return kExitOk;
    };
  };

  // invariants
  std::string geometry_file;
  std::string bundle_spec = "anticanonical";
  auto* inv = app.add_subcommand("invariants", "a(L), b(L), c(L) for a line bundle class");
  inv->add_option("--geometry", geometry_file, "Descriptor JSON")->required();
  inv->add_option("--bundle", bundle_spec, "Coefficients in component order, comma separated, or 'anticanonical'");

  // local factors
  std::string prime_text;
  std::string s_text;
  std::optional<int> shells;
  auto* euler = app.add_subcommand("euler-factor", "Local Euler factor from strata counts");
  euler->add_option("--geometry", geometry_file)->required();
  euler->add_option("--prime", prime_text)->required();
  euler->add_option("--s", s_text)->required();

  std::string a1_text = "0";
  std::string a2_text = "0";
  auto* teta = app.add_subcommand("twisted-eta", "Twisted local integral for eta_(a1,a2)");
  teta->add_option("--p", prime_text)->required();
  teta->add_option("--a1", a1_text)->required();
  teta->add_option("--a2", a2_text)->required();
  teta->add_option("--s", s_text)->required();
  teta->add_option("--shells", shells, "Override the shell count K");

  std::string a_text;
  std::string nk_text = "1";
  auto* tpsi = app.add_subcommand("twisted-psi", "Twisted local integral for psi_a on U");
  tpsi->add_option("--p", prime_text)->required();
  tpsi->add_option("--a", a_text)->required();
  tpsi->add_option("--nk", nk_text);
  tpsi->add_option("--s", s_text)->required();
  tpsi->add_option("--shells", shells, "Override the shell count K");

  // archimedean
  std::optional<double> tol;
  auto* archc = app.add_subcommand("arch-integral", "Radial or Fourier-twisted archimedean integral");
  archc->add_option("--s", s_text)->required();
  archc->add_option("--a1", a1_text);
  archc->add_option("--a2", a2_text);
  archc->add_option("--tol", tol, "Absolute and relative tolerance")->check(CLI::PositiveNumber);

  // points
  std::string bound_text;
  std::string method = "fast";
  std::string out_path;
  auto* count = app.add_subcommand("count", "N(B), the number of rational points of height <= B");
  count->add_option("--bound", bound_text)->required();
  count->add_option("--method", method)->check(CLI::IsMember({"fast", "naive"}));
  count->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
  auto* predict = app.add_subcommand("predict", "Leading-term prediction of N(B)");
  predict->add_option("--bound", bound_text)->required();
  auto* enumerate = app.add_subcommand("enumerate", "List rational points of height <= B as CSV");
  enumerate->add_option("--bound", bound_text)->required();
  enumerate->add_option("--out", out_path, "CSV file; standard output when omitted");

  // spectral
  auto* spec = app.add_subcommand("spectral", "Oscillator spectrum");
  spec->require_subcommand(1);
  int n_index = 0;
  std::optional<std::string> p_opt;
  std::int64_t np = 0;
  int m_exp = 0;
  int mprime = 0;
  std::int64_t amax = 100;
  std::int64_t nmax = 100;
  auto* eig = spec->add_subcommand("eigenvalue", "lambda_n for psi_a");
  eig->add_option("--n", n_index)->required()->check(CLI::NonNegativeNumber);
  eig->add_option("--a", a_text)->required();
  auto* mult = spec->add_subcommand("multiplicity", "Multiplicity of K-fixed vectors");
  mult->add_option("--a", a_text)->required();
  mult->add_option("--nk", nk_text);
  mult->add_option("--p", p_opt, "Local multiplicity at this prime");
  mult->add_option("--np", np);
  auto* maj = spec->add_subcommand("majorant", "Majorant of the non-abelian spectral sum");
  maj->add_option("--m", m_exp)->required();
  maj->add_option("--mprime", mprime)->required();
  maj->add_option("--amax", amax);
  maj->add_option("--nmax", nmax);
  maj->add_option("--nk", nk_text);

  // zeta
  auto* zc = app.add_subcommand("zeta", "Height zeta function");
  zc->require_subcommand(1);
  int zeta_amax = 8;
  auto* rep = zc->add_subcommand("report", "Z0, Z1, the direct sum and their residual");
  rep->add_option("--s", s_text)->required();
  rep->add_option("--bound", bound_text)->required();
  rep->add_option("--amax", zeta_amax)->check(CLI::PositiveNumber);
  rep->add_option("--out", out_path, "Also write the report to this file");
  rep->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
  std::string bounds_text;
  auto* res = zc->add_subcommand("residue", "Residue at s = 4 from N(B)");
  res->add_option("--bounds", bounds_text)->required();
  res->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);

  // reproduce
  int criterion = 0;
  auto* repro = app.add_subcommand("reproduce", "Run an acceptance criterion");
  repro->add_option("--criterion", criterion)->required()->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }
  cfg.output_format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
  cfg.data_dir = data_dir;

  try {
    if (cfg.output_format == OutputFormat::csv && !enumerate->parsed()) {
      throw UsageError("--format csv applies to enumerate only");
    }
    if (tol) {
      cfg.tolerances.abs_tol = *tol;
      cfg.tolerances.rel_tol = *tol;
    }

    if (inv->parsed()) {
      const auto geom = geometry::load_descriptor(geometry_file);
      geometry::LineBundleClass bundle;
      if (bundle_spec == "anticanonical") {
        bundle = geometry::anticanonical(geom);
      } else {
        std::vector<Rational> coeffs;
        for (const auto& part : split_list(bundle_spec)) coeffs.push_back(parse_rational(part));
        bundle = geometry::bundle_from_list(geom, coeffs);
      }
      const auto r = geometry::invariants(geom, bundle);
      emit({{"a", to_string(r.a)}, {"b", r.b}, {"c", to_string(r.c)}});
    } else if (euler->parsed()) {
      const auto geom = geometry::load_descriptor(geometry_file);
      const auto s = parse_eval_point(s_text);
      const auto v = local::euler_factor_strata(geom, s, int_of(parse_rational(prime_text), "--prime"));
      emit({{"value_re", v.real()},
            {"value_im", v.imag()},
            {"method", exact_integer_exponent(s) ? "strata-exact" : "strata"},
            {"K_used", nullptr}});
    } else if (teta->parsed() || tpsi->parsed()) {
      const auto p = int_of(parse_rational(prime_text), "--p");
      const auto s = parse_eval_point(s_text);
      local::ShellSum v;
      if (teta->parsed()) {
        const local::EtaCharacter eta{int_of(parse_rational(a1_text), "--a1"), int_of(parse_rational(a2_text), "--a2")};
        v = local::twisted_local_factor_eta(p, eta, s, shells);
      } else {
        const auto psi = local::make_psi_character(parse_rational(a_text), int_of(parse_rational(nk_text), "--nk"));
        v = local::twisted_local_factor_psi(p, psi, s, shells);
      }
      emit({{"value_re", v.value.real()},
            {"value_im", v.value.imag()},
            {"method", v.exact ? "shell-sum-exact" : "shell-sum"},
            {"K_used", v.shells}});
    } else if (archc->parsed()) {
      arch::validate(cfg.tolerances);
      const auto s = parse_eval_point(s_text);
      const auto a1 = int_of(parse_rational(a1_text), "--a1");
      const auto a2 = int_of(parse_rational(a2_text), "--a2");
      const auto r = arch::fourier_height_integral(s, a1, a2, cfg.tolerances);
      emit({{"value", complex_json(r.value)}, {"est_error", r.est_error}, {"subdivisions", r.subdivisions}});
    } else if (count->parsed()) {
      const auto bound = points::HeightBound::parse(bound_text);
      const auto start = std::chrono::steady_clock::now();
      const auto n = method == "naive" ? points::count_naive(bound) : points::count_fast(bound, cfg.threads);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      json result{{"B", bound.str()}, {"N", n}, {"method", method}};
      if (cfg.timing) result["seconds"] = seconds;
      emit(std::move(result));
    } else if (predict->parsed()) {
      const auto bound = points::HeightBound::parse(bound_text);
      emit({{"B", bound.str()},
            {"predicted", points::predict_count(bound.to_double())},
            {"constant", points::kCountingConstant}});
    } else if (enumerate->parsed()) {
      const auto bound = points::HeightBound::parse(bound_text);
      if (out_path.empty()) {
        action = [bound](std::ostream& os) {
          write_points_csv(os, bound);
          return kExitOk;
        };
      } else {
        std::ofstream file(out_path);
        if (!file) throw UsageError("cannot open " + out_path);
        write_points_csv(file, bound);
        std::uint64_t lines = 0;
        points::enumerate(bound, [&lines](const points::HeightPoint&) { ++lines; });
        emit({{"B", bound.str()}, {"points", lines}, {"out", out_path}});
      }
    } else if (eig->parsed()) {
      const spectral::SpectralIndex idx{{parse_rational(a_text), 1}, n_index};
      emit({{"n", n_index},
            {"a", to_string(idx.character.a)},
            {"eigenvalue", spectral::eigenvalue(idx)},
            {"full_laplacian_eigenvalue", spectral::full_laplacian_eigenvalue(idx)}});
    } else if (mult->parsed()) {
      const auto a = parse_rational(a_text);
      const auto nk = int_of(parse_rational(nk_text), "--nk");
      json result{{"a", to_string(a)}, {"nk", nk}};
      if (p_opt) {
        const auto p = int_of(parse_rational(*p_opt), "--p");
        result["p"] = p;
        result["np"] = np;
        result["multiplicity"] = big_json(spectral::multiplicity_local(p, a, np, nk));
      } else {
        result["multiplicity"] = big_json(spectral::multiplicity_global(a, nk));
      }
      emit(std::move(result));
    } else if (maj->parsed()) {
      const auto nk = int_of(parse_rational(nk_text), "--nk");
      const auto r = spectral::z2_majorant(m_exp, mprime, amax, nmax, nk);
      emit({{"m", m_exp},
            {"mprime", mprime},
            {"a_max", amax},
            {"n_max", nmax},
            {"nk", nk},
            {"finite_sum", r.finite_sum},
            {"tail_bound", r.tail_bound},
            {"total", r.total()}});
    } else if (rep->parsed()) {
      const auto r = zeta::report(parse_eval_point(s_text), points::HeightBound::parse(bound_text), zeta_amax, cfg.threads);
      const json doc = zeta::to_json(r);
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw UsageError("cannot open " + out_path);
        file << doc.dump(2) << '\n';
      }
      emit(doc);
    } else if (res->parsed()) {
      std::vector<points::HeightBound> bounds;
      for (const auto& part : split_list(bounds_text)) bounds.push_back(points::HeightBound::parse(part));
      const auto fit = zeta::residue_estimate(bounds, cfg.threads);
      json b = json::array();
      for (const auto& bound : bounds) b.push_back(bound.str());
      emit({{"residue", fit.residue},
            {"std_error", fit.std_error},
            {"constant", fit.constant},
            {"bounds", b},
            {"counts", fit.counts},
            {"expected", zeta::kResidue}});
    } else if (repro->parsed()) {
      const auto report = run_criterion(criterion, cfg);
      action = [report](std::ostream& os) {
        os << report.line() << '\n';
        for (const auto& c : report.checks) os << "  " << (c.pass ? "ok   " : "FAIL ") << c.label << ": " << c.measured << '\n';
        return report.pass() ? kExitOk : kExitFailed;
      };
    }
  } catch (const Error& e) {
    out << json{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}}.dump(2) << '\n';
    return kExitDomain;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return action(out);
}

}  // namespace heightzeta::cli
