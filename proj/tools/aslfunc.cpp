// aslfunc: exact L-functions, special values and Sato-Tate statistics of the
// Artin-Schreier family y^2 = x(x+16g)(x+(t^(q^a)-t)^2) over F_q(t).
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "asl/runner.hpp"

namespace {

using namespace asl;

constexpr int kExitCheckFailed = 1;
constexpr int kExitCapExceeded = 2;
constexpr int kExitIntegrality = 3;
constexpr int kExitUsage = 64;

struct CommonOpts {
  std::uint64_t q = 3;
  int a = 1;
  std::string gamma = "1";
  std::uint64_t enum_cap = default_caps().enumeration_cap;
  std::uint64_t work_limit = default_caps().work_limit;
  std::string out;
};

Caps make_caps(const CommonOpts& o) {
  Caps caps;
  caps.enumeration_cap = o.enum_cap;
  caps.work_limit = o.work_limit;
  return caps;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  // atomic: write to a temp name in the same directory, then rename
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    os << content;
  }
  std::filesystem::rename(tmp, target);
}

std::vector<std::uint64_t> gamma_list(const std::string& spec,
                                      std::uint64_t q) {
  std::vector<std::uint64_t> out;
  if (spec == "all") {
    for (std::uint64_t g = 1; g < q; ++g) out.push_back(g);
    return out;
  }
  std::size_t pos = 0;
  long long v = std::stoll(spec, &pos);
  if (pos != spec.size() || v < 1 || std::uint64_t(v) >= q)
    throw ZeroParameter("gamma must be in [1, q-1] or \"all\"");
  out.push_back(std::uint64_t(v));
  return out;
}

CurveParams params_for(const CommonOpts& o, std::uint64_t gamma_idx,
                       const Caps& caps) {
  auto [p, e] = factor_prime_power(o.q);
  const FieldCtx* base = make_field(p, e, 1, caps);
  return curve_params(base, o.a, gamma_idx);
}

int run_lfunc(const CommonOpts& o) {
  Caps caps = make_caps(o);
  auto gammas = gamma_list(o.gamma, o.q);
  if (gammas.size() != 1)
    throw ZeroParameter("lfunc expects a single gamma");
  CurveParams params = params_for(o, gammas[0], caps);
  LPoly L = l_polynomial(params, caps);
  SpecialValueReport sv = special_value(params, L, caps);
  int eps = verify_functional_equation(L);
  write_output(o.out, lfunc_json(L, sv, eps));
  return 0;
}

int run_verify(const CommonOpts& o, int n_max, bool inject) {
  Caps caps = make_caps(o);
  auto gammas = gamma_list(o.gamma, o.q);
  bool all_pass = true;
  for (std::uint64_t g : gammas) {
    CurveParams params = params_for(o, g, caps);
    VerifyOutcome out = asl::run_verify(params, n_max, caps, inject);
    std::cout << "instance q=" << o.q << " a=" << o.a << " gamma=" << g
              << "\n";
    for (const auto& c : out.checks) {
      std::cout << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
      if (!c.pass && all_pass) {
        all_pass = false;
        std::cout << "  first failing check: " << c.name << "\n";
      }
    }
  }
  return all_pass ? 0 : kExitCheckFailed;
}

int run_stats(const CommonOpts& o, const std::string& csv_out) {
  Caps caps = make_caps(o);
  auto gammas = gamma_list(o.gamma, o.q);
  if (gammas.size() != 1)
    throw ZeroParameter("stats expects a single gamma");
  CurveParams params = params_for(o, gammas[0], caps);
  StatsResult r = compute_stats(params, caps);
  write_output(o.out, stats_json(r));
  if (!csv_out.empty()) {
    AngleEnsemble ens = angle_ensemble(params, caps);
    write_output(csv_out, ensemble_csv(ens));
  }
  return 0;
}

int run_sweep(const std::string& qlist, const std::string& alist,
              const std::string& gamma, const CommonOpts& o,
              const std::string& out_dir) {
  Caps caps = make_caps(o);
  auto parse_list = [](const std::string& s) {
    std::vector<std::uint64_t> vals;
    std::size_t start = 0;
    while (start < s.size()) {
      std::size_t comma = s.find(',', start);
      if (comma == std::string::npos) comma = s.size();
      vals.push_back(std::stoull(s.substr(start, comma - start)));
      start = comma + 1;
    }
    return vals;
  };
  auto qs = parse_list(qlist);
  auto as = parse_list(alist);
  if (qs.empty() || as.empty())
    throw ZeroParameter("empty sweep grid");

  std::vector<StatsResult> rows;
  bool any_error = false;
  for (std::uint64_t q : qs) {
    for (std::uint64_t a : as) {
      std::vector<std::uint64_t> gammas = gamma_list(gamma, q);
      for (std::uint64_t g : gammas) {
        CommonOpts io = o;
        io.q = q;
        io.a = int(a);
        try {
          CurveParams params = params_for(io, g, caps);
          rows.push_back(compute_stats(params, caps));
          if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            std::string name = "stats_q" + std::to_string(q) + "_a" +
                               std::to_string(a) + "_g" + std::to_string(g) +
                               ".json";
            write_output((std::filesystem::path(out_dir) / name).string(),
                         stats_json(rows.back()));
          }
        } catch (const Error& err) {
          std::cerr << "instance q=" << q << " a=" << a << " gamma=" << g
                    << " failed: " << err.what() << "\n";
          any_error = true;
        }
      }
    }
  }
  std::string csv = sweep_csv(rows);
  if (!out_dir.empty()) {
    write_output((std::filesystem::path(out_dir) / "sweep.csv").string(), csv);
  } else {
    write_output(o.out, csv);
  }
  return any_error ? kExitCheckFailed : 0;
}

int dispatch_error(const Error& err) {
  std::cerr << "error: " << err.what() << "\n";
  switch (err.kind()) {
    case ErrorKind::SizeCapExceeded:
    case ErrorKind::WorkLimitExceeded:
      return kExitCapExceeded;
    case ErrorKind::NotRationalInteger:
    case ErrorKind::FunctionalEquationViolated:
      return kExitIntegrality;
    case ErrorKind::MismatchAt:
      return kExitCheckFailed;
    case ErrorKind::NotPrime:
    case ErrorKind::EvenCharacteristic:
    case ErrorKind::ZeroParameter:
    case ErrorKind::NotASubfield:
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact L-functions and Kloosterman-angle statistics of the "
      "Artin-Schreier family of elliptic curves over F_q(t)"};
  app.require_subcommand(1);

  CommonOpts opts;
  int n_max = 2;
  bool inject = false;
  std::string csv_out, out_dir;
  std::string sweep_q = "3", sweep_a = "1";

  auto add_common = [&](CLI::App* cmd, bool with_gamma = true) {
    cmd->add_option("--q", opts.q, "base field size q = p^e (odd prime power)");
    cmd->add_option("--a", opts.a, "Artin-Schreier level a >= 1");
    if (with_gamma)
      cmd->add_option("--gamma", opts.gamma,
                      "gamma as an index in [1, q-1], or \"all\"");
    cmd->add_option("--enum-cap", opts.enum_cap, "enumeration cap");
    cmd->add_option("--work-limit", opts.work_limit,
                    "character-evaluation work limit");
    cmd->add_option("--out", opts.out, "output path (default stdout)");
  };

  CLI::App* lfunc = app.add_subcommand(
      "lfunc", "compute the L-polynomial, rank and special value");
  add_common(lfunc);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the verification checks against the point-count oracle");
  add_common(verify);
  verify->add_option("--n-max", n_max, "series coefficients to cross-check");
  verify
      ->add_flag("--inject-coefficient-error", inject,
                 "corrupt one L coefficient before checking (debug)")
      ->group("");

  CLI::App* stats = app.add_subcommand(
      "stats", "Sato-Tate statistics of the Kloosterman angle ensemble");
  add_common(stats);
  stats->add_option("--csv", csv_out, "also write the raw ensemble CSV here");

  CLI::App* sweep =
      app.add_subcommand("sweep", "statistics across a grid of (q, a, gamma)");
  sweep->add_option("--q", sweep_q, "comma-separated q values");
  sweep->add_option("--a", sweep_a, "comma-separated a values");
  sweep->add_option("--gamma", opts.gamma, "gamma index or \"all\"");
  sweep->add_option("--enum-cap", opts.enum_cap, "enumeration cap");
  sweep->add_option("--work-limit", opts.work_limit, "work limit");
  sweep->add_option("--out", opts.out, "sweep CSV path (default stdout)");
  sweep->add_option("--out-dir", out_dir,
                    "directory for per-instance JSON plus sweep.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (lfunc->parsed()) return run_lfunc(opts);
    if (verify->parsed()) return run_verify(opts, n_max, inject);
    if (stats->parsed()) return run_stats(opts, csv_out);
    if (sweep->parsed())
      return run_sweep(sweep_q, sweep_a, opts.gamma, opts, out_dir);
  } catch (const Error& err) {
    return dispatch_error(err);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
