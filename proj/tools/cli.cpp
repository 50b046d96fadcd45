#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "skcert/certify.hpp"
#include "skcert/experiment.hpp"
#include "skcert/modpoly.hpp"
#include "skcert/serialize.hpp"
#include "skcert/smooth.hpp"

namespace skcert::cli {

namespace {

/// Thrown for bad flag values; maps to exit code 1 with a usage hint.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-negative integer, either plain digits or "AeB" (e.g. 1e12).
u64 parse_count(const std::string& text, const std::string& flag) {
  auto fail = [&] { return UsageError(flag + ": expected a non-negative integer, got '" + text + "'"); };
  const auto e = text.find_first_of("eE");
  auto digits = [&](std::string_view s) {
    u64 v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw fail();
    return v;
  };
  if (e == std::string::npos) return digits(text);
  u128 value = digits(std::string_view(text).substr(0, e));
  const u64 exponent = digits(std::string_view(text).substr(e + 1));
  for (u64 i = 0; i < exponent; ++i) {
    value *= 10;
    if (value > kMaxInput) throw UsageError(flag + ": value '" + text + "' exceeds 2^63-1");
  }
  return static_cast<u64>(value);
}

std::vector<u64> parse_list(const std::string& text, const std::string& flag) {
  std::vector<u64> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_count(item, flag));
  if (out.empty()) throw UsageError(flag + ": expected a comma-separated list");
  return out;
}

double parse_fraction(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v >= 0.0 && v <= 1.0)) throw UsageError(flag + ": expected a number in [0, 1]");
  return v;
}

/// Instance flags shared by certify, np and oracle.
struct InstanceFlags {
  std::string family = "trimmed";
  std::string n, m, k;

  void attach(CLI::App* app) {
    app->add_option("--family", family, "trimmed or laguerre")->check(CLI::IsMember({"trimmed", "laguerre"}));
    app->add_option("--n", n, "lower index n (with --m)");
    app->add_option("--m", m, "upper index m")->required();
    app->add_option("--k", k, "degree k = m - n (with --m)");
  }

  PolyInstance resolve() const {
    const u64 mv = parse_count(m, "--m");
    std::optional<u64> nv, kv;
    if (!n.empty()) nv = parse_count(n, "--n");
    if (!k.empty()) kv = parse_count(k, "--k");
    if (!nv && !kv) throw UsageError("give --n or --k together with --m");
    if (kv && *kv >= mv) throw UsageError("--k must be smaller than --m");
    if (nv && kv && *nv + *kv != mv) throw UsageError("--n, --m and --k disagree (need n + k = m)");
    const u64 nn = nv ? *nv : mv - *kv;
    return PolyInstance(parse_family(family), nn, mv);
  }
};

/// Writes data to --out or to the output stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}

  void write(const std::string& text) {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path_ + "' for writing");
    file << text;
    if (!file) throw std::runtime_error("failed writing '" + path_ + "'");
  }

 private:
  std::string path_;
  std::ostream& fallback_;
};

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

std::string human_certificate(const Certificate& c) {
  std::ostringstream o;
  o << to_string(c.instance.family()) << " n=" << c.instance.n() << " m=" << c.instance.m()
    << " k=" << c.instance.degree() << "\n";
  o << "conclusion: " << to_string(c.conclusion) << "\n";
  for (const std::string& step : c.deduction) o << "  - " << step << "\n";
  return o.str();
}

std::string human_polygon(const NewtonPolygon& np, u64 p) {
  std::ostringstream o;
  o << "Newton polygon at p=" << p << ", degree " << np.degree() << "\nvertices:";
  for (const auto& v : np.vertices()) o << " (" << v.index << "," << v.height << ")";
  o << "\nslopes:";
  for (const Rational& s : slope_sequence(np).slopes) o << " " << s.str();
  o << "\n";
  return o.str();
}

std::string human_verdict(const OracleVerdict& v, u64 k) {
  std::ostringstream o;
  const bool ok = k >= 8 ? v.confirmed_sk : v.small_k_confirmed;
  o << (ok ? "confirmed" : "unconfirmed") << " after " << v.primes_tried << " primes (seed " << v.seed << ")\n";
  for (const auto& s : v.evidence) {
    o << "  r=" << s.r << ": ";
    if (!s.squarefree) {
      o << "not squarefree\n";
      continue;
    }
    for (std::size_t i = 0; i < s.cycle_type.size(); ++i) o << (i ? "," : "[") << s.cycle_type[i];
    o << "]\n";
  }
  return o.str();
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton-polygon certificates that Galois groups are symmetric, with an independent Frobenius oracle",
               args.empty() ? "skcert" : args[0]};
  app.require_subcommand(1);
  app.set_version_flag("--version", "skcert 0.1.0");

  std::string format = "json";
  std::string out_path;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or human")->check(CLI::IsMember({"json", "human"}));
  };

  // certify
  InstanceFlags cert_flags;
  CLI::App* certify_cmd = app.add_subcommand("certify", "certify one instance");
  cert_flags.attach(certify_cmd);
  add_format(certify_cmd);

  // np
  InstanceFlags np_flags;
  std::string np_prime;
  CLI::App* np_cmd = app.add_subcommand("np", "print the Newton polygon of an instance at a prime");
  np_flags.attach(np_cmd);
  np_cmd->add_option("--p", np_prime, "prime")->required();
  add_format(np_cmd);

  // oracle
  InstanceFlags oracle_flags;
  std::string budget = "100", oracle_seed;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "cross-check an instance with Frobenius cycle types");
  oracle_flags.attach(oracle_cmd);
  oracle_cmd->add_option("--budget", budget, "number of primes to sample (default 100)");
  oracle_cmd->add_option("--seed", oracle_seed, "RNG seed")->required();
  add_format(oracle_cmd);

  // experiment theorem | smooth
  CLI::App* exp_cmd = app.add_subcommand("experiment", "Monte-Carlo experiments");
  exp_cmd->require_subcommand(1);
  std::string th_x, th_kmin = "8", th_kmax, th_samples = "100", th_family = "trimmed", th_seed, th_fraction = "0",
                    th_budget = "100";
  unsigned th_threads = default_threads();
  bool th_csv = false;
  CLI::App* theorem_cmd = exp_cmd->add_subcommand("theorem", "certification success rates over random m");
  theorem_cmd->add_option("--x", th_x, "comma-separated x values")->required();
  theorem_cmd->add_option("--kmin", th_kmin, "smallest degree (default 8)");
  theorem_cmd->add_option("--kmax", th_kmax, "largest degree")->required();
  theorem_cmd->add_option("--samples", th_samples, "samples per x (default 100)");
  theorem_cmd->add_option("--family", th_family, "trimmed, laguerre or both")
      ->check(CLI::IsMember({"trimmed", "laguerre", "both"}));
  theorem_cmd->add_option("--seed", th_seed, "RNG seed")->required();
  theorem_cmd->add_option("--oracle-fraction", th_fraction, "share of S_k certificates sent to the oracle");
  theorem_cmd->add_option("--oracle-budget", th_budget, "oracle prime budget (default 100)");
  theorem_cmd->add_option("--threads", th_threads, "worker threads")->check(CLI::Range(1u, 1024u));
  theorem_cmd->add_option("--out", out_path, "write the report here instead of stdout");
  theorem_cmd->add_flag("--csv", th_csv, "emit CSV instead of JSON");

  std::string sm_x, sm_k, sm_t = "7", sm_samples = "1000", sm_seed;
  CLI::App* smooth_cmd = exp_cmd->add_subcommand("smooth", "probability that m, ..., m-t+1 all have witnesses");
  smooth_cmd->add_option("--x", sm_x, "comma-separated x values")->required();
  smooth_cmd->add_option("--k", sm_k, "prime bound k")->required();
  smooth_cmd->add_option("--t", sm_t, "number of shifts (default 7)");
  smooth_cmd->add_option("--samples", sm_samples, "samples per x (default 1000)");
  smooth_cmd->add_option("--seed", sm_seed, "RNG seed")->required();
  smooth_cmd->add_option("--out", out_path, "write the report here instead of stdout");

  // psi
  std::string psi_x, psi_k;
  CLI::App* psi_cmd = app.add_subcommand("psi", "count k-smooth integers up to x");
  psi_cmd->add_option("--x", psi_x, "upper bound x")->required();
  psi_cmd->add_option("--k", psi_k, "smoothness bound k")->required();
  add_format(psi_cmd);

  std::vector<const char*> argv;
  argv.push_back(args.empty() ? "skcert" : args[0].c_str());
  for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err) == 0 ? kOk : kError;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }

  try {
    Sink sink(out_path, out);
    const bool human = format == "human";
    if (*certify_cmd) {
      const Certificate c = certify(cert_flags.resolve());
      sink.write(human ? human_certificate(c) : pretty(certificate_to_json(c)));
      return c.conclusion == Conclusion::InconclusiveByPaperMethod ? kUnresolved : kOk;
    }
    if (*np_cmd) {
      const PolyInstance inst = np_flags.resolve();
      const u64 p = parse_count(np_prime, "--p");
      if (!is_prime(p)) throw UsageError("--p: " + np_prime + " is not prime");
      const NewtonPolygon np = lower_hull(coefficient_valuations(inst, p));
      sink.write(human ? human_polygon(np, p) : pretty(polygon_to_json(np, p)));
      return kOk;
    }
    if (*oracle_cmd) {
      const PolyInstance inst = oracle_flags.resolve();
      const u64 b = parse_count(budget, "--budget");
      if (b < 1) throw UsageError("--budget must be at least 1");
      const OracleVerdict v = oracle_confirm(inst, b, parse_count(oracle_seed, "--seed"));
      sink.write(human ? human_verdict(v, inst.degree()) : pretty(verdict_to_json(v)));
      const bool ok = inst.degree() >= 8 ? v.confirmed_sk : v.small_k_confirmed;
      return ok ? kOk : kUnresolved;
    }
    if (*theorem_cmd) {
      ExperimentConfig c;
      c.x_values = parse_list(th_x, "--x");
      c.k_min = parse_count(th_kmin, "--kmin");
      c.k_max = parse_count(th_kmax, "--kmax");
      c.samples = parse_count(th_samples, "--samples");
      c.family = parse_family_choice(th_family);
      c.seed = parse_count(th_seed, "--seed");
      c.oracle_fraction = parse_fraction(th_fraction, "--oracle-fraction");
      c.oracle_budget = parse_count(th_budget, "--oracle-budget");
      c.threads = th_threads;
      c.validate();
      const ExperimentReport r = run_theorem_experiment(c);
      sink.write(th_csv ? report_to_csv(r) : pretty(report_to_json(r)));
      err << "experiment finished in " << r.wall_clock_seconds << " s on " << c.threads << " thread(s)\n";
      return kOk;
    }
    if (*smooth_cmd) {
      const auto r = run_smooth_experiment(parse_list(sm_x, "--x"), parse_count(sm_k, "--k"),
                                           parse_count(sm_samples, "--samples"), parse_count(sm_seed, "--seed"),
                                           parse_count(sm_t, "--t"));
      sink.write(pretty(smooth_report_to_json(r)));
      return kOk;
    }
    if (*psi_cmd) {
      const u64 x = parse_count(psi_x, "--x");
      const u64 k = parse_count(psi_k, "--k");
      if (x < 2) throw UsageError("--x must be at least 2");
      const SmoothCount c = psi(x, k);
      if (human) {
        sink.write("psi(" + std::to_string(x) + ", " + std::to_string(k) + ") = " + std::to_string(c.count) + "\n");
      } else {
        sink.write(pretty(psi_to_json(c)));
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  err << app.help();
  return kError;
}

}  // namespace skcert::cli
