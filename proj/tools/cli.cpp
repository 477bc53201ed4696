#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "input.hpp"
#include "subseq/asymptotics.hpp"
#include "subseq/count.hpp"
#include "subseq/errors.hpp"
#include "subseq/moments.hpp"
#include "subseq/montecarlo.hpp"

namespace subseq::cli {

namespace {

using Json = nlohmann::ordered_json;

/// The two engines disagreed.
class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rational_json(const ExactRational& r) { return Json{{"num", r.num_str()}, {"den", r.den_str()}}; }

Json log_json(const LogReal& v) {
  if (v.is_zero()) return Json{{"sign", "zero"}, {"ln", nullptr}};
  return Json{{"sign", "positive"}, {"ln", v.log()}};
}

Json envelope(std::string_view command, Json inputs) {
  Json doc;
  doc["command"] = command;
  doc["version"] = kVersion;
  doc["inputs"] = std::move(inputs);
  doc["result"] = Json::object();
  doc["exact_values"] = Json::object();
  doc["log_values"] = Json::object();
  return doc;
}

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SUBSEQ_BUDGET")) {
    const std::string text(env);
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw InputError("SUBSEQ_BUDGET must be a positive integer, got '" + text + "'");
    }
    return std::stoull(text);
  }
  return fallback;
}

struct DistOptions {
  std::optional<std::uint32_t> alphabet;
  std::vector<std::string> probs;

  void add_to(CLI::App* app) {
    auto* a = app->add_option("--alphabet,-a", alphabet, "Uniform alphabet size")->check(CLI::PositiveNumber);
    auto* p = app->add_option("--probs", probs, "Letter probabilities, e.g. 1/2,1/4,1/4")->delimiter(',');
    a->excludes(p);
  }

  ProbVector resolve() const {
    if (!probs.empty()) return ProbVector::parse(probs);
    if (!alphabet) throw InputError("one of --alphabet or --probs is required");
    return ProbVector::uniform(*alphabet);
  }

  Json echo() const {
    if (!probs.empty()) return Json{{"probs", probs}};
    return Json{{"alphabet", alphabet ? Json(*alphabet) : Json(nullptr)}};
  }
};

Json dist_json(const ProbVector& dist) {
  Json probs = Json::array();
  for (const ExactRational& p : dist.probs()) probs.push_back(rational_json(p));
  return probs;
}

// ---- count -----------------------------------------------------------------

struct CountArgs {
  std::string x_path, y_path;
  std::optional<std::size_t> k;
  bool per_level = false;
  bool bruteforce = false;
  std::optional<std::uint64_t> budget;
  std::string encoding = "chars";
  std::optional<std::uint32_t> alphabet;
};

Json run_count(const CountArgs& a) {
  if (a.k && *a.k == 0) throw InputError("--k must be at least 1");
  const Encoding enc = a.encoding == "tokens" ? Encoding::tokens : Encoding::chars;
  const LoadedPair pair = load_pair({a.x_path, enc, a.alphabet}, {a.y_path, enc, a.alphabet});

  Json inputs{{"x", a.x_path}, {"y", a.y_path}, {"encoding", a.encoding}};
  inputs["k"] = a.k ? Json(*a.k) : Json(nullptr);
  inputs["per_level"] = a.per_level || !a.k;
  inputs["bruteforce"] = a.bruteforce;
  Json doc = envelope("count", std::move(inputs));

  Json& result = doc["result"];
  result["n_x"] = pair.x.length();
  result["n_y"] = pair.y.length();
  result["alphabet_size"] = pair.x.alphabet_size();
  result["symbol_map"] = pair.symbol_map;

  if (a.k) {
    const BigCount c = count_k(pair.x, pair.y, *a.k);
    if (a.bruteforce) {
      const BigCount oracle = count_k_bruteforce(pair.x, pair.y, *a.k, resolve_budget(a.budget, kDefaultTupleBudget));
      if (oracle != c) {
        throw CrossCheckError("leveled count " + c.to_string() + " != enumeration " + oracle.to_string());
      }
    }
    result["count"] = c.to_string();
  }
  if (a.per_level || !a.k) {
    const std::vector<BigCount> profile = count_by_level(pair.x, pair.y);
    BigCount total;
    Json levels = Json::array();
    for (const BigCount& c : profile) {
      total += c;
      levels.push_back(c.to_string());
    }
    const BigCount direct = count_all_direct(pair.x, pair.y);
    if (direct != total) {
      throw CrossCheckError("level profile sums to " + total.to_string() + " but the direct recurrence gives " +
                            direct.to_string());
    }
    result["profile"] = std::move(levels);
    result["total"] = total.to_string();
    result["cross_check"] = "direct recurrence agrees";
  }
  return doc;
}

// ---- moments / bounds --------------------------------------------------------

struct MomentsArgs {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> k;
  DistOptions dist;
  bool bounds = false;
  bool exhaustive = false;
  std::optional<std::uint64_t> budget;
};

Json run_moments(const MomentsArgs& a, std::string_view command) {
  if (a.n == 0) throw InputError("--n must be at least 1");
  if (a.k && *a.k == 0) throw InputError("--k must be at least 1");
  const ProbVector dist = a.dist.resolve();

  Json inputs{{"n", a.n}, {"k", a.k ? Json(*a.k) : Json(nullptr)}};
  inputs.update(a.dist.echo());
  inputs["bounds"] = a.bounds;
  inputs["exhaustive"] = a.exhaustive;
  Json doc = envelope(command, std::move(inputs));
  Json& result = doc["result"];
  Json& exact = doc["exact_values"];
  result["collision_probability"] = rational_json(dist.collision());

  if (a.k) {
    const ExactRational mean = expected_count_k(a.n, *a.k, dist);
    result["quantity"] = "E[T_{n,k}]";
    result["expected"] = mean.to_double();
    exact["expected"] = rational_json(mean);
  } else {
    const ExactRational mean = expected_total(a.n, dist);
    result["quantity"] = "E[T_n]";
    result["expected"] = mean.to_double();
    exact["expected"] = rational_json(mean);
  }

  if (a.bounds || a.exhaustive) {
    if (!a.k) throw InputError("--bounds and --exhaustive need --k");
    if (!dist.is_uniform()) throw InputError("second-moment bounds are defined for uniform letters only");
    if (*a.k > a.n) throw InputError("--bounds needs k <= n");
  }
  if (a.bounds) {
    const MomentBounds b = second_moment_bounds(a.n, *a.k, dist.size());
    exact["second_moment_lower"] = rational_json(b.lower);
    exact["second_moment_upper"] = rational_json(b.upper);
    result["second_moment_lower"] = b.lower.to_double();
    result["second_moment_upper"] = b.upper.to_double();
    const double nd = static_cast<double>(a.n);
    doc["log_values"]["lower_asymptote"] = log_json(bound_asymptote(nd, *a.k, dist.size(), BoundSide::lower));
    doc["log_values"]["upper_asymptote"] = log_json(bound_asymptote(nd, *a.k, dist.size(), BoundSide::upper));
    exact["upper_asymptote_coefficient"] = rational_json(upper_asymptote_coefficient(*a.k, dist.size()));
  }
  if (a.exhaustive) {
    const ExactRational m2 = second_moment_exhaustive(a.n, *a.k, dist.size(),
                                                      resolve_budget(a.budget, kDefaultWordPairBudget));
    exact["second_moment_exhaustive"] = rational_json(m2);
    result["second_moment_exhaustive"] = m2.to_double();
  }
  return doc;
}

// ---- simulate ------------------------------------------------------------------

struct SimulateArgs {
  std::size_t n = 0;
  std::size_t k = 1;
  DistOptions dist;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::vector<std::size_t> trend;
};

Json report_json(const SimulationReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["num_samples"] = r.num_samples;
  j["seed"] = r.seed;
  j["stream_offset"] = r.stream_offset;
  j["sample_mean"] = r.sample_mean;
  j["sample_variance"] = r.sample_variance;
  j["kolmogorov_distance"] = r.kolmogorov_distance;
  j["theoretical_mean"] = rational_json(r.theoretical_mean);
  Json bins = Json::array();
  for (const HistogramBin& b : r.histogram) bins.push_back(Json{{"lower", b.lower}, {"upper", b.upper}, {"count", b.count}});
  j["histogram"] = std::move(bins);
  return j;
}

Json run_simulate(const SimulateArgs& a) {
  if (a.samples < 2) throw InputError("--samples must be at least 2");
  if (a.k == 0) throw InputError("--k must be at least 1");
  if (a.threads == 0) throw InputError("--threads must be at least 1");
  const ProbVector dist = a.dist.resolve();

  Json inputs{{"n", a.n}, {"k", a.k}};
  inputs.update(a.dist.echo());
  inputs["samples"] = a.samples;
  inputs["seed"] = a.seed;
  inputs["trend"] = a.trend;
  Json doc = envelope("simulate", std::move(inputs));
  Json& result = doc["result"];
  result["distribution"] = dist_json(dist);

  if (!a.trend.empty()) {
    const std::vector<TrendPoint> trend = clt_trend(a.trend, a.k, dist, a.samples, a.seed, a.threads);
    Json points = Json::array();
    for (const TrendPoint& p : trend) points.push_back(Json{{"n", p.n}, {"kolmogorov_distance", p.kolmogorov_distance}});
    result["trend"] = std::move(points);
    result["decreasing_with_slack_0.01"] = is_decreasing(trend, 0.01);
    return doc;
  }
  if (a.n == 0) throw InputError("--n is required without --trend");
  SimulationConfig cfg;
  cfg.n = a.n;
  cfg.k = a.k;
  cfg.dist = dist;
  cfg.num_samples = a.samples;
  cfg.seed = a.seed;
  cfg.parallelism = a.threads;
  const SimulationReport report = simulate(cfg);
  result["report"] = report_json(report);
  doc["exact_values"]["theoretical_mean"] = rational_json(report.theoretical_mean);
  return doc;
}

// ---- asymptotics -------------------------------------------------------------

struct AsymptoticsArgs {
  std::uint64_t n = 0;
  double a = 0;
  double alpha = 0;
  bool compare = false;
};

Json run_asymptotics(const AsymptoticsArgs& a) {
  using namespace asymptotics;
  if (a.n == 0) throw InputError("--n must be at least 1");
  const double n = static_cast<double>(a.n);
  const RegimeParams p = make_params(n, a.a, a.alpha);

  Json doc = envelope("asymptotics", Json{{"n", a.n}, {"a", a.a}, {"alpha", a.alpha}, {"compare", a.compare}});
  Json& result = doc["result"];
  result["regime"] = regime_name(p.regime);
  result["a_n"] = p.a_n;
  result["k_star"] = p.k_star;
  result["big_a"] = p.big_a;
  result["kappa"] = p.kappa ? Json(*p.kappa) : Json(nullptr);

  Json& logs = doc["log_values"];
  const LogReal regime = regime_formula(n, a.a, a.alpha);
  const LogReal master = master_approx(n, p.a_n);
  logs["regime_formula"] = log_json(regime);
  logs["master_approx"] = log_json(master);
  logs["binom_kstar_approx"] = log_json(binom_kstar_approx(n, a.a, a.alpha));
  logs["permutation_reference"] = log_json(permutation_reference(n));
  if (a.alpha > 2.0 / 3.0) result["lemma_ratio"] = lemma_ratio(n, a.a, a.alpha);

  if (a.n <= 300 || a.compare) {
    const LogReal exact = exact_log_expected_total(a.n, p.a_n);
    logs["exact"] = log_json(exact);
    result["log_ratio_regime_vs_exact"] = regime.log() - exact.log();
    result["log_ratio_master_vs_exact"] = master.log() - exact.log();
    // Integral alphabets at alpha = 0 also get the exact rational.
    if (a.alpha == 0.0 && a.a == std::floor(a.a) && a.a <= 4294967295.0 && a.n <= 300) {
      doc["exact_values"]["expected_total"] = rational_json(expected_total(a.n, static_cast<std::uint32_t>(a.a)));
    }
  }
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting and statistics of common subsequences of two words", "subseq-cli"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count common-subsequence embedding pairs of two words");
  count->add_option("x", count_args.x_path, "First sequence file")->required();
  count->add_option("y", count_args.y_path, "Second sequence file")->required();
  count->add_option("--k", count_args.k, "Subsequence length");
  count->add_flag("--per-level", count_args.per_level, "Emit the count for every length and the total");
  count->add_flag("--bruteforce", count_args.bruteforce, "Cross-check --k against full enumeration");
  count->add_option("--budget", count_args.budget, "Enumeration budget (tuple pairs)");
  count->add_option("--encoding", count_args.encoding, "chars | tokens")->check(CLI::IsMember({"chars", "tokens"}));
  count->add_option("--alphabet", count_args.alphabet, "Alphabet size (default: inferred)")->check(CLI::PositiveNumber);

  MomentsArgs moments_args;
  auto add_moment_options = [&](CLI::App* sub) {
    sub->add_option("--n", moments_args.n, "Word length")->required();
    sub->add_option("--k", moments_args.k, "Subsequence length (default: all lengths)");
    moments_args.dist.add_to(sub);
    sub->add_flag("--exhaustive", moments_args.exhaustive, "Also enumerate E[T_{n,k}^2] over all word pairs");
    sub->add_option("--budget", moments_args.budget, "Enumeration budget (word pairs)");
  };
  auto* moments = app.add_subcommand("moments", "Exact expectations and second-moment bounds");
  add_moment_options(moments);
  moments->add_flag("--bounds", moments_args.bounds, "Also emit second-moment bounds");
  auto* bounds = app.add_subcommand("bounds", "Alias of 'moments --bounds'");
  add_moment_options(bounds);

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo check of asymptotic normality");
  sim->add_option("--n", sim_args.n, "Word length");
  sim->add_option("--k", sim_args.k, "Subsequence length")->required();
  sim_args.dist.add_to(sim);
  sim->add_option("--samples", sim_args.samples, "Number of word pairs");
  sim->add_option("--seed", sim_args.seed, "Master seed");
  sim->add_option("--threads", sim_args.threads, "Worker threads (output does not depend on it)");
  sim->add_option("--trend", sim_args.trend, "Increasing word lengths, e.g. 16,32,64")->delimiter(',');

  AsymptoticsArgs asy_args;
  auto* asy = app.add_subcommand("asymptotics", "Growing-alphabet asymptotics of E[T_n]");
  asy->add_option("--n", asy_args.n, "Word length")->required();
  asy->add_option("--a", asy_args.a, "Alphabet scale a in a_n = a n^alpha")->required();
  asy->add_option("--alpha", asy_args.alpha, "Growth exponent alpha in [0, 2)")->required();
  asy->add_flag("--compare", asy_args.compare, "Also evaluate the exact sum for n > 300");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Json doc;
    if (count->parsed()) {
      doc = run_count(count_args);
    } else if (moments->parsed()) {
      doc = run_moments(moments_args, "moments");
    } else if (bounds->parsed()) {
      moments_args.bounds = true;
      doc = run_moments(moments_args, "bounds");
    } else if (sim->parsed()) {
      doc = run_simulate(sim_args);
    } else if (asy->parsed()) {
      doc = run_asymptotics(asy_args);
    }
    out << doc.dump(2) << "\n";
    return kOk;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const CrossCheckError& e) {
    err << "internal cross-check failed: " << e.what() << "\n";
    return kInternal;
  } catch (const DegenerateError& e) {
    err << "degenerate distribution: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace subseq::cli
