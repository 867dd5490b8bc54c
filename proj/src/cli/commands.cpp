#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "hofseq/analysis.hpp"
#include "hofseq/cli.hpp"
#include "hofseq/csv.hpp"
#include "hofseq/error.hpp"
#include "hofseq/number_theory.hpp"
#include "hofseq/sequence.hpp"

namespace hofseq::cli {
namespace {

// Raised for flag combinations CLI11 cannot express; maps to kUsage.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string seed_text = "1,2";
  std::size_t n_max = 30000;
  std::size_t m = 0;
  std::size_t m_ceiling = 5000;
  std::optional<std::int64_t> quad;
  std::optional<std::int64_t> square;
  int max_exponent = 64;
  std::string max_root;
  std::string out;
  std::string in;
  std::string plateau_out;

  Seed seed() const {
    try {
      return Seed::parse(seed_text);
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--seed: ") + e.what());
    }
  }

  nt::SearchBounds bounds() const {
    nt::SearchBounds b;
    b.max_exponent = max_exponent;
    if (!max_root.empty()) {
      try {
        b.max_root_abs = nt::Wide(max_root);
      } catch (const std::exception&) {
        throw UsageError("--max-root: not an integer: " + max_root);
      }
    }
    try {
      b.validate();
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
    return b;
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Writes through `fn` to `path`, or to `out` when path is "-".
void write_output(const std::string& path, std::ostream& out,
                  const std::function<void(std::ostream&)>& fn) {
  if (path == "-") {
    fn(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  fn(file);
  file.flush();
  if (!file) throw Error("write to '" + path + "' failed");
}

// --- gen -------------------------------------------------------------------

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Seed seed = cfg.seed();
  if (cfg.n_max < seed.size()) throw UsageError("--n must be at least the seed length");
  Stopwatch clock;
  const SequenceState state = generate(seed, cfg.n_max);
  const double elapsed = clock.seconds();
  write_output(cfg.out, out, [&](std::ostream& os) { csv::write_terms(os, state); });

  const std::size_t shown = std::min<std::size_t>(state.size(), 10);
  out << "seed " << seed.to_string() << ", " << state.size() << " terms\nfirst:";
  for (std::size_t n = 1; n <= shown; ++n) out << ' ' << state.term(n);
  out << "\nlast: a_" << state.size() << " = " << state.last() << ", b_" << state.size() << " = "
      << state.defect(state.size()) << '\n';
  err << "generated in " << elapsed << " s\n";
  return kOk;
}

// --- verify ----------------------------------------------------------------

struct SuiteResult {
  std::string name;
  enum { pass, fail, skip } status = pass;
  std::string detail;
};

std::vector<SuiteResult> run_suites(const Seed& seed, std::size_t n) {
  const bool classic = seed.is_classic();
  const SequenceState fast = generate(seed, n);
  const std::size_t quadratic = std::min<std::size_t>(n, 2000);
  std::vector<SuiteResult> results;

  auto add = [&](std::string name, const std::function<std::optional<std::string>()>& body,
                 bool classic_only) {
    SuiteResult r{std::move(name), SuiteResult::pass, {}};
    if (classic_only && !classic) {
      r.status = SuiteResult::skip;
      r.detail = "classic seed only";
    } else if (auto failure = body()) {
      r.status = SuiteResult::fail;
      r.detail = *failure;
    }
    results.push_back(std::move(r));
  };

  add("oracle-equivalence", [&]() -> std::optional<std::string> {
    const SequenceState slow = brute_force_generate(seed, n);
    for (std::size_t k = 1; k <= n; ++k) {
      if (fast.term(k) != slow.term(k)) {
        return "a_" + std::to_string(k) + ": heap " + std::to_string(fast.term(k)) + " vs brute force " +
               std::to_string(slow.term(k));
      }
    }
    return std::nullopt;
  }, false);

  add("witnesses", [&]() -> std::optional<std::string> {
    for (std::size_t k = seed.size() + 1; k <= n; ++k) {
      const auto w = fast.witness(k);
      if (!w || w->q >= k || w->q < w->p + 1 || w->value != fast.term(k) ||
          fast.prefix(w->q) - fast.prefix(w->p - 1) != fast.term(k)) {
        return "witness for a_" + std::to_string(k) + " does not re-evaluate";
      }
    }
    return std::nullopt;
  }, false);

  add("prefix-consistency", [&]() -> std::optional<std::string> {
    if (auto m = analysis::first_prefix_inconsistency(fast)) return "s_m - s_(m-1) != a_m at m = " + std::to_string(*m);
    for (std::size_t k = seed.size() + 1; k <= n; ++k) {
      if (fast.term(k) <= fast.term(k - 1)) return "a_" + std::to_string(k) + " does not exceed its predecessor";
    }
    return std::nullopt;
  }, false);

  add("no-gap", [&]() -> std::optional<std::string> {
    if (auto x = analysis::first_gap_counterexample(fast, quadratic)) {
      return std::to_string(*x) + " is representable but skipped";
    }
    return std::nullopt;
  }, true);

  add("enumeration", [&]() -> std::optional<std::string> {
    if (quadratic < 3 || analysis::representable_prefix_equality(fast, quadratic)) return std::nullopt;
    return "block sums up to a_" + std::to_string(quadratic) + " differ from the terms";
  }, true);

  add("omitted-count", [&]() -> std::optional<std::string> {
    const auto omitted = omitted_integers(fast, fast.last());
    std::size_t j = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      while (j < omitted.size() && omitted[j] <= fast.term(k)) ++j;
      if (static_cast<Defect>(j) != fast.defect(k)) {
        return "omitted count " + std::to_string(j) + " != b_" + std::to_string(k);
      }
    }
    return std::nullopt;
  }, true);

  add("monotonicity-convexity", [&]() -> std::optional<std::string> {
    if (auto k = analysis::first_defect_decrease(fast)) return "b decreases after n = " + std::to_string(*k);
    if (auto i = analysis::first_convexity_failure(fast)) return "prefix sums not convex at i = " + std::to_string(*i);
    return std::nullopt;
  }, true);

  add("diffset-inequality", [&]() -> std::optional<std::string> {
    if (quadratic < 2) return std::nullopt;
    const auto sweep = analysis::diffset_sweep(fast, quadratic);
    if (!sweep.subset_holds) return "D_m^+ subset fails at m = " + std::to_string(*sweep.first_subset_failure);
    for (const auto& row : sweep.rows) {
      if (!row.inequality_holds()) return "|R_m| bound fails at m = " + std::to_string(row.m);
    }
    return std::nullopt;
  }, true);

  return results;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Seed seed = cfg.seed();
  const std::size_t minimum = std::max<std::size_t>(3, seed.size());
  if (cfg.n_max < minimum) throw UsageError("--n must be at least " + std::to_string(minimum));
  if (cfg.n_max > 5000) throw UsageError("--n must be at most 5000 for the quadratic suites");

  Stopwatch clock;
  const auto results = run_suites(seed, cfg.n_max);
  bool ok = true;
  for (const auto& r : results) {
    switch (r.status) {
      case SuiteResult::pass:
        out << "PASS " << r.name << '\n';
        break;
      case SuiteResult::skip:
        out << "SKIP " << r.name << " (" << r.detail << ")\n";
        break;
      case SuiteResult::fail:
        out << "FAIL " << r.name << ": " << r.detail << '\n';
        ok = false;
        break;
    }
  }
  err << "verified in " << clock.seconds() << " s\n";
  return ok ? kOk : kVerificationFailed;
}

// --- analyze ---------------------------------------------------------------

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Seed seed = cfg.seed();
  Stopwatch clock;
  std::optional<SequenceState> loaded;
  if (!cfg.in.empty()) {
    std::ifstream file(cfg.in, std::ios::binary);
    if (!file) throw Error("cannot open '" + cfg.in + "'");
    loaded.emplace(csv::read_terms(file, seed));
  } else {
    if (cfg.n_max < seed.size()) throw UsageError("--n must be at least the seed length");
    loaded.emplace(generate(seed, cfg.n_max));
  }
  const SequenceState& state = *loaded;

  const auto records = analysis::plateaus(state);
  const auto growth = analysis::growth_stats(state);
  write_output(cfg.out, out, [&](std::ostream& os) { csv::write_ratios(os, growth.ratios); });
  if (!cfg.plateau_out.empty()) {
    write_output(cfg.plateau_out, out, [&](std::ostream& os) { csv::write_plateaus(os, records); });
  }

  out << "terms: " << state.size() << ", b_" << state.size() << " = " << state.defect(state.size())
      << '\n';
  out << "plateaus: " << records.size() << (records.front().flagged ? " (non-classic seed, monotonicity not guaranteed)" : "")
      << '\n';
  out << "alpha_fit: " << growth.alpha_fit << " over " << growth.fit_points << " points\n";
  if (state.size() >= 1000) {
    const auto bounds = analysis::bound_checks(state);
    out << "lower slack max: " << bounds.lower_slack_max << " at n = " << bounds.lower_argmax << '\n';
    out << "a_n / n^(4175/2506) max: " << bounds.upper_ratio_max << " at n = " << bounds.upper_argmax
        << '\n';
  }
  err << "analyzed in " << clock.seconds() << " s\n";
  return kOk;
}

// --- diffset ---------------------------------------------------------------

int cmd_diffset(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Seed seed = cfg.seed();
  if (cfg.m < 2) throw UsageError("--m must be at least 2");
  if (cfg.m > cfg.m_ceiling) {
    throw UsageError("--m exceeds the ceiling " + std::to_string(cfg.m_ceiling));
  }
  Stopwatch clock;
  const SequenceState state = generate(seed, std::max(cfg.m, seed.size()));
  analysis::DiffSetOptions options;
  options.m_ceiling = cfg.m_ceiling;
  const auto sweep = analysis::diffset_sweep(state, cfg.m, options);
  write_output(cfg.out, out, [&](std::ostream& os) { csv::write_diffset(os, sweep.rows); });

  const auto& last = sweep.rows.back();
  out << "m = " << last.m << ": |D_m| = " << last.d_size << ", |R_m| = " << last.r_size
      << ", exponent = " << last.exponent << '\n';
  out << "inequality " << (sweep.inequality_holds ? "holds" : "FAILS") << " for every stage; subset "
      << (sweep.subset_holds ? "holds" : "FAILS") << '\n';
  err << "computed in " << clock.seconds() << " s\n";
  return sweep.inequality_holds && sweep.subset_holds ? kOk : kVerificationFailed;
}

// --- dioph -----------------------------------------------------------------

int cmd_dioph(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.quad.has_value() == cfg.square.has_value()) {
    throw UsageError("give exactly one of --quad E or --square D");
  }
  const auto bounds = cfg.bounds();
  std::vector<nt::DiophantineSolution> sols;
  if (cfg.quad) {
    sols = nt::solve_quadratic_pow2(*cfg.quad, bounds);
  } else {
    if (*cfg.square == 0) throw UsageError("--square requires D != 0");
    sols = nt::solve_square_plus_d(*cfg.square, bounds);
  }
  write_output(cfg.out, out, [&](std::ostream& os) { csv::write_solutions(os, sols); });
  out << sols.size() << " solution" << (sols.size() == 1 ? "" : "s") << " with exponent <= "
      << bounds.max_exponent << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy consecutive-sum sequence generator and analysis toolkit", "hofseq"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed_text, "Comma separated seed terms")->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "Generate terms and write n,a_n,b_n CSV");
  add_seed(gen);
  gen->add_option("--n", cfg.n_max, "Number of terms")->capture_default_str();
  gen->add_option("--out", cfg.out, "Output path ('-' for stdout)");

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  add_seed(verify);
  verify->add_option("--n", cfg.n_max, "Number of terms (3..5000)");

  auto* analyze = app.add_subcommand("analyze", "Plateaus, ratio table and bound checks");
  add_seed(analyze);
  analyze->add_option("--n", cfg.n_max, "Number of terms")->capture_default_str();
  analyze->add_option("--in", cfg.in, "Read terms from a n,a_n,b_n CSV instead of generating");
  analyze->add_option("--out", cfg.out, "Ratio CSV path ('-' for stdout)");
  analyze->add_option("--plateau-out", cfg.plateau_out, "Plateau CSV path");

  auto* diffset = app.add_subcommand("diffset", "Difference-set sizes for stages 2..m");
  add_seed(diffset);
  diffset->add_option("--m", cfg.m, "Largest stage")->required();
  diffset->add_option("--m-ceiling", cfg.m_ceiling, "Largest stage accepted")->capture_default_str();
  diffset->add_option("--out", cfg.out, "Output path ('-' for stdout)");

  auto* dioph = app.add_subcommand("dioph", "Solve v^2+v+E=2^k or x^2+D=2^m by exhaustive search");
  dioph->add_option("--quad", cfg.quad, "E in v^2 + v + E = 2^k");
  dioph->add_option("--square", cfg.square, "D in x^2 + D = 2^m");
  dioph->add_option("--max-exp", cfg.max_exponent, "Largest exponent searched")->capture_default_str();
  dioph->add_option("--max-root", cfg.max_root, "Largest |root| reported (default 2^126)");
  dioph->add_option("--out", cfg.out, "Output path ('-' for stdout)");

  std::vector<std::string> argv_storage{"hofseq"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      if (cfg.out.empty()) cfg.out = "terms.csv";
      return cmd_gen(cfg, out, err);
    }
    if (*verify) {
      if (verify->count("--n") == 0) cfg.n_max = 2000;
      return cmd_verify(cfg, out, err);
    }
    if (*analyze) {
      if (cfg.out.empty()) cfg.out = "ratios.csv";
      return cmd_analyze(cfg, out, err);
    }
    if (*diffset) {
      if (cfg.out.empty()) cfg.out = "diffset.csv";
      return cmd_diffset(cfg, out, err);
    }
    if (*dioph) {
      if (cfg.out.empty()) cfg.out = "solutions.csv";
      return cmd_dioph(cfg, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}

}  // namespace hofseq::cli
