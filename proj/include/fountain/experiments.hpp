#pragma once

// Seeded Monte Carlo experiments on the representation cost of inputs
// before and after an encoding transform.
//
// Per-trial seeds are mix_seed(master, deficit, trial) (see random.hpp), so
// every record is reproducible on its own, independent of scheduling.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "fountain/codec.hpp"
#include "fountain/entropy.hpp"
#include "fountain/errors.hpp"
#include "fountain/gf2.hpp"
#include "fountain/matrixgen.hpp"
#include "fountain/permgroup.hpp"
#include "fountain/random.hpp"

namespace fountain {

// n/2 - deficit ones at uniformly random distinct positions.
inline BitVector make_input(std::size_t n, std::size_t deficit, Rng& rng) {
  if (n == 0) throw DomainError("make_input: n must be >= 1");
  if (deficit > n / 2) throw DomainError("make_input: deficit exceeds n/2");
  const std::size_t ones = n / 2 - deficit;
  BitVector x(n);
  for (std::size_t j = n - ones; j < n; ++j) {
    const auto t = static_cast<std::size_t>(uniform_below(rng, j + 1));
    x.set(x.get(t) ? j : t, true);
  }
  return x;
}

enum class Transform { bidiagonal, soliton };

inline std::string to_string(Transform t) { return t == Transform::bidiagonal ? "bidiagonal" : "soliton"; }

struct SavingExperimentConfig {
  std::size_t n = 30204;
  std::vector<std::size_t> deficits;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  Transform transform = Transform::bidiagonal;
  std::size_t workers = 1;
  std::size_t max_row_attempts = 1000;  // soliton transform only
};

// {0, step, 2 step, ...} up to and including max.
inline std::vector<std::size_t> deficit_grid(std::size_t max, std::size_t step) {
  if (step == 0) throw DomainError("deficit grid step must be >= 1");
  std::vector<std::size_t> grid;
  for (std::size_t d = 0; d <= max; d += step) grid.push_back(d);
  return grid;
}

struct SavingRecord {
  std::size_t deficit = 0;
  std::size_t trial = 0;
  std::uint64_t seed_used = 0;
  double cost_in = 0.0;
  double cost_out = 0.0;
  double saving = 0.0;  // cost_in - cost_out
};

inline void validate(const SavingExperimentConfig& cfg) {
  if (cfg.n < 2 || cfg.n % 2 != 0) throw DomainError("saving experiment: n must be even and >= 2");
  if (cfg.trials == 0) throw DomainError("saving experiment: trials must be >= 1");
  if (cfg.deficits.empty()) throw DomainError("saving experiment: no deficits given");
  for (auto d : cfg.deficits) {
    if (d > cfg.n / 2) throw DomainError("saving experiment: deficit " + std::to_string(d) + " exceeds n/2");
  }
}

inline SavingRecord run_saving_trial(const SavingExperimentConfig& cfg, std::size_t deficit, std::size_t trial) {
  SavingRecord rec;
  rec.deficit = deficit;
  rec.trial = trial;
  rec.seed_used = mix_seed(cfg.seed, deficit, trial);
  Rng rng(rec.seed_used);
  const BitVector x = make_input(cfg.n, deficit, rng);
  const BitVector y = cfg.transform == Transform::bidiagonal
                          ? encode_bidiagonal(x)
                          : encode(gen_full_rank(ideal_soliton(cfg.n), rng, cfg.max_row_attempts), x);
  rec.cost_in = empirical_cost(x).total_cost;
  rec.cost_out = empirical_cost(y).total_cost;
  rec.saving = rec.cost_in - rec.cost_out;
  return rec;
}

// Records in (deficit, trial) order for any worker count.
inline std::vector<SavingRecord> run_saving_experiment(const SavingExperimentConfig& cfg) {
  validate(cfg);
  const std::size_t total = cfg.deficits.size() * cfg.trials;
  std::vector<SavingRecord> records(total);
  std::vector<std::exception_ptr> errors(total);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        records[i] = run_saving_trial(cfg, cfg.deficits[i / cfg.trials], i % cfg.trials);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(cfg.workers, 1, total);
  if (workers == 1) {
    run_range(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

struct SavingSummary {
  std::size_t deficit = 0;
  std::size_t trials = 0;
  double mean_saving = 0.0;
  double stddev_saving = 0.0;  // sample standard deviation; 0 for a single trial
};

inline std::vector<SavingSummary> summarize(const std::vector<SavingRecord>& records) {
  std::vector<SavingSummary> out;
  std::vector<std::vector<double>> groups;
  for (const auto& r : records) {
    auto it = std::find_if(out.begin(), out.end(), [&](const SavingSummary& s) { return s.deficit == r.deficit; });
    if (it == out.end()) {
      out.push_back({r.deficit, 0, 0.0, 0.0});
      groups.emplace_back();
      it = out.end() - 1;
    }
    groups[static_cast<std::size_t>(it - out.begin())].push_back(r.saving);
  }
  for (std::size_t g = 0; g < out.size(); ++g) {
    const auto& v = groups[g];
    double sum = 0.0;
    for (double s : v) sum += s;
    const double mean = sum / static_cast<double>(v.size());
    double ss = 0.0;
    for (double s : v) ss += (s - mean) * (s - mean);
    out[g].trials = v.size();
    out[g].mean_saving = mean;
    out[g].stddev_saving = v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1)) : 0.0;
  }
  return out;
}

inline void write_records_csv(std::ostream& os, const std::vector<SavingRecord>& records) {
  os << "deficit,trial,seed_used,cost_in,cost_out,saving\n";
  os << std::fixed << std::setprecision(6);
  for (const auto& r : records) {
    os << r.deficit << ',' << r.trial << ',' << r.seed_used << ',' << r.cost_in << ',' << r.cost_out << ','
       << r.saving << '\n';
  }
}

inline void write_summary_csv(std::ostream& os, const std::vector<SavingSummary>& summary) {
  os << "deficit,mean_saving,stddev_saving\n";
  os << std::fixed << std::setprecision(6);
  for (const auto& s : summary) os << s.deficit << ',' << s.mean_saving << ',' << s.stddev_saving << '\n';
}

// ---------------------------------------------------------------------------

struct Conjecture1Report {
  std::vector<SavingSummary> summary;
  double max_mean_saving = 0.0;
  std::size_t argmax_deficit = 0;
  bool pass = false;  // max mean saving below one bit
};

// A FAIL is an empirical finding against the conjecture, not an error.
inline Conjecture1Report conjecture1_probe(const SavingExperimentConfig& cfg) {
  Conjecture1Report report;
  report.summary = summarize(run_saving_experiment(cfg));
  const auto best = std::max_element(report.summary.begin(), report.summary.end(),
                                     [](const auto& a, const auto& b) { return a.mean_saving < b.mean_saving; });
  report.max_mean_saving = best->mean_saving;
  report.argmax_deficit = best->deficit;
  report.pass = report.max_mean_saving < 1.0;
  return report;
}

struct ExhaustiveSaving {
  std::size_t inputs = 0;
  double mean_cost_in = 0.0;
  double mean_cost_out = 0.0;
  double mean_saving = 0.0;
};

// Every placement of `ones` ones in n positions through the bidiagonal transform.
inline ExhaustiveSaving exhaustive_bidiagonal_saving(std::size_t n, std::size_t ones) {
  if (n == 0 || n > 24 || ones > n) throw DomainError("exhaustive_bidiagonal_saving: need 1 <= n <= 24, ones <= n");
  ExhaustiveSaving out;
  const double cost_in = cost_of_counts(n, ones).total_cost;
  double total_out = 0.0;
  const std::uint32_t limit = 1U << n;
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    if (static_cast<std::size_t>(std::popcount(bits)) != ones) continue;
    total_out += empirical_cost(encode_bidiagonal(BitVector::from_index(bits, n))).total_cost;
    ++out.inputs;
  }
  out.mean_cost_in = cost_in;
  out.mean_cost_out = total_out / static_cast<double>(out.inputs);
  out.mean_saving = out.mean_cost_in - out.mean_cost_out;
  return out;
}

// ---------------------------------------------------------------------------

enum class MarkovInitial { zero, one, stationary };

struct MarkovSourceConfig {
  double p01 = 0.5;  // P(next = 1 | current = 0)
  double p10 = 0.5;  // P(next = 0 | current = 1)
  MarkovInitial initial = MarkovInitial::stationary;
  std::size_t length = 1000;
};

inline double stationary_ones(const MarkovSourceConfig& cfg) {
  if (cfg.p01 + cfg.p10 == 0.0) throw DomainError("markov: stationary distribution is not unique when p01 = p10 = 0");
  return cfg.p01 / (cfg.p01 + cfg.p10);
}

inline BitVector markov_realization(const MarkovSourceConfig& cfg, Rng& rng) {
  if (!(cfg.p01 >= 0.0 && cfg.p01 <= 1.0 && cfg.p10 >= 0.0 && cfg.p10 <= 1.0)) {
    throw DomainError("markov: transition probabilities must lie in [0, 1]");
  }
  if (cfg.length == 0) throw DomainError("markov: length must be >= 1");
  bool state = false;
  switch (cfg.initial) {
    case MarkovInitial::zero: state = false; break;
    case MarkovInitial::one: state = true; break;
    case MarkovInitial::stationary: state = uniform_unit(rng) < stationary_ones(cfg); break;
  }
  BitVector v(cfg.length);
  for (std::size_t i = 0; i < cfg.length; ++i) {
    v.set(i, state);
    const double u = uniform_unit(rng);
    state = state ? !(u < cfg.p10) : (u < cfg.p01);
  }
  return v;
}

struct Conjecture2Report {
  std::size_t trials = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double mean_cost_raw = 0.0;
  double mean_cost_transformed = 0.0;
  double mean_difference = 0.0;  // transformed - raw, paired per trial
  double std_error = 0.0;        // of mean_difference
  double std_error_transformed = 0.0;
  std::optional<double> reference_cost;  // n * E[H(J/n)], J ~ Binomial(n, 1/2); only when p01 = p10
  bool consistent = false;
};

inline constexpr std::uint64_t kMarkovStream = 0x6d61726b6f76ULL;

// Transformed cost is "consistent" when it is not more than two standard
// errors below the raw cost (and below the binomial reference, if any).
inline Conjecture2Report conjecture2_probe(const MarkovSourceConfig& cfg, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw DomainError("conjecture2_probe: trials must be >= 1");
  Conjecture2Report r;
  r.trials = trials;
  r.n = cfg.length;
  r.seed = seed;
  std::vector<double> raw(trials), transformed(trials), diff(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, kMarkovStream, t));
    const BitVector x = markov_realization(cfg, rng);
    raw[t] = empirical_cost(x).total_cost;
    transformed[t] = empirical_cost(encode_bidiagonal(x)).total_cost;
    diff[t] = transformed[t] - raw[t];
  }
  auto mean_of = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  auto se_of = [&](const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
  };
  r.mean_cost_raw = mean_of(raw);
  r.mean_cost_transformed = mean_of(transformed);
  r.mean_difference = mean_of(diff);
  r.std_error = se_of(diff, r.mean_difference);
  r.std_error_transformed = se_of(transformed, r.mean_cost_transformed);
  if (cfg.p01 == cfg.p10 && cfg.p01 > 0.0) {
    r.reference_cost = static_cast<double>(cfg.length) * binomial_avg_entropy(cfg.length, 0.5);
  }
  r.consistent = r.mean_difference >= -2.0 * r.std_error;
  if (r.reference_cost) {
    r.consistent = r.consistent && r.mean_cost_transformed >= *r.reference_cost - 2.0 * r.std_error_transformed;
  }
  return r;
}

// ---------------------------------------------------------------------------

struct PreservationReport {
  std::size_t k = 0;
  double mean_cost_inputs = 0.0;
  double mean_cost_outputs = 0.0;
  bool equal = false;
};

inline constexpr std::size_t kMaxPreservationK = 16;

// Mean cost over all 2^k inputs versus over their images. Both multisets of
// costs are summed in sorted order, so equality is exact for a bijection.
inline PreservationReport entropy_preservation_check(const BitMatrix& r) {
  if (!r.square()) throw DimensionError("entropy_preservation_check: matrix is not square");
  const std::size_t k = r.rows();
  if (k > kMaxPreservationK) throw CapError("entropy_preservation_check: k must be <= 16");
  const Permutation p = induce_permutation(r, kMaxPreservationK);

  std::vector<double> cost_by_weight(k + 1);
  for (std::size_t w = 0; w <= k; ++w) cost_by_weight[w] = cost_of_counts(k, w).total_cost;

  const std::size_t n = p.size();
  std::vector<double> in_costs(n), out_costs(n);
  for (std::size_t j = 0; j < n; ++j) {
    in_costs[j] = cost_by_weight[static_cast<std::size_t>(std::popcount(j))];
    out_costs[j] = cost_by_weight[static_cast<std::size_t>(std::popcount(std::size_t{p.list()[j]} - 1))];
  }
  std::sort(in_costs.begin(), in_costs.end());
  std::sort(out_costs.begin(), out_costs.end());
  double in_sum = 0.0, out_sum = 0.0;
  for (double c : in_costs) in_sum += c;
  for (double c : out_costs) out_sum += c;

  PreservationReport report;
  report.k = k;
  report.mean_cost_inputs = in_sum / static_cast<double>(n);
  report.mean_cost_outputs = out_sum / static_cast<double>(n);
  report.equal = report.mean_cost_inputs == report.mean_cost_outputs;
  return report;
}

}  // namespace fountain
