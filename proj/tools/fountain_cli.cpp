// fountain: command-line front end for the GF(2) encoding-matrix library.
//
// Exit codes: 0 success, 2 domain/config error, 3 I/O or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fountain/fountain.hpp"

namespace {

using namespace fountain;

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
};

// Owns the output stream; stdout when no path is given.
class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
  std::unique_ptr<std::ofstream> file_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "'");
  return is;
}

BitMatrix load_matrix(const std::string& path) {
  auto is = open_input(path);
  return read_matrix(is);
}

BitVector load_vector(const std::string& path) {
  auto is = open_input(path);
  return read_vector(is);
}

void echo_seed(std::uint64_t seed) { std::cerr << "seed: " << seed << '\n'; }

// ---------------------------------------------------------------------------

struct GenOptions {
  std::size_t k = 0;
  std::string dist = "ideal-soliton";
  std::size_t max_row_attempts = 1000;
};

void run_gen(const Globals& g, const GenOptions& o) {
  BitMatrix m = [&] {
    if (o.dist == "bidiagonal") return bidiagonal(o.k);
    echo_seed(g.seed);
    return gen_full_rank(ideal_soliton(o.k), GenConfig{o.k, g.seed, o.max_row_attempts});
  }();
  Output out(g.out);
  write_matrix(out.stream(), m);
}

struct CodecOptions {
  std::string matrix;
  std::string in;
};

void run_encode(const Globals& g, const CodecOptions& o, bool decoding) {
  const BitMatrix r = load_matrix(o.matrix);
  const BitVector v = load_vector(o.in);
  if (!r.square()) throw DimensionError("encoding matrix must be square");
  const BitVector result = decoding ? decode(r, v) : encode(r, v);
  Output out(g.out);
  write_vector(out.stream(), result);
}

struct AnalyzeOptions {
  std::string matrix;
  bool perm = false;
  bool cycles = false;
  bool order = false;
  bool group = false;
  std::uint64_t order_cap = 1U << 20;
  std::size_t perm_cap = kDefaultPermutationCap;
  std::size_t samples = 100;
};

void run_analyze(const Globals& g, const AnalyzeOptions& o) {
  const BitMatrix r = load_matrix(o.matrix);
  if (!r.square()) throw DimensionError("encoding matrix must be square");
  Output out(g.out);
  auto& os = out.stream();
  const bool any = o.perm || o.cycles || o.order || o.group;

  if (o.perm || o.cycles) {
    const Permutation p = induce_permutation(r, o.perm_cap);
    if (o.perm) {
      write_permutation(os, p);
      os << "bijection: " << (Permutation::is_bijection(p.list()) ? "yes" : "no") << '\n';
    }
    if (o.cycles) write_cycles(os, fountain::cycles(p));
  }
  if (o.order || !any) os << "order: " << matrix_order(r, o.order_cap) << '\n';
  if (o.group) {
    echo_seed(g.seed);
    const std::size_t k = r.rows();
    const BitMatrix id = BitMatrix::identity(k);
    const BitMatrix inv = invert(r);
    os << "group: identity " << (matmul(id, r) == r && matmul(r, id) == r ? "ok" : "FAILED") << '\n';
    os << "group: inverse " << (is_identity(matmul(r, inv)) && is_identity(matmul(inv, r)) ? "ok" : "FAILED")
       << '\n';
    os << "group: closure (R*R) " << (rank(matmul(r, r)) == k ? "ok" : "FAILED") << '\n';
    Rng rng(g.seed);
    const GroupReport rep = verify_group_sampled(k, o.samples, rng);
    os << "group: sampled k=" << k << " triples=" << rep.associativity_checks
       << " closure/identity/inverse/associativity ok\n";
    os << "group: |GL(" << k << ",2)| = " << rep.expected_count << '\n';
  }
}

struct Table1Options {
  std::size_t k = 8;
  std::size_t ones = 4;
};

void run_table1(const Globals& g, const Table1Options& o) {
  Output out(g.out);
  write_table(out.stream(), zero_prob_table(o.k, o.ones));
}

struct SavingOptions {
  std::size_t n = 30204;
  std::size_t deficit_max = 250;
  std::size_t step = 10;
  std::size_t trials = 10;
  std::string transform = "bidiagonal";
  std::string summary;
  std::size_t workers = 1;
};

SavingExperimentConfig to_config(const Globals& g, const SavingOptions& o) {
  SavingExperimentConfig cfg;
  cfg.n = o.n;
  cfg.deficits = deficit_grid(o.deficit_max, o.step);
  cfg.trials = o.trials;
  cfg.seed = g.seed;
  cfg.transform = o.transform == "soliton" ? Transform::soliton : Transform::bidiagonal;
  cfg.workers = o.workers;
  return cfg;
}

void run_saving(const Globals& g, const SavingOptions& o) {
  const SavingExperimentConfig cfg = to_config(g, o);
  echo_seed(cfg.seed);
  const auto records = run_saving_experiment(cfg);
  const auto summary = summarize(records);
  Output out(g.out);
  write_records_csv(out.stream(), records);

  std::string summary_path = o.summary;
  if (summary_path.empty() && !g.out.empty()) summary_path = g.out + ".summary.csv";
  if (summary_path.empty()) {
    std::cout << '\n';
    write_summary_csv(std::cout, summary);
  } else {
    Output s(summary_path);
    write_summary_csv(s.stream(), summary);
  }
}

void run_conjecture1(const Globals& g, const SavingOptions& o) {
  const SavingExperimentConfig cfg = to_config(g, o);
  echo_seed(cfg.seed);
  const auto rep = conjecture1_probe(cfg);
  Output out(g.out);
  auto& os = out.stream();
  os << std::fixed << std::setprecision(6);
  os << "n: " << cfg.n << "\nseed: " << cfg.seed << "\ntrials: " << cfg.trials << '\n';
  os << "max_mean_saving: " << rep.max_mean_saving << " (deficit " << rep.argmax_deficit << ")\n";
  os << "conjecture1: " << (rep.pass ? "PASS" : "FAIL") << '\n';
}

struct MarkovOptions {
  double p01 = 0.5;
  double p10 = 0.5;
  std::string initial = "stationary";
  std::size_t length = 1000;
  std::size_t trials = 100;
};

void run_conjecture2(const Globals& g, const MarkovOptions& o) {
  MarkovSourceConfig cfg;
  cfg.p01 = o.p01;
  cfg.p10 = o.p10;
  cfg.length = o.length;
  cfg.initial = o.initial == "0" ? MarkovInitial::zero : o.initial == "1" ? MarkovInitial::one : MarkovInitial::stationary;
  echo_seed(g.seed);
  const auto rep = conjecture2_probe(cfg, o.trials, g.seed);
  Output out(g.out);
  auto& os = out.stream();
  os << std::fixed << std::setprecision(6);
  os << "n: " << rep.n << "\nseed: " << rep.seed << "\ntrials: " << rep.trials << '\n';
  os << "mean_cost_raw: " << rep.mean_cost_raw << '\n';
  os << "mean_cost_transformed: " << rep.mean_cost_transformed << '\n';
  os << "mean_difference: " << rep.mean_difference << " +/- " << rep.std_error << " (std. error)\n";
  if (rep.reference_cost) os << "reference_cost: " << *rep.reference_cost << '\n';
  os << "conjecture2: " << (rep.consistent ? "consistent" : "INCONSISTENT") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GF(2) fountain-code encoding matrices: generation, coding, analysis, experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "RNG seed for randomized subcommands")->capture_default_str();
  app.add_option("--out", g.out, "Output path (default: stdout)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an encoding matrix");
  gen_cmd->add_option("--k", gen.k, "Matrix size")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--dist", gen.dist, "Construction")
      ->check(CLI::IsMember({"ideal-soliton", "bidiagonal"}))
      ->capture_default_str();
  gen_cmd->add_option("--max-row-attempts", gen.max_row_attempts, "Resampling budget per row")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CodecOptions enc, dec;
  auto* enc_cmd = app.add_subcommand("encode", "y = R x");
  enc_cmd->add_option("--matrix", enc.matrix)->required();
  enc_cmd->add_option("--in", enc.in)->required();
  auto* dec_cmd = app.add_subcommand("decode", "x = R^-1 y");
  dec_cmd->add_option("--matrix", dec.matrix)->required();
  dec_cmd->add_option("--in", dec.in)->required();

  AnalyzeOptions an;
  auto* an_cmd = app.add_subcommand("analyze", "Induced permutation, cycles, order, group checks");
  an_cmd->add_option("--matrix", an.matrix)->required();
  an_cmd->add_flag("--perm", an.perm, "Print the induced permutation (list form)");
  an_cmd->add_flag("--cycles", an.cycles, "Print its cycle decomposition");
  an_cmd->add_flag("--order", an.order, "Print the matrix order");
  an_cmd->add_flag("--group", an.group, "Group axiom spot checks");
  an_cmd->add_option("--order-cap", an.order_cap)->check(CLI::PositiveNumber)->capture_default_str();
  an_cmd->add_option("--perm-cap", an.perm_cap)->capture_default_str();
  an_cmd->add_option("--samples", an.samples, "Sampled triples for --group")->capture_default_str();

  Table1Options t1;
  auto* t1_cmd = app.add_subcommand("table1", "Zero-output probabilities per Ideal Soliton degree");
  t1_cmd->add_option("--k", t1.k)->check(CLI::PositiveNumber)->capture_default_str();
  t1_cmd->add_option("--ones", t1.ones)->capture_default_str();

  auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo experiments");
  exp_cmd->require_subcommand(1);
  SavingOptions sv;
  auto add_saving_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n", sv.n, "Input length (even)")->capture_default_str();
    cmd->add_option("--deficit-max", sv.deficit_max)->capture_default_str();
    cmd->add_option("--step", sv.step)->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--trials", sv.trials)->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--transform", sv.transform)
        ->check(CLI::IsMember({"bidiagonal", "soliton"}))
        ->capture_default_str();
    cmd->add_option("--workers", sv.workers)->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto* saving_cmd = exp_cmd->add_subcommand("saving", "Saving in bits versus ones deficit");
  add_saving_flags(saving_cmd);
  saving_cmd->add_option("--summary", sv.summary, "Summary CSV path (default: <out>.summary.csv)");
  auto* c1_cmd = exp_cmd->add_subcommand("conjecture1", "Is the largest mean saving below one bit?");
  add_saving_flags(c1_cmd);

  MarkovOptions mk;
  auto* c2_cmd = exp_cmd->add_subcommand("conjecture2", "Markov-source cost before and after the transform");
  c2_cmd->add_option("--p01", mk.p01)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  c2_cmd->add_option("--p10", mk.p10)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  c2_cmd->add_option("--initial", mk.initial)->check(CLI::IsMember({"0", "1", "stationary"}))->capture_default_str();
  c2_cmd->add_option("--length", mk.length)->check(CLI::PositiveNumber)->capture_default_str();
  c2_cmd->add_option("--trials", mk.trials)->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*gen_cmd) run_gen(g, gen);
    else if (*enc_cmd) run_encode(g, enc, false);
    else if (*dec_cmd) run_encode(g, dec, true);
    else if (*an_cmd) run_analyze(g, an);
    else if (*t1_cmd) run_table1(g, t1);
    else if (*saving_cmd) run_saving(g, sv);
    else if (*c1_cmd) run_conjecture1(g, sv);
    else if (*c2_cmd) run_conjecture2(g, mk);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
