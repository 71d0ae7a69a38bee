// fmzv: compute finite multiple zeta values and run verification sweeps.
//
// Exit codes: 0 all records passed or were skipped, 1 some record failed,
// 2 usage error. Sweep output goes to stdout or --out; summaries go to stderr
// so the record stream stays machine-readable.

#include "fmzv/bernoulli.hpp"
#include "fmzv/errors.hpp"
#include "fmzv/harmonic.hpp"
#include "fmzv/indices.hpp"
#include "fmzv/parallel.hpp"
#include "fmzv/report.hpp"
#include "fmzv/symbolic/symbolic.hpp"
#include "fmzv/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

namespace {

using namespace fmzv;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string path; // empty: stdout
  std::string format = "jsonl";
  bool resume = false;
};

void add_output_options(CLI::App& cmd, OutputOptions& out) {
  cmd.add_option("--out", out.path, "Write records to FILE instead of stdout");
  cmd.add_option("--format", out.format, "Record format")->check(CLI::IsMember({"jsonl", "csv"}));
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct StreamSummary {
  std::size_t previous = 0; // records already present on resume
  std::size_t written = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  bool previous_failed = false;

  int exit_code() const { return failed > 0 || previous_failed ? 1 : 0; }
};

using ChunkFn = std::function<std::vector<VerificationRecord>(std::size_t first, std::size_t last)>;
using RecordHook = std::function<void(const VerificationRecord&)>;

// Evaluates the planned records in order, a chunk at a time, and flushes each
// chunk before starting the next. Under --resume the output file is its own
// checkpoint: the last complete line names the last finished key, and any
// partial line after it is truncated.
StreamSummary stream_records(const std::vector<RecordKey>& keys, const ChunkFn& evaluate,
                             const OutputOptions& opts, std::size_t chunk, const RecordHook& hook = {}) {
  const Format format = parse_format(opts.format);
  StreamSummary summary;
  std::size_t start = 0;
  bool need_header = format == Format::csv;

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (opts.resume) {
    if (opts.path.empty())
      throw UsageError("--resume requires --out");
    const ResumePoint rp = scan_for_resume(opts.path, format);
    if (std::filesystem::exists(opts.path))
      std::filesystem::resize_file(opts.path, rp.keep_bytes);
    if (rp.last) {
      const auto it = std::find(keys.begin(), keys.end(), *rp.last);
      if (it == keys.end())
        throw UsageError(fmt::format("{}: last record does not belong to this sweep", opts.path));
      start = static_cast<std::size_t>(it - keys.begin()) + 1;
    }
    summary.previous = rp.records;
    summary.previous_failed = rp.any_failed;
    need_header = need_header && !rp.has_header && rp.keep_bytes == 0;
    file.open(opts.path, std::ios::binary | std::ios::app);
  } else if (!opts.path.empty()) {
    file.open(opts.path, std::ios::binary | std::ios::trunc);
  }
  if (!opts.path.empty()) {
    if (!file)
      throw UsageError(fmt::format("cannot open {} for writing", opts.path));
    out = &file;
  }

  if (need_header)
    *out << csv_header() << '\n';
  for (std::size_t first = start; first < keys.size(); first += chunk) {
    const std::size_t last = std::min(keys.size(), first + chunk);
    for (const VerificationRecord& r : evaluate(first, last)) {
      *out << format_record(r, format) << '\n';
      ++summary.written;
      summary.failed += r.failed() ? 1 : 0;
      summary.skipped += r.skipped ? 1 : 0;
      if (hook)
        hook(r);
    }
    out->flush();
  }
  return summary;
}

void print_summary(std::string_view what, const StreamSummary& s) {
  fmt::print(stderr, "{}: {} records written, {} failed, {} skipped", what, s.written, s.failed, s.skipped);
  if (s.previous)
    fmt::print(stderr, " (resumed after {} existing records)", s.previous);
  fmt::print(stderr, "\n");
}

std::vector<u64> primes_from(const std::string& text) {
  try {
    return parse_prime_range(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
  std::string index;
  u64 prime = 0;
  bool star = false;
};

int cmd_compute(const ComputeArgs& a) {
  const Index ix = Index::parse(a.index);
  const PrimeCtx ctx(a.prime);
  if (a.prime <= static_cast<u64>(ix.weight()) + 1)
    throw RangeError(fmt::format("prime {} must exceed weight + 1 = {}", a.prime, ix.weight() + 1));
  const Residue v = a.star ? mhs_star(ix, ctx) : mhs_strict(ix, ctx);
  fmt::print("index={} p={} kind={} value={}\n", ix.to_string(), a.prime, a.star ? "star" : "strict",
             v.value());
  return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string checks;
  unsigned k_max = 8;
  unsigned s_min = 0;
  unsigned s_max = UINT_MAX;
  unsigned w_max = 6;
  std::string primes;
  unsigned jobs = default_jobs();
  OutputOptions out;
};

RecordKey key_of(const SweepTask& t) {
  return RecordKey{std::string(check_name(t.check)), t.k, t.s,
                   t.index ? std::optional(t.index->to_string()) : std::nullopt, t.p};
}

int cmd_verify(const VerifyArgs& a) {
  SweepPlan plan;
  std::string_view rest = a.checks;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view name = rest.substr(0, comma);
    const auto kind = parse_check(name);
    if (!kind)
      throw UsageError(fmt::format("unknown check '{}'", name));
    plan.checks.push_back(*kind);
    rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
  }
  if (plan.checks.empty())
    throw UsageError("no checks given");
  if (a.s_min > a.s_max)
    throw UsageError("--smin exceeds --smax");
  plan.k_max = a.k_max;
  plan.s_min = a.s_min;
  plan.s_max = a.s_max;
  plan.w_max = a.w_max;
  plan.primes = primes_from(a.primes);

  const std::vector<SweepTask> tasks = plan_tasks(plan);
  std::vector<RecordKey> keys;
  keys.reserve(tasks.size());
  for (const SweepTask& t : tasks)
    keys.push_back(key_of(t));

  WorkspaceCache cache;
  const auto evaluate = [&](std::size_t first, std::size_t last) {
    return run_tasks(std::span(tasks).subspan(first, last - first), cache, a.jobs);
  };
  const StreamSummary s = stream_records(keys, evaluate, a.out, std::max<std::size_t>(256, 32 * a.jobs));
  print_summary("verify", s);
  return s.exit_code();
}

// ----------------------------------------------------------------- zsweep

struct ZSweepArgs {
  unsigned k = 0;
  std::string primes;
  unsigned jobs = default_jobs();
  OutputOptions out;
};

int cmd_zsweep(const ZSweepArgs& a) {
  if (a.k < 2)
    throw UsageError("--k must be at least 2");
  const std::vector<u64> primes = primes_from(a.primes);
  std::vector<RecordKey> keys;
  for (u64 p : primes)
    keys.push_back(RecordKey{"zsweep", a.k, std::nullopt, std::nullopt, p});

  const auto evaluate = [&](std::size_t first, std::size_t last) {
    std::vector<VerificationRecord> rows(last - first);
    parallel_for(rows.size(), a.jobs,
                 [&](std::size_t i) { rows[i] = to_record(a.k, z_sweep_row(a.k, primes[first + i])); });
    return rows;
  };
  std::size_t zeros = 0, not_applicable = 0;
  const auto count = [&](const VerificationRecord& r) {
    zeros += r.detail.find("zero=yes") != std::string::npos ? 1 : 0;
    not_applicable += r.detail.find("crosscheck=n/a") != std::string::npos ? 1 : 0;
  };
  const StreamSummary s = stream_records(keys, evaluate, a.out, std::max<std::size_t>(64, 8 * a.jobs), count);
  fmt::print(stderr,
             "zsweep k={}: {} rows, {} zero residues, {} cross-check failures, {} cross-checks n/a, "
             "{} skipped",
             a.k, s.written, zeros, s.failed, not_applicable, s.skipped);
  if (s.previous)
    fmt::print(stderr, " (resumed after {} existing rows)", s.previous);
  fmt::print(stderr, "\n");
  return s.exit_code();
}

// --------------------------------------------------------------- symbolic

struct SymbolicArgs {
  std::string suite;
  unsigned m_max = 8;
  unsigned pairs = 25;
  unsigned n_max = 0; // suite default when 0
  unsigned k_max = 6;
  u64 prime = 13;
  unsigned samples = 20;
  u64 seed = 42;
  std::optional<unsigned> l;
  unsigned jobs = default_jobs();
  OutputOptions out;
};

int cmd_symbolic(const SymbolicArgs& a) {
  std::vector<VerificationRecord> records;
  if (a.suite == "gauss")
    records = run_gauss_suite(a.m_max, a.pairs, a.seed);
  else if (a.suite == "anl")
    records = run_anl_suite(a.n_max ? a.n_max : 6);
  else if (a.suite == "phi0")
    records = run_phi0_suite(a.n_max ? a.n_max : 5, a.k_max, a.jobs);
  else if (a.suite == "hypcong")
    records = run_hypcong_suite(a.prime, a.samples, a.seed, a.l, a.jobs);
  else
    throw UsageError(fmt::format("unknown suite '{}'", a.suite));

  std::vector<RecordKey> keys;
  for (const VerificationRecord& r : records)
    keys.push_back(key_of(r));
  const auto slice = [&](std::size_t first, std::size_t last) {
    return std::vector<VerificationRecord>(records.begin() + first, records.begin() + last);
  };
  const StreamSummary s = stream_records(keys, slice, a.out, records.size() + 1);
  print_summary(fmt::format("symbolic {}", a.suite), s);
  return s.exit_code();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite multiple zeta values modulo primes: computation and verification"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Evaluate one finite multiple zeta value");
  c->add_option("--index", compute.index, "Index k1,...,kr (empty for the empty index)")->required();
  c->add_option("--prime", compute.prime, "Odd prime p")->required();
  c->add_flag("--star", compute.star, "Star variant (non-strict inequalities)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Sweep identities over a range of primes");
  v->add_option("checks", verify.checks, "Comma-separated: ao,lm,lemma,antipode,reversal,height,euler")
      ->required();
  v->add_option("--kmax", verify.k_max, "Largest weight for family checks")->capture_default_str();
  v->add_option("--smin", verify.s_min, "Smallest height")->capture_default_str();
  v->add_option("--smax", verify.s_max, "Largest height");
  v->add_option("--wmax", verify.w_max, "Largest weight for index checks")->capture_default_str();
  v->add_option("--primes", verify.primes, "Inclusive prime range A..B")->required();
  v->add_option("--jobs", verify.jobs, "Worker threads")->envname("FMZV_JOBS")->check(CLI::Range(1u, 4096u));
  v->add_flag("--resume", verify.out.resume, "Continue an interrupted sweep in --out");
  add_output_options(*v, verify.out);

  ZSweepArgs zsweep;
  auto* z = app.add_subcommand("zsweep", "Tabulate Z(k) = B_{p-k}/k mod p and hunt for zeros");
  z->add_option("--k", zsweep.k, "Weight k >= 2")->required();
  z->add_option("--primes", zsweep.primes, "Inclusive prime range A..B")->required();
  z->add_option("--jobs", zsweep.jobs, "Worker threads")->envname("FMZV_JOBS")->check(CLI::Range(1u, 4096u));
  z->add_flag("--resume", zsweep.out.resume, "Continue an interrupted sweep in --out");
  add_output_options(*z, zsweep.out);

  SymbolicArgs symbolic;
  auto* s = app.add_subcommand("symbolic", "Exact checks of the generating-series machinery");
  s->add_option("suite", symbolic.suite, "gauss, anl, phi0 or hypcong")->required();
  s->add_option("--mmax", symbolic.m_max, "gauss: largest m")->capture_default_str();
  s->add_option("--pairs", symbolic.pairs, "gauss: number of (b, c) pairs")->capture_default_str();
  s->add_option("--nmax", symbolic.n_max, "anl, phi0: largest n (defaults 6 and 5)");
  s->add_option("--kmax", symbolic.k_max, "phi0: largest weight")->capture_default_str();
  s->add_option("--prime", symbolic.prime, "hypcong: prime")->capture_default_str();
  s->add_option("--samples", symbolic.samples, "hypcong: samples per l")->capture_default_str();
  s->add_option("--seed", symbolic.seed, "Seed for gauss and hypcong")->capture_default_str();
  s->add_option("--l", symbolic.l, "hypcong: a single l instead of 1..p-2");
  s->add_option("--jobs", symbolic.jobs, "Worker threads (phi0, hypcong)")
      ->envname("FMZV_JOBS")
      ->check(CLI::Range(1u, 4096u));
  add_output_options(*s, symbolic.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*c)
      return cmd_compute(compute);
    if (*v)
      return cmd_verify(verify);
    if (*z)
      return cmd_zsweep(zsweep);
    return cmd_symbolic(symbolic);
  } catch (const std::exception& e) {
    fmt::print(stderr, "fmzv: {}\n", e.what());
    return kUsageError;
  }
}
