#pragma once

/**
 * @file verify.hpp
 * @brief Per-prime checks of the weight/height family sums of finite multiple
 * zeta values and the relations used to connect them.
 *
 * Each check returns a VerificationRecord. Primes too small for a check
 * (p <= k + 1, or p <= weight + 1 for index checks) produce skipped
 * records rather than failures: identities in A are blind to any finite set
 * of primes.
 *
 * Check names as they appear in records:
 *   ao        S*_{k,s} = 2 C(k-1, 2s-1) (1 - 2^{1-k}) Z(k)
 *   lm        S_{k,s}  = the same right-hand side
 *   lemma     S*_{k,s} = (-1)^{k-1} S_{k,s}
 *   antipode  sum_i (-1)^i zeta(k_i..k_1) zeta*(k_{i+1}..k_r) = 0
 *   reversal  zeta(reverse k) = (-1)^{wt k} zeta(k)
 *   height    sum of zeta* over I(k, s) = 0
 *   euler     alternating power sum = 2 (1 - 2^{1-k}) Z(k)
 */

#include "fmzv/bernoulli.hpp"
#include "fmzv/indices.hpp"
#include "fmzv/modfield.hpp"
#include "fmzv/record.hpp"

#include <climits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace fmzv {

/// A prime context plus the Bernoulli table, built on first use and shared
/// by every check at this prime.
class PrimeWorkspace {
public:
  explicit PrimeWorkspace(PrimeCtx ctx) : ctx_(std::move(ctx)) {}

  const PrimeCtx& ctx() const noexcept { return ctx_; }
  /// Z(k) mod p for 1 <= k < p - 1.
  Residue z(unsigned k) const;

private:
  PrimeCtx ctx_;
  mutable std::once_flag once_;
  mutable std::unique_ptr<BernoulliTable> table_;
};

/// 2 C(k-1, 2s-1) (1 - 2^{1-k}) Z(k), shared by ao and lm.
Residue family_rhs(unsigned k, unsigned s, const PrimeWorkspace& ws);

VerificationRecord verify_ao(unsigned k, unsigned s, const PrimeWorkspace& ws);
VerificationRecord verify_lm(unsigned k, unsigned s, const PrimeWorkspace& ws);
VerificationRecord verify_lemma(unsigned k, unsigned s, const PrimeWorkspace& ws);
VerificationRecord verify_ao(unsigned k, unsigned s, const PrimeCtx& ctx);
VerificationRecord verify_lm(unsigned k, unsigned s, const PrimeCtx& ctx);
VerificationRecord verify_lemma(unsigned k, unsigned s, const PrimeCtx& ctx);

/// Requires depth >= 1 (std::invalid_argument otherwise).
VerificationRecord verify_antipode(const Index& ix, const PrimeCtx& ctx);
VerificationRecord verify_reversal(const Index& ix, const PrimeCtx& ctx);
/// (k, s) = (0, 0) is rejected with std::invalid_argument; an empty I(k, s)
/// raises InfeasibleFamily.
VerificationRecord verify_height_sum(unsigned k, unsigned s, const PrimeCtx& ctx);

enum class CheckKind { ao, lm, lemma, antipode, reversal, height, euler };

std::string_view check_name(CheckKind kind) noexcept;
std::optional<CheckKind> parse_check(std::string_view name) noexcept;

struct SweepPlan {
  std::vector<CheckKind> checks;
  unsigned k_max = 0; // ao, lm, lemma, height, euler
  unsigned s_min = 0;
  unsigned s_max = UINT_MAX;
  unsigned w_max = 0; // antipode, reversal
  std::vector<u64> primes;
};

/// One (check, parameters, prime) evaluation. Index checks use k = weight and
/// s = height of the index; euler has no s.
struct SweepTask {
  CheckKind check;
  unsigned k = 0;
  std::optional<unsigned> s;
  std::optional<Index> index;
  u64 p = 0;
};

/// All tasks of a plan, sorted by (check name, k, s, index, p).
std::vector<SweepTask> plan_tasks(const SweepPlan& plan);

/// Thread-safe map prime -> workspace.
class WorkspaceCache {
public:
  std::shared_ptr<const PrimeWorkspace> get(u64 p);

private:
  std::mutex mutex_;
  std::map<u64, std::shared_ptr<const PrimeWorkspace>> entries_;
};

/// Evaluates a task. Unexpected exceptions become failed records carrying the
/// message; a sweep never aborts on one task.
VerificationRecord run_task(const SweepTask& task, WorkspaceCache& cache);

/// Evaluates tasks on `jobs` threads; the output is in task order.
std::vector<VerificationRecord> run_tasks(std::span<const SweepTask> tasks, WorkspaceCache& cache,
                                          unsigned jobs);

std::vector<VerificationRecord> verify_range(const SweepPlan& plan, unsigned jobs = 1);

} // namespace fmzv
