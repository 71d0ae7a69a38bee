#pragma once

#include "fmzv/modfield.hpp"
#include "fmzv/record.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fmzv {

/// B_0, ..., B_{n_max} modulo p from the recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0, with n_max <= p - 3 so every B_n is
/// p-integral. O(n_max^2) to build.
class BernoulliTable {
public:
  BernoulliTable(const PrimeCtx& ctx, u64 n_max);

  /// B_n mod p. Odd n >= 3 give 0 for any n; even n must be <= n_max.
  /// Throws VonStaudtPole when (p-1) | n, n > 0, and RangeError past n_max.
  Residue at(u64 n) const;

  u64 n_max() const noexcept { return values_.size() - 1; }
  const PrimeCtx& ctx() const noexcept { return ctx_; }

private:
  PrimeCtx ctx_;
  std::vector<u64> values_;
};

/// B_n mod p for 0 <= n <= p - 3.
Residue bernoulli_mod_recurrence(u64 n, const PrimeCtx& ctx);

/// sum_{l=1}^{p-1} (-1)^{l-1} l^{-k} mod p.
Residue alternating_power_sum(unsigned k, const PrimeCtx& ctx);

/// Z(k)_p = B_{p-k} / k mod p, from the recurrence. Requires p > k + 1.
Residue z_residue(unsigned k, const PrimeCtx& ctx);
/// Same, reading B_{p-k} from a prebuilt table.
Residue z_residue(unsigned k, const BernoulliTable& table);

/// Z(k)_p recovered from the alternating sum as alt(k) / (2 (1 - 2^{1-k})).
/// nullopt when 2^{k-1} = 1 (mod p), where the factor vanishes.
std::optional<Residue> z_residue_from_alternating_sum(unsigned k, const PrimeCtx& ctx);

/// lhs = alternating_power_sum(k), rhs = 2 (1 - 2^{1-k}) Z(k). Requires
/// 2 <= k <= p - 3.
VerificationRecord check_euler_congruence(unsigned k, const PrimeCtx& ctx);

enum class CrossCheck { pass, fail, not_applicable };

struct ZSweepRow {
  u64 p = 0;
  std::optional<Residue> residue; // nullopt when skipped
  std::optional<Residue> alternate; // alternating-sum route, when applicable
  bool zero = false;
  CrossCheck cross = CrossCheck::not_applicable;
  std::string reason; // non-empty iff skipped

  bool skipped() const noexcept { return !residue.has_value(); }
};

/// One row of the Z(k) zero hunt. Primes p <= k + 1 are skipped.
ZSweepRow z_sweep_row(unsigned k, u64 p);
std::vector<ZSweepRow> z_sweep(unsigned k, std::span<const u64> primes);

/// Record form of a sweep row: lhs is the recurrence value, rhs the
/// alternating-sum value ("" when not applicable).
VerificationRecord to_record(unsigned k, const ZSweepRow& row);

} // namespace fmzv
