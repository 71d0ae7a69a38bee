#include "fmzv/bernoulli.hpp"

#include "fmzv/errors.hpp"

#include <fmt/format.h>

namespace fmzv {

using detail::add_mod;
using detail::mul_mod;
using detail::sub_mod;

BernoulliTable::BernoulliTable(const PrimeCtx& ctx, u64 n_max) : ctx_(ctx) {
  const u64 p = ctx.prime();
  if (n_max + 3 > p)
    throw RangeError(fmt::format("Bernoulli table mod {} only reaches n = p - 3", p));
  values_.assign(n_max + 1, 0);
  values_[0] = 1;
  if (n_max >= 1)
    values_[1] = (p - 1) / 2;

  // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j = -m! sum_{j<m} (B_j / j!) / (m+1-j)!
  // Only j = 0, 1 and even j contribute. scaled[j] = B_j / j!.
  std::vector<u64> scaled(n_max + 1, 0);
  scaled[0] = 1;
  if (n_max >= 1)
    scaled[1] = mul_mod(values_[1], ctx.inv_factorial(1), p);
  const bool lazy = p < (u64{1} << 32);
  for (u64 m = 2; m <= n_max; m += 2) {
    u64 sum;
    if (lazy) {
      // Products are below 2^64; p/2 of them fit in 128 bits.
      unsigned __int128 acc = static_cast<unsigned __int128>(scaled[0]) * ctx.inv_factorial(m + 1) +
                              static_cast<unsigned __int128>(scaled[1]) * ctx.inv_factorial(m);
      for (u64 j = 2; j < m; j += 2)
        acc += static_cast<unsigned __int128>(scaled[j] * ctx.inv_factorial(m + 1 - j));
      sum = static_cast<u64>(acc % p);
    } else {
      sum = add_mod(mul_mod(scaled[0], ctx.inv_factorial(m + 1), p),
                    mul_mod(scaled[1], ctx.inv_factorial(m), p), p);
      for (u64 j = 2; j < m; j += 2)
        sum = add_mod(sum, mul_mod(scaled[j], ctx.inv_factorial(m + 1 - j), p), p);
    }
    values_[m] = sub_mod(0, mul_mod(ctx.factorial(m), sum, p), p);
    scaled[m] = mul_mod(values_[m], ctx.inv_factorial(m), p);
  }
}

Residue BernoulliTable::at(u64 n) const {
  const u64 p = ctx_.prime();
  if (n > 0 && n % (p - 1) == 0)
    throw VonStaudtPole(fmt::format("B_{} has p = {} in its denominator", n, p));
  if (n >= 3 && n % 2 == 1)
    return Residue(0, ctx_);
  if (n > n_max())
    throw RangeError(fmt::format("B_{} is beyond the table (n_max = {})", n, n_max()));
  return Residue(values_[n], ctx_);
}

Residue bernoulli_mod_recurrence(u64 n, const PrimeCtx& ctx) {
  const u64 p = ctx.prime();
  if (n > 0 && n % (p - 1) == 0)
    throw VonStaudtPole(fmt::format("B_{} has p = {} in its denominator", n, p));
  if (n + 3 > p)
    throw RangeError(fmt::format("B_{} mod {} is outside 0 <= n <= p - 3", n, p));
  return BernoulliTable(ctx, n).at(n);
}

Residue alternating_power_sum(unsigned k, const PrimeCtx& ctx) {
  const u64 p = ctx.prime();
  const auto inv = inverse_table(ctx);
  u64 acc = 0;
  for (u64 l = 1; l < p; ++l) {
    const u64 term = detail::pow_mod(inv[l], k, p);
    acc = (l % 2 == 1) ? add_mod(acc, term, p) : sub_mod(acc, term, p);
  }
  return Residue(acc, ctx);
}

namespace {

void require_z_range(unsigned k, u64 p) {
  if (k == 0 || p <= static_cast<u64>(k) + 1)
    throw RangeError(fmt::format("Z({}) mod {} requires 1 <= k < p - 1", k, p));
}

// 2 (1 - 2^{1-k}) mod p
Residue euler_factor(unsigned k, const PrimeCtx& ctx) {
  const Residue two(2, ctx);
  const Residue half = mod_inv(two);
  return two * (Residue(1, ctx) - half.pow(k - 1));
}

} // namespace

Residue z_residue(unsigned k, const BernoulliTable& table) {
  const PrimeCtx& ctx = table.ctx();
  require_z_range(k, ctx.prime());
  return table.at(ctx.prime() - k) * mod_inv(Residue(k, ctx));
}

Residue z_residue(unsigned k, const PrimeCtx& ctx) {
  require_z_range(k, ctx.prime());
  const u64 n = ctx.prime() - k;
  // Odd n >= 3 vanish without building anything.
  const BernoulliTable table(ctx, n % 2 == 1 && n >= 3 ? 0 : n);
  return z_residue(k, table);
}

std::optional<Residue> z_residue_from_alternating_sum(unsigned k, const PrimeCtx& ctx) {
  const Residue factor = euler_factor(k, ctx);
  if (factor.is_zero())
    return std::nullopt;
  return alternating_power_sum(k, ctx) * mod_inv(factor);
}

VerificationRecord check_euler_congruence(unsigned k, const PrimeCtx& ctx) {
  const u64 p = ctx.prime();
  if (k < 2 || static_cast<u64>(k) + 3 > p)
    throw RangeError(fmt::format("Euler congruence check needs 2 <= k <= p - 3 (k = {}, p = {})", k, p));
  const Residue lhs = alternating_power_sum(k, ctx);
  const Residue rhs = euler_factor(k, ctx) * z_residue(k, ctx);
  return VerificationRecord::compare("euler", lhs, rhs).with_ks(k, std::nullopt);
}

ZSweepRow z_sweep_row(unsigned k, u64 p) {
  ZSweepRow row;
  row.p = p;
  if (p <= static_cast<u64>(k) + 1) {
    row.reason = fmt::format("p <= k + 1");
    return row;
  }
  const PrimeCtx ctx(p);
  row.residue = z_residue(k, ctx);
  row.zero = row.residue->is_zero();
  row.alternate = z_residue_from_alternating_sum(k, ctx);
  if (row.alternate)
    row.cross = *row.alternate == *row.residue ? CrossCheck::pass : CrossCheck::fail;
  return row;
}

std::vector<ZSweepRow> z_sweep(unsigned k, std::span<const u64> primes) {
  std::vector<ZSweepRow> rows;
  rows.reserve(primes.size());
  for (u64 p : primes)
    rows.push_back(z_sweep_row(k, p));
  return rows;
}

VerificationRecord to_record(unsigned k, const ZSweepRow& row) {
  if (row.skipped())
    return VerificationRecord::skip("zsweep", row.p, row.reason).with_ks(k, std::nullopt);
  VerificationRecord r;
  r.check = "zsweep";
  r.k = k;
  r.p = row.p;
  r.lhs = std::to_string(row.residue->value());
  r.rhs = row.alternate ? std::to_string(row.alternate->value()) : std::string();
  r.pass = row.cross != CrossCheck::fail;
  r.detail = fmt::format("zero={} crosscheck={}", row.zero ? "yes" : "no",
                         row.cross == CrossCheck::pass   ? "pass"
                         : row.cross == CrossCheck::fail ? "fail"
                                                         : "n/a");
  return r;
}

} // namespace fmzv
