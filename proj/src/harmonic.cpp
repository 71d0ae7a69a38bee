#include "fmzv/harmonic.hpp"

#include "fmzv/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace fmzv {

using detail::add_mod;
using detail::mul_mod;
using detail::sub_mod;

InversePowerTable::InversePowerTable(const PrimeCtx& ctx, unsigned max_exponent)
    : p_(ctx.prime()), max_exponent_(max_exponent), stride_(max_exponent + 1u) {
  const auto inv = inverse_table(ctx);
  data_.resize((p_ - 1) * stride_);
  for (u64 m = 1; m < p_; ++m) {
    u64* row = &data_[(m - 1) * stride_];
    row[0] = 1;
    for (unsigned j = 1; j <= max_exponent_; ++j)
      row[j] = mul_mod(row[j - 1], inv[m], p_);
  }
}

namespace {

unsigned max_part(const Index& ix) {
  auto parts = ix.parts();
  return parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
}

// Suffix recursion: cum[m] holds the partial sum of the inner levels with
// outermost variable <= m. Each outer level multiplies by m^{-k} and takes
// cum[m-1] (strict) or cum[m] (star).
template <bool Strict>
u64 nested_sum(std::span<const unsigned> parts, const InversePowerTable& table) {
  const u64 p = table.prime();
  if (parts.empty())
    return 1;
  if (Strict && parts.size() >= p)
    return 0;
  std::vector<u64> cum(p, 0);
  const unsigned inner = parts.back();
  for (u64 m = 1; m < p; ++m)
    cum[m] = add_mod(cum[m - 1], table.at(m, inner), p);
  for (std::size_t level = parts.size() - 1; level-- > 0;) {
    const unsigned k = parts[level];
    u64 below = 0; // previous level's cum[m-1]
    for (u64 m = 1; m < p; ++m) {
      const u64 prev_at_m = cum[m];
      const u64 inner_sum = Strict ? below : prev_at_m;
      cum[m] = add_mod(cum[m - 1], mul_mod(table.at(m, k), inner_sum, p), p);
      below = prev_at_m;
    }
  }
  return cum[p - 1];
}

void require_guard(unsigned k, const PrimeCtx& ctx, const char* what) {
  if (ctx.prime() <= static_cast<u64>(k) + 1)
    throw RangeError(fmt::format("{} requires p > k + 1 (k = {}, p = {})", what, k, ctx.prime()));
}

} // namespace

Residue mhs_strict(const Index& ix, const PrimeCtx& ctx, const InversePowerTable& table) {
  if (table.prime() != ctx.prime() || table.max_exponent() < max_part(ix))
    throw std::invalid_argument("inverse power table does not cover the index");
  return Residue(nested_sum<true>(ix.parts(), table), ctx);
}

Residue mhs_star(const Index& ix, const PrimeCtx& ctx, const InversePowerTable& table) {
  if (table.prime() != ctx.prime() || table.max_exponent() < max_part(ix))
    throw std::invalid_argument("inverse power table does not cover the index");
  return Residue(nested_sum<false>(ix.parts(), table), ctx);
}

Residue mhs_strict(const Index& ix, const PrimeCtx& ctx) {
  if (ix.empty())
    return Residue(1, ctx);
  if (ix.depth() >= ctx.prime())
    return Residue(0, ctx);
  return mhs_strict(ix, ctx, InversePowerTable(ctx, max_part(ix)));
}

Residue mhs_star(const Index& ix, const PrimeCtx& ctx) {
  if (ix.empty())
    return Residue(1, ctx);
  return mhs_star(ix, ctx, InversePowerTable(ctx, max_part(ix)));
}

Residue family_sum_star(unsigned k, unsigned s, const PrimeCtx& ctx) {
  require_guard(k, ctx, "family_sum_star");
  const InversePowerTable table(ctx, k);
  Residue acc(0, ctx);
  IndexStream stream(k, s, 2);
  if (k >= 2 * s && s >= 1)
    while (auto ix = stream.next())
      acc += mhs_star(*ix, ctx, table);
  return acc;
}

Residue family_sum_alt_strict(unsigned k, unsigned s, const PrimeCtx& ctx) {
  require_guard(k, ctx, "family_sum_alt_strict");
  const InversePowerTable table(ctx, k);
  Residue acc(0, ctx);
  IndexStream stream(k, s, 2);
  if (k >= 2 * s && s >= 1)
    while (auto ix = stream.next()) {
      const Residue v = mhs_strict(*ix, ctx, table);
      acc += ix->depth() % 2 == 0 ? v : -v;
    }
  return acc;
}

Residue family_sum_star_all(unsigned k, unsigned s, const PrimeCtx& ctx) {
  require_guard(k, ctx, "family_sum_star_all");
  const InversePowerTable table(ctx, std::max(k, 1u));
  Residue acc(0, ctx);
  IndexStream stream(k, s, 1);
  while (auto ix = stream.next())
    acc += mhs_star(*ix, ctx, table);
  return acc;
}

std::size_t FamilyTable::slot(unsigned k, unsigned s, unsigned k_max) {
  return static_cast<std::size_t>(k) * (k_max / 2 + 1) + s;
}

const FamilySums& FamilyTable::at(unsigned k, unsigned s) const {
  if (k < 2 || k > k_max_ || s < 1 || 2 * s > k)
    throw std::out_of_range(fmt::format("no family table entry for (k, s) = ({}, {})", k, s));
  return cells_[slot(k, s, k_max_)];
}

FamilyTable family_sums_dp(unsigned k_max, const PrimeCtx& ctx) {
  require_guard(k_max, ctx, "family_sums_dp");
  const u64 p = ctx.prime();
  const unsigned h_max = k_max / 2;
  const InversePowerTable table(ctx, k_max);

  // acc[w][h][a]: sum over index tails of weight w and height h whose chain
  // values are all <= the current m; a = 1 iff the outermost part is >= 2.
  // The strict accumulator carries the (-1)^depth sign.
  const std::size_t hw = h_max + 1;
  auto at = [&](std::vector<u64>& v, unsigned w, unsigned h, unsigned a) -> u64& {
    return v[(static_cast<std::size_t>(w) * hw + h) * 2 + a];
  };
  const std::size_t cells = (k_max + 1u) * hw * 2;
  std::vector<u64> strict(cells, 0), star(cells, 0), ending_strict(cells), ending_star(cells);

  for (u64 m = 1; m < p; ++m) {
    std::fill(ending_strict.begin(), ending_strict.end(), 0);
    std::fill(ending_star.begin(), ending_star.end(), 0);
    for (unsigned w = 1; w <= k_max; ++w) {
      for (unsigned x = 1; x <= w; ++x) {
        const unsigned dh = x >= 2 ? 1 : 0;
        const unsigned a = dh;
        const u64 weight = table.at(m, x);
        for (unsigned h = dh; h <= h_max && 2 * h <= w; ++h) {
          const unsigned rest_w = w - x, rest_h = h - dh;
          u64 below_strict = 0, below_star = 0;
          if (rest_w == 0) {
            if (rest_h == 0)
              below_strict = below_star = 1;
          } else {
            for (unsigned b = 0; b < 2; ++b) {
              below_strict = add_mod(below_strict, at(strict, rest_w, rest_h, b), p);
              below_star = add_mod(below_star, at(star, rest_w, rest_h, b), p);
              // Non-strict chains may repeat m itself.
              below_star = add_mod(below_star, at(ending_star, rest_w, rest_h, b), p);
            }
          }
          u64& es = at(ending_strict, w, h, a);
          es = sub_mod(es, mul_mod(weight, below_strict, p), p);
          u64& et = at(ending_star, w, h, a);
          et = add_mod(et, mul_mod(weight, below_star, p), p);
        }
      }
    }
    for (std::size_t i = 0; i < cells; ++i) {
      strict[i] = add_mod(strict[i], ending_strict[i], p);
      star[i] = add_mod(star[i], ending_star[i], p);
    }
  }

  std::vector<FamilySums> out(FamilyTable::slot(k_max, h_max, k_max) + 1,
                              FamilySums{Residue(0, ctx), Residue(0, ctx)});
  for (unsigned k = 2; k <= k_max; ++k)
    for (unsigned s = 1; 2 * s <= k; ++s)
      out[FamilyTable::slot(k, s, k_max)] =
          FamilySums{Residue(at(strict, k, s, 1), ctx), Residue(at(star, k, s, 1), ctx)};
  return FamilyTable(k_max, std::move(out));
}

void AWindow::insert(const Residue& r) {
  if (!entries_.emplace(r.modulus(), r).second)
    throw std::invalid_argument(fmt::format("window already has an entry for p = {}", r.modulus()));
}

bool AWindow::agrees_with(const AWindow& other) const {
  for (const auto& [p, r] : entries_) {
    auto it = other.entries_.find(p);
    if (it != other.entries_.end() && !(it->second == r))
      return false;
  }
  return true;
}

AWindow make_window(std::string meta, std::span<const u64> primes,
                    const std::function<Residue(const PrimeCtx&)>& component) {
  AWindow w(std::move(meta));
  for (u64 p : primes)
    w.insert(component(PrimeCtx(p)));
  return w;
}

} // namespace fmzv
