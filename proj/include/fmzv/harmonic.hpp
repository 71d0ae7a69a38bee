#pragma once

/**
 * @file harmonic.hpp
 * @brief Truncated multiple harmonic sums modulo p.
 *
 * For an index k = (k_1, ..., k_r) and a prime p:
 *
 *   strict:  sum over p > m_1 >  m_2 >  ... > m_r > 0  of  prod m_i^{-k_i}
 *   star:    sum over p > m_1 >= m_2 >= ... >= m_r > 0 of  prod m_i^{-k_i}
 *
 * These are the p-components of the finite multiple zeta values. The empty
 * index evaluates to 1 in both variants and inadmissible indices are
 * accepted everywhere.
 */

#include "fmzv/indices.hpp"
#include "fmzv/modfield.hpp"

#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fmzv {

/// m^{-j} mod p for 1 <= m < p and 0 <= j <= max_exponent.
class InversePowerTable {
public:
  InversePowerTable(const PrimeCtx& ctx, unsigned max_exponent);

  u64 at(u64 m, unsigned j) const noexcept { return data_[(m - 1) * stride_ + j]; }
  unsigned max_exponent() const noexcept { return max_exponent_; }
  u64 prime() const noexcept { return p_; }

private:
  u64 p_;
  unsigned max_exponent_;
  std::size_t stride_;
  std::vector<u64> data_;
};

Residue mhs_strict(const Index& ix, const PrimeCtx& ctx);
Residue mhs_star(const Index& ix, const PrimeCtx& ctx);
/// Variants reusing a precomputed table; the table must cover max(ix).
Residue mhs_strict(const Index& ix, const PrimeCtx& ctx, const InversePowerTable& table);
Residue mhs_star(const Index& ix, const PrimeCtx& ctx, const InversePowerTable& table);

/// S*_{k,s}: sum of star values over I_0(k, s). Requires p > k + 1.
Residue family_sum_star(unsigned k, unsigned s, const PrimeCtx& ctx);
/// S_{k,s}: sum of (-1)^depth times strict values over I_0(k, s). Requires p > k + 1.
Residue family_sum_alt_strict(unsigned k, unsigned s, const PrimeCtx& ctx);
/// Sum of star values over I(k, s) (first part unrestricted); (0, 0) gives 1.
Residue family_sum_star_all(unsigned k, unsigned s, const PrimeCtx& ctx);

struct FamilySums {
  Residue alt_strict; // S_{k,s}
  Residue star;       // S*_{k,s}
};

/// S_{k,s} and S*_{k,s} for every 2 <= k <= k_max, 1 <= s <= k/2, from one
/// dynamic-programming pass over m = 1..p-1.
class FamilyTable {
public:
  FamilyTable(unsigned k_max, std::vector<FamilySums> cells) : k_max_(k_max), cells_(std::move(cells)) {}

  unsigned k_max() const noexcept { return k_max_; }
  /// Throws std::out_of_range outside 2 <= k <= k_max, 1 <= s <= k/2.
  const FamilySums& at(unsigned k, unsigned s) const;

private:
  friend FamilyTable family_sums_dp(unsigned, const PrimeCtx&);
  static std::size_t slot(unsigned k, unsigned s, unsigned k_max);

  unsigned k_max_;
  std::vector<FamilySums> cells_;
};

FamilyTable family_sums_dp(unsigned k_max, const PrimeCtx& ctx);

/// A finite window onto an element of the ring A = (prod Z/p) / (sum Z/p):
/// one residue per prime, keyed by prime.
class AWindow {
public:
  AWindow() = default;
  explicit AWindow(std::string meta) : meta_(std::move(meta)) {}

  /// Throws std::invalid_argument if the prime is already present.
  void insert(const Residue& r);

  const std::map<u64, Residue>& entries() const noexcept { return entries_; }
  const std::string& meta() const noexcept { return meta_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Equality on the common primes only; vacuously true when disjoint.
  bool agrees_with(const AWindow& other) const;

private:
  std::map<u64, Residue> entries_;
  std::string meta_;
};

/// Evaluates `component` at each prime and collects the residues.
AWindow make_window(std::string meta, std::span<const u64> primes,
                    const std::function<Residue(const PrimeCtx&)>& component);

} // namespace fmzv
