#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fmzv {

/// A multi-index (k_1, ..., k_r) of positive integers. The empty index is a
/// valid value with weight, depth and height all 0.
class Index {
public:
  Index() = default;
  Index(std::initializer_list<unsigned> parts);
  /// Throws std::invalid_argument if any part is 0.
  explicit Index(std::vector<unsigned> parts);

  std::span<const unsigned> parts() const noexcept { return parts_; }
  unsigned operator[](std::size_t i) const { return parts_[i]; }

  unsigned weight() const noexcept;
  std::size_t depth() const noexcept { return parts_.size(); }
  /// Number of parts >= 2.
  unsigned height() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  /// First part >= 2. The empty index is not admissible.
  bool admissible() const noexcept { return !parts_.empty() && parts_.front() >= 2; }

  Index reversed() const;
  /// Parts [first, last) as an index.
  Index slice(std::size_t first, std::size_t last) const;

  /// "k1,k2,...,kr"; the empty index renders as "".
  std::string to_string() const;
  /// Inverse of to_string. Throws ParseError on anything else (spaces, signs,
  /// zero parts, empty fields).
  static Index parse(std::string_view text);

  auto operator<=>(const Index&) const = default;
  bool operator==(const Index&) const = default;

private:
  std::vector<unsigned> parts_;
};

struct IndexStats {
  unsigned weight;
  std::size_t depth;
  unsigned height;
  bool operator==(const IndexStats&) const = default;
};

IndexStats stats(const Index& ix);
Index reverse(const Index& ix);

/// Streams the compositions of a fixed weight in lexicographic order,
/// optionally restricted to a height and a minimum first part. Nothing is
/// materialized beyond the current index.
class IndexStream {
public:
  /// `height == nullopt` means any height.
  IndexStream(unsigned weight, std::optional<unsigned> height, unsigned min_first = 1);

  /// The next index, or nullopt once exhausted.
  std::optional<Index> next();

private:
  bool fill(std::size_t pos, unsigned weight, int height);
  bool advance();
  unsigned lower_bound(std::size_t pos) const { return pos == 0 ? min_first_ : 1; }

  unsigned weight_;
  int height_; // -1: unrestricted
  unsigned min_first_;
  std::vector<unsigned> parts_;
  bool started_ = false;
  bool done_ = false;
};

/// I_0(k, s): weight k, height s, first part >= 2. Empty when k < 2s.
std::vector<Index> enumerate_I0(unsigned k, unsigned s);
/// I(k, s): weight k, height s, first part unrestricted. I(0, 0) = {()}.
std::vector<Index> enumerate_I(unsigned k, unsigned s);
/// Every composition of k (all 2^{k-1} of them for k >= 1).
std::vector<Index> enumerate_compositions(unsigned k);

} // namespace fmzv
