#include "fmzv/indices.hpp"

#include "fmzv/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fmzv {

namespace {

// A tail of the given weight and height budget can be completed iff every
// part >= 2 fits, i.e. 2h <= w.
bool feasible(unsigned weight, int height) {
  return height < 0 || 2 * static_cast<unsigned>(height) <= weight;
}

int consume(int height, unsigned part) {
  if (height < 0)
    return -1;
  return height - (part >= 2 ? 1 : 0);
}

bool can_place(unsigned weight, int height, unsigned part) {
  if (part > weight)
    return false;
  const int next = consume(height, part);
  if (height >= 0 && next < 0)
    return false;
  return feasible(weight - part, next);
}

} // namespace

Index::Index(std::initializer_list<unsigned> parts) : Index(std::vector<unsigned>(parts)) {}

Index::Index(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
    throw std::invalid_argument("index parts must be positive");
}

unsigned Index::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

unsigned Index::height() const noexcept {
  return static_cast<unsigned>(
      std::count_if(parts_.begin(), parts_.end(), [](unsigned k) { return k >= 2; }));
}

Index Index::reversed() const {
  Index out = *this;
  std::reverse(out.parts_.begin(), out.parts_.end());
  return out;
}

Index Index::slice(std::size_t first, std::size_t last) const {
  Index out;
  out.parts_.assign(parts_.begin() + static_cast<std::ptrdiff_t>(first),
                    parts_.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

std::string Index::to_string() const { return fmt::format("{}", fmt::join(parts_, ",")); }

Index Index::parse(std::string_view text) {
  Index out;
  if (text.empty())
    return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    unsigned value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size() || value == 0 ||
        field.front() == '+')
      throw ParseError(fmt::format("invalid index \"{}\": expected comma-separated positive integers", text));
    out.parts_.push_back(value);
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

IndexStats stats(const Index& ix) { return {ix.weight(), ix.depth(), ix.height()}; }

Index reverse(const Index& ix) { return ix.reversed(); }

IndexStream::IndexStream(unsigned weight, std::optional<unsigned> height, unsigned min_first)
    : weight_(weight), height_(height ? static_cast<int>(*height) : -1),
      min_first_(std::max(min_first, 1u)) {}

// Appends the lexicographically smallest completion of (weight, height)
// starting at position `pos`.
bool IndexStream::fill(std::size_t pos, unsigned weight, int height) {
  while (weight > 0) {
    unsigned x = lower_bound(pos);
    while (x <= weight && !can_place(weight, height, x))
      ++x;
    if (x > weight)
      return false;
    parts_.push_back(x);
    weight -= x;
    height = consume(height, x);
    ++pos;
  }
  return true;
}

bool IndexStream::advance() {
  // Remaining weight/height budgets before each position.
  std::vector<unsigned> rem_w(parts_.size());
  std::vector<int> rem_h(parts_.size());
  unsigned w = weight_;
  int h = height_;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    rem_w[i] = w;
    rem_h[i] = h;
    w -= parts_[i];
    h = consume(h, parts_[i]);
  }
  for (std::size_t i = parts_.size(); i-- > 0;) {
    for (unsigned x = parts_[i] + 1; x <= rem_w[i]; ++x) {
      if (!can_place(rem_w[i], rem_h[i], x))
        continue;
      parts_.resize(i);
      parts_.push_back(x);
      return fill(i + 1, rem_w[i] - x, consume(rem_h[i], x));
    }
  }
  return false;
}

std::optional<Index> IndexStream::next() {
  if (done_)
    return std::nullopt;
  bool ok;
  if (!started_) {
    started_ = true;
    ok = feasible(weight_, height_) && fill(0, weight_, height_);
  } else {
    ok = advance();
  }
  if (!ok) {
    done_ = true;
    return std::nullopt;
  }
  return Index(parts_);
}

namespace {

std::vector<Index> drain(IndexStream stream) {
  std::vector<Index> out;
  while (auto ix = stream.next())
    out.push_back(std::move(*ix));
  return out;
}

} // namespace

std::vector<Index> enumerate_I0(unsigned k, unsigned s) {
  if (k == 0 || s == 0 || k < 2 * s)
    return {};
  return drain(IndexStream(k, s, 2));
}

std::vector<Index> enumerate_I(unsigned k, unsigned s) { return drain(IndexStream(k, s, 1)); }

std::vector<Index> enumerate_compositions(unsigned k) {
  return drain(IndexStream(k, std::nullopt, 1));
}

} // namespace fmzv
