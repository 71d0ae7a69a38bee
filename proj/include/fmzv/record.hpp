#pragma once

#include "fmzv/modfield.hpp"

#include <optional>
#include <string>

namespace fmzv {

/// Outcome of one check. Values are kept as decimal strings so that residues
/// and exact rationals share one representation. `pass` is true iff the
/// record is not skipped and lhs == rhs, except for Z(k) sweep rows whose
/// cross-check does not apply: those pass with an empty rhs.
struct VerificationRecord {
  std::string check;
  std::optional<unsigned> k;
  std::optional<unsigned> s;
  std::optional<std::string> index;
  u64 p = 0; // 0 for checks that do not involve a prime
  std::string lhs;
  std::string rhs;
  bool pass = false;
  bool skipped = false;
  std::string reason; // why the record was skipped
  std::string detail; // extra parameters (sample counts, seeds, ...)

  static VerificationRecord compare(std::string check, u64 p, std::string lhs, std::string rhs);
  static VerificationRecord compare(std::string check, const Residue& lhs, const Residue& rhs);
  static VerificationRecord skip(std::string check, u64 p, std::string reason);

  VerificationRecord& with_ks(std::optional<unsigned> k_, std::optional<unsigned> s_) {
    k = k_;
    s = s_;
    return *this;
  }
  VerificationRecord& with_index(std::string ix) {
    index = std::move(ix);
    return *this;
  }
  VerificationRecord& with_detail(std::string d) {
    detail = std::move(d);
    return *this;
  }

  bool failed() const noexcept { return !skipped && !pass; }
};

} // namespace fmzv
