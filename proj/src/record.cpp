#include "fmzv/record.hpp"

#include "fmzv/errors.hpp"

#include <string>

namespace fmzv {

VerificationRecord VerificationRecord::compare(std::string check, u64 p, std::string lhs,
                                               std::string rhs) {
  VerificationRecord r;
  r.check = std::move(check);
  r.p = p;
  r.pass = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

VerificationRecord VerificationRecord::compare(std::string check, const Residue& lhs,
                                               const Residue& rhs) {
  if (lhs.modulus() != rhs.modulus())
    throw PrimeMismatch("record sides live in different prime fields");
  return compare(std::move(check), lhs.modulus(), std::to_string(lhs.value()),
                 std::to_string(rhs.value()));
}

VerificationRecord VerificationRecord::skip(std::string check, u64 p, std::string reason) {
  VerificationRecord r;
  r.check = std::move(check);
  r.p = p;
  r.skipped = true;
  r.reason = std::move(reason);
  return r;
}

} // namespace fmzv
