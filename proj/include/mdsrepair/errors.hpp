#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mdsrepair {

// Base error carrying a stable machine-readable kind; the CLI maps kinds to
// the error record it prints on exit.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define MDSREPAIR_ERROR(Name, kind_str)                                 \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(kind_str, what) {}   \
  }

MDSREPAIR_ERROR(CompositeModulus, "composite_modulus");
MDSREPAIR_ERROR(DivisionByZero, "division_by_zero");
MDSREPAIR_ERROR(NotABasis, "not_a_basis");
MDSREPAIR_ERROR(InvalidModulus, "invalid_modulus");
MDSREPAIR_ERROR(OutOfRange, "out_of_range");
MDSREPAIR_ERROR(BadDistance, "bad_distance");
MDSREPAIR_ERROR(NotConstant, "not_constant");
MDSREPAIR_ERROR(DegenerateParams, "degenerate_params");
MDSREPAIR_ERROR(CapExceeded, "cap_exceeded");
MDSREPAIR_ERROR(LengthMismatch, "length_mismatch");
MDSREPAIR_ERROR(BasisFailure, "basis_failure");
MDSREPAIR_ERROR(TranscriptMismatch, "transcript_mismatch");
MDSREPAIR_ERROR(FieldTooSmall, "field_too_small");
MDSREPAIR_ERROR(ShapeMismatch, "shape_mismatch");
MDSREPAIR_ERROR(SingularSystem, "singular_system");
MDSREPAIR_ERROR(ResponseMismatch, "response_mismatch");
MDSREPAIR_ERROR(ParseError, "parse_error");

#undef MDSREPAIR_ERROR

}  // namespace mdsrepair
