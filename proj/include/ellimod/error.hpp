#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellimod {

// Stable error codes. The CLI reports these verbatim, so only append.
enum class ErrorCode {
  InvalidRootSystem,
  NotSimplyLaced,
  RootNotInSystem,
  MismatchedSystem,
  SubsetNotClosed,
  WrongSystemType,
  MalformedInput,
  RankMismatch,
  DeterminantNotTrivial,
  OddBlockAtTwoTorsion,
  RepeatedTwist,
  UnpairedSummand,
  MissingCompanionLine,
  MissingOddBlock,
  NonLiftable,
  ParityViolation,
  OutsideShape,
  DegreeZeroCohomology,
  InvalidParameter,
  ExcludedType,
  OrbitBoundExceeded,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ellimod
