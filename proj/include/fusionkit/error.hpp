#ifndef FUSIONKIT_ERROR_HPP
#define FUSIONKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fusionkit {

enum class ErrorCode {
  InvalidPermutation = 1,
  OrderBoundExceeded,
  UnknownCatalogName,
  ParseError,
  NotASubgroup,
  ImageNotContained,
  NotSylow,
  NotAPGroup,
  SeedNotInjective,
  NotASubgroupOfP,
  NotAnIsomorphism,
  PrimeMismatch,
  NotStronglyClosed,
  NotASubsystem,
  NotFullyNormalized,
  NotFullyCentralized,
  NotSaturated,
  SaturationValidationFailed,
  NoDecomposition,
  NotCentric,
  TheoremViolation,
  InconsistentPartial,
  PostconditionViolation,
  IndexNotCoprime,
  NotNormalInAutF,
  CoreUndefined,
  PreconditionFailed,
  HostMismatch,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace fusionkit

#endif  // FUSIONKIT_ERROR_HPP
