#pragma once

#include <stdexcept>
#include <string>

namespace tractlab {

// Root of every error raised by the library. Subclasses carry no extra state;
// the class itself names the failed precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct SearchFailed : Error { using Error::Error; };
struct NewtonDiverged : Error { using Error::Error; };
struct ContinuationError : Error { using Error::Error; };
struct AddressUndefined : Error { using Error::Error; };
struct AddressMismatch : Error { using Error::Error; };
struct PullbackLeftDomain : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct OrbitLeftJQ : Error { using Error::Error; };
struct DepthExceeded : Error { using Error::Error; };
struct CorrespondenceGap : Error { using Error::Error; };
struct SetupInvalid : Error { using Error::Error; };
struct HorizonError : Error { using Error::Error; };
struct CertificateMissing : Error { using Error::Error; };
struct CertificateFailed : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace tractlab
