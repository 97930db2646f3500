#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidBase : public Error { public: using Error::Error; };
class BaseMismatch : public Error { public: using Error::Error; };
class DivisionByZero : public Error { public: using Error::Error; };
class NonInvertible : public Error { public: using Error::Error; };
class OutOfRange : public Error { public: using Error::Error; };
class NotPrimePower : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class InvalidPosition : public Error { public: using Error::Error; };
class LimitExceeded : public Error { public: using Error::Error; };
class NotDistanceRegular : public Error { public: using Error::Error; };
class AxiomViolation : public Error { public: using Error::Error; };
class NonRationalEigenvalue : public Error { public: using Error::Error; };
class SingularP : public Error { public: using Error::Error; };
class InconsistentExpansion : public Error { public: using Error::Error; };
class UnsupportedScheme : public Error { public: using Error::Error; };
class UnsupportedScale : public Error { public: using Error::Error; };
class NotSymplectic : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };

} // namespace qlab
