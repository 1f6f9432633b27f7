#pragma once

#include <stdexcept>
#include <string>

namespace nilform {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error { public: using Error::Error; };
class NotNilpotent : public Error { public: using Error::Error; };
class SingularTransform : public Error { public: using Error::Error; };
class NotAnIdeal : public Error { public: using Error::Error; };
class VectorInDerivedAlgebra : public Error { public: using Error::Error; };
class InvalidDimension : public Error { public: using Error::Error; };
class MissingParameter : public Error { public: using Error::Error; };
class UnknownFamily : public Error { public: using Error::Error; };
class FormatError : public Error { public: using Error::Error; };
class InvalidParameter : public Error { public: using Error::Error; };

}  // namespace nilform
