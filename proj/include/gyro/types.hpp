#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gyro {

/// Index of an element in a finite gyrogroup of order n, always in [0, n).
using Element = std::uint16_t;

/// Largest order supported anywhere in the library (K6 has order 256).
inline constexpr std::size_t kMaxOrder = 256;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class OrderTooLarge : public Error {
public:
    using Error::Error;
};

class EmptySubset : public Error {
public:
    using Error::Error;
};

class NotASubgyrogroup : public Error {
public:
    using Error::Error;
};

class NotNormal : public Error {
public:
    using Error::Error;
};

class IllDefinedProduct : public Error {
public:
    using Error::Error;
};

/// A claimed theorem failed on concrete data. Never expected; signals a bug.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

}  // namespace gyro
