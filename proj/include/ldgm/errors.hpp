#pragma once

#include <stdexcept>
#include <string>

namespace ldgm {

/// Non-conforming operand shapes (matrix products, sums, vector lengths).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter set violates one of its structural constraints.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or truncated serialized object.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Key generation hit its retry cap.
class KeygenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Signing failed: counter space exhausted or codeword redraw cap reached.
class SigningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ldgm
