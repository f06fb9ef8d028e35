#pragma once

#include <stdexcept>
#include <string>

namespace onepw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wrong modulus, malformed hex, inverse of zero.
struct FieldError : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

// Bad registration inputs, mode mismatch, aux-redraw cap hit.
struct SchemeError : Error {
    using Error::Error;
};

// Vault file / record (de)serialization problems.
struct VaultError : Error {
    using Error::Error;
};

}  // namespace onepw
