#pragma once

#include <stdexcept>
#include <string>

namespace pcpl {

struct CodecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SymbolTooLarge : CodecError {
    using CodecError::CodecError;
};

struct TruncatedCodeword : CodecError {
    using CodecError::CodecError;
};

struct InvalidCodeword : CodecError {
    using CodecError::CodecError;
};

struct BadMagic : CodecError {
    using CodecError::CodecError;
};

struct BadVersion : CodecError {
    using CodecError::CodecError;
};

struct TruncatedPayload : CodecError {
    using CodecError::CodecError;
};

struct KraftViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SandwichValidationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pcpl
