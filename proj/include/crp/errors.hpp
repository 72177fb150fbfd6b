#pragma once

#include <stdexcept>
#include <string>

namespace crp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A move that violates restricted-CRP legality (wrong container, full
/// destination, non-topmost retrieve, relocating a non-blocking container).
struct IllegalMove : Error {
    using Error::Error;
};

/// Relocation requested but the target container is already on top (the
/// caller must retrieve instead), or the bay is empty.
struct NotBlocked : Error {
    using Error::Error;
};

/// Malformed instance file; message carries line/field context.
struct ParseError : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

/// Node budget below 1.
struct BudgetZero : InvalidParams {
    using InvalidParams::InvalidParams;
};

/// Enumeration would exceed the configured guard.
struct TooLarge : Error {
    using Error::Error;
};

/// A cap on tree nodes was hit where the operation requires completion.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// Reached a state that the problem invariants rule out (e.g. a blocking
/// container with no legal destination on an adversarial near-full bay).
struct InternalError : Error {
    using Error::Error;
};

}  // namespace crp
