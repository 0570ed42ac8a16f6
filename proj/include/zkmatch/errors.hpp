#pragma once

#include <stdexcept>
#include <string>

namespace zkmatch {

/// Mismatched or invalid runtime parameters (wrong modulus, bad MiMC exponent,
/// artifact produced under a different parameter fingerprint).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed caller input: bad dimensions, empty pattern, unreadable file,
/// ill-formed artifact. Distinct from a verification returning false.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested operation not representable under the configured field
/// (e.g. a root-of-unity order exceeding the field's two-adicity).
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

/// Commitment construction impossible (empty legal-pattern set).
struct BuildError : std::runtime_error {
    explicit BuildError(const std::string& what) : std::runtime_error(what) {}
};

/// Membership proof requested for a pattern outside the committed set.
struct NotAMemberError : std::runtime_error {
    explicit NotAMemberError(const std::string& what) : std::runtime_error(what) {}
};

/// Containment certificate requested for a fingerprint that is not a root
/// of the window polynomial.
struct NotContainedError : std::runtime_error {
    explicit NotContainedError(const std::string& what) : std::runtime_error(what) {}
};

/// Absence certificate requested for a fingerprint that is a root of the
/// window polynomial.
struct IsContainedError : std::runtime_error {
    explicit IsContainedError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zkmatch
