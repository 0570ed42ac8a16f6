#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zkmatch/errors.hpp"

namespace zkmatch {

/// Parameters of the prime field Z_q used by every hash, commitment, and
/// polynomial in the toolkit.
///
/// The default modulus is 2^64 - 2^32 + 1: rolling-hash values embed directly
/// as polynomial coefficients and (q-1) carries a 2^32 factor, so NTT lengths
/// up to 2^32 exist. Small primes (97, 1e9+7, ...) are accepted for testing;
/// polynomial multiplication silently falls back to schoolbook when the
/// two-adicity cannot cover the transform size.
struct FieldParams {
    std::uint64_t modulus = 0;
    std::uint32_t two_adicity = 0;  // max k with 2^k | modulus-1
    std::uint64_t generator = 0;    // quadratic nonresidue; powers yield NTT roots

    FieldParams() = default;
    explicit FieldParams(std::uint64_t modulus);

    /// Default 64-bit field, 2^64 - 2^32 + 1 (two_adicity 32, generator 7).
    static const FieldParams& default_field();

    /// Cached lookup by modulus. Validates primality on first use.
    static const FieldParams& for_modulus(std::uint64_t modulus);

    std::uint32_t bits() const;       // bit length of the modulus
    std::uint32_t hex_width() const;  // ceil(bits/4), canonical hex width

    bool operator==(const FieldParams& o) const { return modulus == o.modulus; }
};

/// Deterministic 64-bit primality test (Miller-Rabin over a fixed base set).
bool is_prime_u64(std::uint64_t n);

/// A fully reduced residue mod a runtime-configured prime. Immutable value
/// semantics; mixing elements of different moduli throws ConfigError.
class FieldElement {
public:
    FieldElement() = default;  // null element (modulus 0); unusable in arithmetic
    FieldElement(std::uint64_t value, const FieldParams& params)
        : value_(value % params.modulus), modulus_(params.modulus) {}
    static FieldElement from_raw(std::uint64_t reduced_value, std::uint64_t modulus) {
        FieldElement e;
        e.value_ = reduced_value % modulus;
        e.modulus_ = modulus;
        return e;
    }

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    FieldElement inv() const;

    /// Square-and-multiply exponentiation, exponent taken as a plain integer.
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& o) const {
        return value_ == o.value_ && modulus_ == o.modulus_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 0;

    void check_same_field(const FieldElement& o) const;
};

/// Primitive root of unity of the given power-of-two order.
/// result^order = 1 and, for order >= 2, result^(order/2) = -1.
/// Throws UnsupportedError when the order exceeds 2^two_adicity.
FieldElement root_of_unity(const FieldParams& params, std::uint64_t order);

/// Canonical serialization: lowercase hex, fixed width ceil(bits(modulus)/4),
/// big-endian.
std::string to_hex(const FieldElement& e);
FieldElement field_from_hex(std::string_view hex, const FieldParams& params);

/// Thread-local count of field multiplications, used by the operation-count
/// laws (Table-style scaling checks). Additions are never counted.
std::uint64_t field_mul_count();
void reset_field_mul_count();

} // namespace zkmatch
