#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zkmatch/field.hpp"

namespace zkmatch {

/// Parameters of the MiMC permutation x -> (x + key + c_i)^e, iterated over
/// `rounds` rounds with seed-derived round constants.
///
/// Defaults per modulus: e is the smallest odd prime >= 3 coprime to p-1
/// (7 for the default field) and rounds = 2 * ceil(bits(p) / log2(e))
/// (46 for the default field). The seed is rotated by appending a counter
/// in the unlikely case that permute(0, 0) = 0 under the derived constants.
struct MimcParams {
    FieldParams field;
    std::uint64_t exponent = 0;
    std::size_t rounds = 0;
    std::vector<FieldElement> round_constants;
    std::string seed;  // seed actually used, post-rotation

    static constexpr const char* kDefaultSeed = "zkmatch-mimc-v1";

    /// Derived defaults for the given field.
    static MimcParams create(const FieldParams& field, std::string_view seed = kDefaultSeed);

    /// Explicit exponent/rounds; throws ConfigError unless e is odd, >= 3 and
    /// coprime to p-1.
    static MimcParams create_custom(const FieldParams& field, std::uint64_t exponent,
                                    std::size_t rounds, std::string_view seed);

    /// Digest of modulus || e || rounds || seed; embedded in commitment file
    /// headers so verifiers reject artifacts from other parameterizations.
    std::string fingerprint() const;

    /// Multiplication count of the square-and-multiply chain for x^e;
    /// 4 for e = 7. The arithmetization model charges this per round.
    std::uint32_t muls_per_round() const;
};

/// Round constant i = SHA-256(seed || be64(i)) reduced mod p.
std::vector<FieldElement> derive_round_constants(const FieldParams& field,
                                                 std::string_view seed, std::size_t rounds);

/// The keyed MiMC permutation; bijective in x for any fixed key.
FieldElement mimc_permute(FieldElement x, FieldElement key, const MimcParams& params);

/// Two-to-one compression in Miyaguchi-Preneel form:
/// permute(left, key=right) + left + right.
FieldElement compress(FieldElement left, FieldElement right, const MimcParams& params);

/// Byte-sequence hash: state starts at len(data) mod p and absorbs one byte
/// per compress call. The length prefix separates inputs of different length.
FieldElement hash_bytes(std::string_view data, const MimcParams& params);

/// Thread-local count of compress() invocations (Merkle cost accounting).
std::uint64_t compress_call_count();
void reset_compress_call_count();

} // namespace zkmatch
