#include "zkmatch/mimc.hpp"

#include <bit>
#include <numeric>

#include "zkmatch/digest.hpp"

namespace zkmatch {

namespace {

thread_local std::uint64_t tl_compress_count = 0;

bool valid_exponent(std::uint64_t e, std::uint64_t modulus) {
    return e >= 3 && (e & 1) == 1 && std::gcd(e, modulus - 1) == 1;
}

std::uint64_t smallest_valid_exponent(std::uint64_t modulus) {
    for (std::uint64_t e = 3;; e += 2) {
        if (is_prime_u64(e) && valid_exponent(e, modulus)) return e;
    }
}

// ceil(bits / log2(e)) without floating point: smallest k with e^k >= 2^bits.
std::size_t min_rounds(std::uint32_t bits, std::uint64_t e) {
    using u128 = unsigned __int128;
    u128 target = bits >= 128 ? ~static_cast<u128>(0) : (static_cast<u128>(1) << bits);
    u128 acc = 1;
    std::size_t k = 0;
    while (acc < target) {
        acc *= e;
        ++k;
    }
    return k;
}

} // namespace

std::vector<FieldElement> derive_round_constants(const FieldParams& field,
                                                 std::string_view seed, std::size_t rounds) {
    std::vector<FieldElement> constants;
    constants.reserve(rounds);
    for (std::size_t i = 0; i < rounds; ++i) {
        std::string material(seed);
        material += be64_bytes(i);
        constants.push_back(field_from_digest(sha256(material), field));
    }
    return constants;
}

MimcParams MimcParams::create(const FieldParams& field, std::string_view seed) {
    std::uint64_t e = smallest_valid_exponent(field.modulus);
    std::size_t rounds = 2 * min_rounds(field.bits(), e);
    MimcParams params = create_custom(field, e, rounds, seed);

    // Avoid a trivial fixed point at the all-zero input.
    std::uint64_t rotation = 0;
    while (mimc_permute(FieldElement(0, field), FieldElement(0, field), params).is_zero()) {
        params.seed = std::string(seed) + "-" + std::to_string(rotation++);
        params.round_constants = derive_round_constants(field, params.seed, rounds);
    }
    return params;
}

MimcParams MimcParams::create_custom(const FieldParams& field, std::uint64_t exponent,
                                     std::size_t rounds, std::string_view seed) {
    if (!valid_exponent(exponent, field.modulus)) {
        throw ConfigError("mimc: exponent " + std::to_string(exponent) +
                          " must be odd, >= 3 and coprime to p-1");
    }
    if (rounds == 0) {
        throw ConfigError("mimc: round count must be positive");
    }
    MimcParams params;
    params.field = field;
    params.exponent = exponent;
    params.rounds = rounds;
    params.seed = std::string(seed);
    params.round_constants = derive_round_constants(field, params.seed, rounds);
    return params;
}

std::string MimcParams::fingerprint() const {
    std::string material = "mimc|" + std::to_string(field.modulus) + "|" +
                           std::to_string(exponent) + "|" + std::to_string(rounds) + "|" + seed;
    return sha256_hex(material);
}

std::uint32_t MimcParams::muls_per_round() const {
    std::uint32_t bits = 64 - static_cast<std::uint32_t>(std::countl_zero(exponent));
    std::uint32_t ones = static_cast<std::uint32_t>(std::popcount(exponent));
    return (bits - 1) + (ones - 1);  // square-and-multiply chain length
}

FieldElement mimc_permute(FieldElement x, FieldElement key, const MimcParams& params) {
    for (const FieldElement& c : params.round_constants) {
        x = (x + key + c).pow(params.exponent);
    }
    return x + key;
}

FieldElement compress(FieldElement left, FieldElement right, const MimcParams& params) {
    ++tl_compress_count;
    return mimc_permute(left, right, params) + left + right;
}

FieldElement hash_bytes(std::string_view data, const MimcParams& params) {
    FieldElement state(data.size() % params.field.modulus, params.field);
    for (char ch : data) {
        FieldElement byte(static_cast<std::uint8_t>(ch), params.field);
        state = compress(state, byte, params);
    }
    return state;
}

std::uint64_t compress_call_count() { return tl_compress_count; }
void reset_compress_call_count() { tl_compress_count = 0; }

} // namespace zkmatch
