#include "zkmatch/field.hpp"

#include <bit>
#include <mutex>
#include <unordered_map>

namespace zkmatch {

namespace {

using u128 = unsigned __int128;

thread_local std::uint64_t tl_mul_count = 0;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Smallest quadratic nonresidue by the Euler criterion. Any nonresidue c has
// c^((p-1)/2^s) of exact multiplicative order 2^s, which is all the NTT needs.
std::uint64_t find_generator(std::uint64_t p) {
    if (p == 2) return 1;
    for (std::uint64_t c = 2; c < p; ++c) {
        if (powmod(c, (p - 1) / 2, p) == p - 1) return c;
    }
    throw ConfigError("field: no quadratic nonresidue found (modulus not prime?)");
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for all 64-bit inputs with this base set.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldParams::FieldParams(std::uint64_t modulus_in) {
    if (!is_prime_u64(modulus_in)) {
        throw ConfigError("field: modulus " + std::to_string(modulus_in) + " is not prime");
    }
    modulus = modulus_in;
    two_adicity = static_cast<std::uint32_t>(std::countr_zero(modulus - 1));
    generator = find_generator(modulus);
}

const FieldParams& FieldParams::default_field() {
    static const FieldParams params(0xffffffff00000001ULL);  // 2^64 - 2^32 + 1
    return params;
}

const FieldParams& FieldParams::for_modulus(std::uint64_t modulus) {
    static std::mutex mu;
    static std::unordered_map<std::uint64_t, FieldParams> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(modulus);
    if (it == cache.end()) {
        it = cache.emplace(modulus, FieldParams(modulus)).first;
    }
    return it->second;
}

std::uint32_t FieldParams::bits() const {
    return 64 - static_cast<std::uint32_t>(std::countl_zero(modulus));
}

std::uint32_t FieldParams::hex_width() const {
    return (bits() + 3) / 4;
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (modulus_ != o.modulus_ || modulus_ == 0) {
        throw ConfigError("field: operands from different fields (" + std::to_string(modulus_) +
                          " vs " + std::to_string(o.modulus_) + ")");
    }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    // a, b < p <= 2^64 - 1: detect wraparound instead of widening.
    std::uint64_t threshold = modulus_ - o.value_;
    std::uint64_t r = (value_ >= threshold) ? value_ - threshold : value_ + o.value_;
    return from_raw(r, modulus_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o);
    // Add the modulus before reducing; no negative intermediates.
    std::uint64_t r = (value_ >= o.value_) ? value_ - o.value_ : value_ + (modulus_ - o.value_);
    return from_raw(r, modulus_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    ++tl_mul_count;
    return from_raw(mulmod(value_, o.value_, modulus_), modulus_);
}

FieldElement FieldElement::operator-() const {
    if (modulus_ == 0) throw ConfigError("field: negation of null element");
    return from_raw(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    if (modulus_ == 0) throw ConfigError("field: pow on null element");
    FieldElement base = *this;
    FieldElement result = from_raw(1, modulus_);
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

FieldElement FieldElement::inv() const {
    if (modulus_ == 0) throw ConfigError("field: inv on null element");
    if (value_ == 0) throw std::domain_error("field: inverse of zero");
    return pow(modulus_ - 2);  // Fermat; modulus is prime by construction
}

FieldElement root_of_unity(const FieldParams& params, std::uint64_t order) {
    if (order == 0 || (order & (order - 1)) != 0) {
        throw InputError("field: root-of-unity order must be a power of two");
    }
    std::uint64_t log_order = static_cast<std::uint64_t>(std::countr_zero(order));
    if (log_order > params.two_adicity) {
        throw UnsupportedError("field: order 2^" + std::to_string(log_order) +
                               " exceeds two-adicity " + std::to_string(params.two_adicity));
    }
    FieldElement g = FieldElement::from_raw(params.generator, params.modulus);
    std::uint64_t odd_part = (params.modulus - 1) >> params.two_adicity;
    FieldElement w = g.pow(odd_part);  // exact order 2^two_adicity
    for (std::uint32_t i = 0; i < params.two_adicity - log_order; ++i) {
        w *= w;
    }
    return w;
}

std::string to_hex(const FieldElement& e) {
    const FieldParams& params = FieldParams::for_modulus(e.modulus());
    std::uint32_t width = params.hex_width();
    std::string out(width, '0');
    std::uint64_t v = e.value();
    for (std::uint32_t i = 0; i < width; ++i) {
        out[width - 1 - i] = "0123456789abcdef"[v & 0xf];
        v >>= 4;
    }
    return out;
}

FieldElement field_from_hex(std::string_view hex, const FieldParams& params) {
    if (hex.empty() || hex.size() > 16) {
        throw InputError("field: hex string has invalid length");
    }
    std::uint64_t v = 0;
    for (char c : hex) {
        v <<= 4;
        if (c >= '0' && c <= '9') v |= static_cast<std::uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f') v |= static_cast<std::uint64_t>(c - 'a' + 10);
        else throw InputError("field: invalid hex digit");
    }
    if (v >= params.modulus) {
        throw InputError("field: hex value exceeds modulus");
    }
    return FieldElement(v, params);
}

std::uint64_t field_mul_count() { return tl_mul_count; }
void reset_field_mul_count() { tl_mul_count = 0; }

} // namespace zkmatch
