#include "zkmatch/digest.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace zkmatch {

std::array<std::uint8_t, 32> sha256(std::string_view data) {
    std::array<std::uint8_t, 32> out{};
    unsigned int out_len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &out_len, EVP_sha256(), nullptr) != 1 ||
        out_len != out.size()) {
        throw std::runtime_error("digest: SHA-256 computation failed");
    }
    return out;
}

std::string sha256_hex(std::string_view data) {
    auto digest = sha256(data);
    std::string hex;
    hex.reserve(64);
    for (std::uint8_t b : digest) {
        hex.push_back("0123456789abcdef"[b >> 4]);
        hex.push_back("0123456789abcdef"[b & 0xf]);
    }
    return hex;
}

FieldElement field_from_digest(const std::array<std::uint8_t, 32>& digest,
                               const FieldParams& params) {
    using u128 = unsigned __int128;
    std::uint64_t acc = 0;
    for (std::uint8_t b : digest) {
        acc = static_cast<std::uint64_t>((static_cast<u128>(acc) << 8 | b) % params.modulus);
    }
    return FieldElement(acc, params);
}

std::string be64_bytes(std::uint64_t v) {
    std::string out(8, '\0');
    for (int i = 7; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<char>(v & 0xff);
        v >>= 8;
    }
    return out;
}

} // namespace zkmatch
