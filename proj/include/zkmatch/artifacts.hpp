#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zkmatch/merkle.hpp"
#include "zkmatch/polyeval.hpp"

namespace zkmatch {

/// JSON artifact layer. Every artifact carries schema_version (currently 1)
/// and enough parameter identity that verification never needs the corpus.

inline constexpr int kSchemaVersion = 1;

struct CommitmentFile {
    std::uint64_t modulus = 0;
    std::string mimc_fingerprint;
    std::string policy;
    std::size_t window_len = 0;
    std::size_t depth = 0;
    std::size_t leaf_count = 0;
    std::string root_hex;

    /// Digest binding (modulus, mimc fingerprint, policy, window length):
    /// the parameterization identity checked across artifacts.
    std::string header_fingerprint() const;

    std::string to_json_text() const;
    static CommitmentFile from_json_text(const std::string& text);
};

struct ProofFile {
    std::string pattern_hex;
    std::vector<std::string> sibling_hexes;
    std::vector<std::uint8_t> directions;
    std::string root_hex;
    std::string header_fingerprint;

    std::string to_json_text() const;
    static ProofFile from_json_text(const std::string& text);

    /// Field-typed view; throws InputError on malformed hex.
    MerkleProof to_proof(const FieldParams& field) const;
    static ProofFile from_proof(const MerkleProof& proof, const std::string& header_fingerprint);
};

enum class CertMode { Containment, Absence };

struct CertificateFile {
    CertMode mode = CertMode::Containment;
    std::uint64_t modulus = 0;
    std::string rolling_fingerprint;
    std::string challenge_seed;
    std::string doc_id;
    std::size_t window_len = 0;
    std::string h_hex;
    std::vector<std::string> window_poly_hex;
    std::vector<std::string> quotient_hex;  // containment
    std::vector<std::string> s_hex;         // absence
    std::vector<std::string> t_hex;         // absence

    std::string to_json_text() const;
    static CertificateFile from_json_text(const std::string& text);

    /// Runs the matching verify_* routine on the typed contents.
    bool verify() const;
};

std::vector<std::string> poly_to_hex(const Polynomial& p);
Polynomial poly_from_hex(const std::vector<std::string>& hex, const FieldParams& field);

} // namespace zkmatch
