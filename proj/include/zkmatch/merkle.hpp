#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zkmatch/hashmatch.hpp"
#include "zkmatch/mimc.hpp"

namespace zkmatch {

/// Total byte-membership predicate deciding which window contents are legal.
struct AlphabetPolicy {
    std::string name;
    std::array<bool, 256> allowed{};

    bool is_allowed(std::uint8_t b) const { return allowed[b]; }

    /// Letters, digits, '-', '.', '_', '~' (the URL-unreserved set).
    static AlphabetPolicy url_unreserved();
    /// Every byte value; useful for binary corpora and tests.
    static AlphabetPolicy any_byte();
    /// Lookup by name ("url-unreserved" | "any"); throws InputError otherwise.
    static AlphabetPolicy by_name(std::string_view name);
};

/// Deduplicated, lexicographically sorted set of legal length-T windows with
/// a pattern -> leaf-position index for O(1) membership checks.
struct LegalPatternSet {
    std::size_t window_len = 0;
    std::vector<std::string> patterns;                   // sorted
    std::unordered_map<std::string, std::size_t> index;  // pattern -> leaf position
};

/// Every length-T substring of text whose bytes all satisfy the policy.
/// A text shorter than T yields the empty set.
LegalPatternSet filter_windows(std::string_view text, std::size_t window_len,
                               const AlphabetPolicy& policy);

/// Union of filter_windows over every document of the corpus.
LegalPatternSet filter_corpus_windows(const Corpus& corpus, std::size_t window_len,
                                      const AlphabetPolicy& policy);

bool set_contains(const LegalPatternSet& set, std::string_view pattern);

/// MiMC-Merkle tree over the legal-pattern leaves. Leaves are hash_bytes of
/// each pattern in index order, padded to the next power of two with the
/// empty-leaf constant compress(0, 0). Minimum depth 1 so every proof carries
/// at least one sibling.
struct MerkleTree {
    std::size_t depth = 0;
    std::size_t leaf_count = 0;  // real (non-padding) leaves
    // levels[0] = padded leaf row (2^depth entries), levels[depth] = {root}.
    std::vector<std::vector<FieldElement>> levels;

    const FieldElement& root() const { return levels.back().front(); }
};

MerkleTree build_tree(const LegalPatternSet& set, const MimcParams& mimc);

/// Sibling path plus direction bits from a leaf to the root. Direction bit
/// j = bit j of the leaf index; 0 means the running node is the left child
/// (sibling on the right).
struct MerkleProof {
    std::string leaf_bytes;
    std::vector<FieldElement> siblings;
    std::vector<std::uint8_t> directions;
    FieldElement root;
};

/// Throws NotAMemberError when the pattern is outside the committed set.
MerkleProof prove_membership(const MerkleTree& tree, const LegalPatternSet& set,
                             std::string_view pattern, const MimcParams& mimc);

/// Recomputes the root from hash_bytes(leaf_bytes) and the sibling path.
/// A proof whose sibling and direction counts disagree is an input error,
/// distinct from a verification failure.
bool verify_membership(const FieldElement& root, const MerkleProof& proof,
                       const MimcParams& mimc);

} // namespace zkmatch
