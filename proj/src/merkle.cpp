#include "zkmatch/merkle.hpp"

#include <algorithm>
#include <set>

namespace zkmatch {

AlphabetPolicy AlphabetPolicy::url_unreserved() {
    AlphabetPolicy policy;
    policy.name = "url-unreserved";
    for (int b = 'a'; b <= 'z'; ++b) policy.allowed[static_cast<std::size_t>(b)] = true;
    for (int b = 'A'; b <= 'Z'; ++b) policy.allowed[static_cast<std::size_t>(b)] = true;
    for (int b = '0'; b <= '9'; ++b) policy.allowed[static_cast<std::size_t>(b)] = true;
    policy.allowed[static_cast<std::size_t>('-')] = true;
    policy.allowed[static_cast<std::size_t>('.')] = true;
    policy.allowed[static_cast<std::size_t>('_')] = true;
    policy.allowed[static_cast<std::size_t>('~')] = true;
    return policy;
}

AlphabetPolicy AlphabetPolicy::any_byte() {
    AlphabetPolicy policy;
    policy.name = "any";
    policy.allowed.fill(true);
    return policy;
}

AlphabetPolicy AlphabetPolicy::by_name(std::string_view name) {
    if (name == "url-unreserved") return url_unreserved();
    if (name == "any") return any_byte();
    throw InputError("merkle: unknown alphabet policy '" + std::string(name) + "'");
}

namespace {

LegalPatternSet finalize_set(std::set<std::string>&& windows, std::size_t window_len) {
    LegalPatternSet result;
    result.window_len = window_len;
    result.patterns.assign(windows.begin(), windows.end());  // already sorted
    result.index.reserve(result.patterns.size());
    for (std::size_t i = 0; i < result.patterns.size(); ++i) {
        result.index.emplace(result.patterns[i], i);
    }
    return result;
}

void collect_windows(std::string_view text, std::size_t window_len,
                     const AlphabetPolicy& policy, std::set<std::string>& out) {
    if (text.size() < window_len) return;
    for (std::size_t i = 0; i + window_len <= text.size(); ++i) {
        std::string_view window = text.substr(i, window_len);
        bool legal = true;
        for (char ch : window) {
            if (!policy.is_allowed(static_cast<std::uint8_t>(ch))) {
                legal = false;
                break;
            }
        }
        if (legal) out.emplace(window);
    }
}

} // namespace

LegalPatternSet filter_windows(std::string_view text, std::size_t window_len,
                               const AlphabetPolicy& policy) {
    if (window_len == 0) {
        throw InputError("merkle: window length must be >= 1");
    }
    std::set<std::string> windows;
    collect_windows(text, window_len, policy, windows);
    return finalize_set(std::move(windows), window_len);
}

LegalPatternSet filter_corpus_windows(const Corpus& corpus, std::size_t window_len,
                                      const AlphabetPolicy& policy) {
    if (window_len == 0) {
        throw InputError("merkle: window length must be >= 1");
    }
    std::set<std::string> windows;
    for (const std::string& doc : corpus.documents) {
        collect_windows(doc, window_len, policy, windows);
    }
    return finalize_set(std::move(windows), window_len);
}

bool set_contains(const LegalPatternSet& set, std::string_view pattern) {
    return set.index.find(std::string(pattern)) != set.index.end();
}

MerkleTree build_tree(const LegalPatternSet& set, const MimcParams& mimc) {
    if (set.patterns.empty()) {
        throw BuildError("merkle: cannot build a tree over an empty legal-pattern set");
    }

    MerkleTree tree;
    tree.leaf_count = set.patterns.size();
    tree.depth = 1;
    while ((std::size_t{1} << tree.depth) < tree.leaf_count) ++tree.depth;

    FieldElement zero(0, mimc.field);
    FieldElement empty_leaf = compress(zero, zero, mimc);

    std::vector<FieldElement> row;
    row.reserve(std::size_t{1} << tree.depth);
    for (const std::string& pattern : set.patterns) {
        row.push_back(hash_bytes(pattern, mimc));
    }
    row.resize(std::size_t{1} << tree.depth, empty_leaf);

    tree.levels.push_back(row);
    while (tree.levels.back().size() > 1) {
        const auto& below = tree.levels.back();
        std::vector<FieldElement> above;
        above.reserve(below.size() / 2);
        for (std::size_t i = 0; i < below.size(); i += 2) {
            above.push_back(compress(below[i], below[i + 1], mimc));
        }
        tree.levels.push_back(std::move(above));
    }
    return tree;
}

MerkleProof prove_membership(const MerkleTree& tree, const LegalPatternSet& set,
                             std::string_view pattern, const MimcParams& mimc) {
    auto it = set.index.find(std::string(pattern));
    if (it == set.index.end()) {
        // Non-membership is decided outside the proof system.
        throw NotAMemberError("merkle: pattern is not in the committed set");
    }
    (void)mimc;

    MerkleProof proof;
    proof.leaf_bytes = std::string(pattern);
    proof.root = tree.root();
    std::size_t pos = it->second;
    for (std::size_t level = 0; level < tree.depth; ++level) {
        std::uint8_t direction = pos & 1;  // 0: node is the left child
        proof.directions.push_back(direction);
        proof.siblings.push_back(tree.levels[level][pos ^ 1]);
        pos >>= 1;
    }
    return proof;
}

bool verify_membership(const FieldElement& root, const MerkleProof& proof,
                       const MimcParams& mimc) {
    if (proof.siblings.size() != proof.directions.size()) {
        throw InputError("merkle: proof sibling and direction counts differ");
    }
    FieldElement node = hash_bytes(proof.leaf_bytes, mimc);
    for (std::size_t level = 0; level < proof.siblings.size(); ++level) {
        if (proof.directions[level] == 0) {
            node = compress(node, proof.siblings[level], mimc);
        } else {
            node = compress(proof.siblings[level], node, mimc);
        }
    }
    return node == root;
}

} // namespace zkmatch
