#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zkmatch/field.hpp"

namespace zkmatch {

/// Rolling-hash configuration: base b, window length T and the cached top
/// weight b^(T-1) consumed by the O(1) slide update.
struct RollingParams {
    FieldElement base;
    std::size_t window_len = 0;
    FieldElement top_weight;

    RollingParams() = default;
    RollingParams(FieldElement base, std::size_t window_len);

    /// Default base 257: smallest prime above the byte range, so the
    /// byte-to-field encoding is injective per position.
    static RollingParams with_default_base(const FieldParams& field, std::size_t window_len);

    /// Digest of modulus || base || window_len; binds certificates to the
    /// rolling-hash configuration they were produced under.
    std::string fingerprint() const;
};

/// Window hash: sum of S[i] * b^(T-1-i) mod q over the window bytes.
FieldElement fingerprint(std::string_view window, const RollingParams& params);

/// Slide update: (b * (hash_old - out_byte * b^(T-1)) + in_byte) mod q.
/// Garbage in, garbage out: hash_old must be the fingerprint of a window
/// that begins with out_byte.
FieldElement roll(FieldElement hash_old, std::uint8_t out_byte, std::uint8_t in_byte,
                  const RollingParams& params);

/// Ordered list of documents with stable unique identifiers. Individual
/// documents may be empty; the list itself may not.
struct Corpus {
    std::vector<std::string> ids;
    std::vector<std::string> documents;

    Corpus() = default;
    Corpus(std::vector<std::string> ids, std::vector<std::string> documents);

    std::size_t size() const { return documents.size(); }
};

/// The K short strings to search for. Patterns must be non-empty; when
/// uniform_len is set every pattern must have that exact length.
struct PatternSet {
    std::vector<std::string> patterns;
    std::optional<std::size_t> uniform_len;

    PatternSet() = default;
    explicit PatternSet(std::vector<std::string> patterns,
                        std::optional<std::size_t> uniform_len = std::nullopt);
};

struct MatchCounters {
    std::uint64_t window_hashes_computed = 0;  // text window fingerprints (initial + rolled)
    std::uint64_t char_comparisons = 0;        // byte-equality tests
    std::uint64_t hash_comparisons = 0;        // window-fingerprint lookups against the pattern set

    MatchCounters& operator+=(const MatchCounters& o);
};

struct Occurrence {
    std::string doc_id;
    std::size_t offset = 0;

    bool operator==(const Occurrence& o) const {
        return doc_id == o.doc_id && offset == o.offset;
    }
};

/// Per-pattern occurrence lists plus the operation counters that back the
/// complexity-table checks. occurrences[i] belongs to patterns[i] and is
/// sorted by (document order, offset).
struct MatchReport {
    std::vector<std::vector<Occurrence>> occurrences;
    MatchCounters counters;

    std::size_t total_matches() const;
};

/// All offsets where pattern occurs in text, by direct byte comparison with
/// early exit. Empty pattern is an input error.
std::vector<std::size_t> naive_match(std::string_view text, std::string_view pattern,
                                     MatchCounters* counters = nullptr);

/// Rabin-Karp over one text: every hash hit is byte-verified before being
/// reported, so the occurrence sets equal naive_match exactly. All patterns
/// must have length params.window_len.
MatchReport rabin_karp_match(std::string_view text, const PatternSet& patterns,
                             const RollingParams& params);

enum class MatchAlgo { Naive, RabinKarp };

/// Matching over a whole corpus. Patterns of mixed lengths are grouped into
/// per-length passes (one RollingParams per length, same base). Documents are
/// processed independently (in parallel up to ZKMATCH_THREADS) and reports
/// merge deterministically in document order.
MatchReport corpus_match(const Corpus& corpus, const PatternSet& patterns,
                         const RollingParams& params, MatchAlgo algo);

} // namespace zkmatch
