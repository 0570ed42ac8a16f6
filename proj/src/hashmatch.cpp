#include "zkmatch/hashmatch.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>
#include <unordered_map>

#include "zkmatch/digest.hpp"

namespace zkmatch {

RollingParams::RollingParams(FieldElement base_in, std::size_t window_len_in)
    : base(base_in), window_len(window_len_in) {
    if (window_len == 0) {
        throw InputError("hashmatch: window length must be >= 1");
    }
    top_weight = base.pow(window_len - 1);
}

RollingParams RollingParams::with_default_base(const FieldParams& field, std::size_t window_len) {
    return RollingParams(FieldElement(257, field), window_len);
}

std::string RollingParams::fingerprint() const {
    std::string material = "rolling|" + std::to_string(base.modulus()) + "|" +
                           std::to_string(base.value()) + "|" + std::to_string(window_len);
    return sha256_hex(material);
}

FieldElement fingerprint(std::string_view window, const RollingParams& params) {
    if (window.size() != params.window_len) {
        throw InputError("hashmatch: window length " + std::to_string(window.size()) +
                         " does not match configured length " + std::to_string(params.window_len));
    }
    const FieldParams& field = FieldParams::for_modulus(params.base.modulus());
    FieldElement acc(0, field);
    for (char ch : window) {
        acc = acc * params.base + FieldElement(static_cast<std::uint8_t>(ch), field);
    }
    return acc;
}

FieldElement roll(FieldElement hash_old, std::uint8_t out_byte, std::uint8_t in_byte,
                  const RollingParams& params) {
    const FieldParams& field = FieldParams::for_modulus(params.base.modulus());
    FieldElement out_term = FieldElement(out_byte, field) * params.top_weight;
    return params.base * (hash_old - out_term) + FieldElement(in_byte, field);
}

Corpus::Corpus(std::vector<std::string> ids_in, std::vector<std::string> documents_in)
    : ids(std::move(ids_in)), documents(std::move(documents_in)) {
    if (documents.empty()) {
        throw InputError("hashmatch: corpus must contain at least one document");
    }
    if (ids.size() != documents.size()) {
        throw InputError("hashmatch: corpus ids and documents differ in count");
    }
    std::vector<std::string> sorted_ids = ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    if (std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) != sorted_ids.end()) {
        throw InputError("hashmatch: corpus document ids must be unique");
    }
}

PatternSet::PatternSet(std::vector<std::string> patterns_in,
                       std::optional<std::size_t> uniform_len_in)
    : patterns(std::move(patterns_in)), uniform_len(uniform_len_in) {
    for (const std::string& p : patterns) {
        if (p.empty()) {
            throw InputError("hashmatch: empty pattern rejected");
        }
        if (uniform_len && p.size() != *uniform_len) {
            throw InputError("hashmatch: pattern length violates declared uniform length");
        }
    }
}

MatchCounters& MatchCounters::operator+=(const MatchCounters& o) {
    window_hashes_computed += o.window_hashes_computed;
    char_comparisons += o.char_comparisons;
    hash_comparisons += o.hash_comparisons;
    return *this;
}

std::size_t MatchReport::total_matches() const {
    std::size_t n = 0;
    for (const auto& occ : occurrences) n += occ.size();
    return n;
}

std::vector<std::size_t> naive_match(std::string_view text, std::string_view pattern,
                                     MatchCounters* counters) {
    if (pattern.empty()) {
        throw InputError("hashmatch: empty pattern rejected");
    }
    std::vector<std::size_t> offsets;
    if (pattern.size() > text.size()) return offsets;
    for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < pattern.size(); ++j) {
            if (counters) ++counters->char_comparisons;
            if (text[i + j] != pattern[j]) {
                match = false;
                break;
            }
        }
        if (match) offsets.push_back(i);
    }
    return offsets;
}

namespace {

bool verify_bytes(std::string_view text, std::size_t offset, std::string_view pattern,
                  MatchCounters& counters) {
    for (std::size_t j = 0; j < pattern.size(); ++j) {
        ++counters.char_comparisons;
        if (text[offset + j] != pattern[j]) return false;
    }
    return true;
}

// Rabin-Karp over one document with a single uniform pattern length.
// doc_id is stamped into every occurrence.
MatchReport rabin_karp_one_doc(std::string_view text, const std::string& doc_id,
                               const std::vector<std::string>& patterns,
                               const std::vector<std::size_t>& pattern_indices_out,
                               std::size_t out_size, const RollingParams& params) {
    MatchReport report;
    report.occurrences.resize(out_size);

    for (const std::string& p : patterns) {
        if (p.size() != params.window_len) {
            throw InputError("hashmatch: pattern length differs from window length");
        }
    }

    // Pattern fingerprints, grouped so each window costs one lookup.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;
    for (std::size_t k = 0; k < patterns.size(); ++k) {
        by_hash[fingerprint(patterns[k], params).value()].push_back(k);
    }

    const std::size_t t_len = params.window_len;
    if (text.size() < t_len) return report;

    FieldElement h = fingerprint(text.substr(0, t_len), params);
    for (std::size_t i = 0;; ++i) {
        ++report.counters.window_hashes_computed;
        ++report.counters.hash_comparisons;
        auto it = by_hash.find(h.value());
        if (it != by_hash.end()) {
            for (std::size_t k : it->second) {
                // Never trust fingerprints: hits are byte-verified.
                if (verify_bytes(text, i, patterns[k], report.counters)) {
                    report.occurrences[pattern_indices_out[k]].push_back({doc_id, i});
                }
            }
        }
        if (i + t_len >= text.size()) break;
        h = roll(h, static_cast<std::uint8_t>(text[i]),
                 static_cast<std::uint8_t>(text[i + t_len]), params);
    }
    return report;
}

MatchReport match_one_doc(std::string_view text, const std::string& doc_id,
                          const PatternSet& patterns, const RollingParams& params,
                          MatchAlgo algo) {
    MatchReport report;
    report.occurrences.resize(patterns.patterns.size());

    if (algo == MatchAlgo::Naive) {
        for (std::size_t k = 0; k < patterns.patterns.size(); ++k) {
            for (std::size_t off : naive_match(text, patterns.patterns[k], &report.counters)) {
                report.occurrences[k].push_back({doc_id, off});
            }
        }
        return report;
    }

    // Group patterns by length; one rolling pass per distinct length.
    std::map<std::size_t, std::vector<std::size_t>> by_len;
    for (std::size_t k = 0; k < patterns.patterns.size(); ++k) {
        by_len[patterns.patterns[k].size()].push_back(k);
    }
    if (by_len.empty()) {
        // No patterns: window counters still accumulate for the configured length.
        by_len[params.window_len] = {};
    }
    for (const auto& [len, indices] : by_len) {
        RollingParams pass_params =
            (len == params.window_len) ? params : RollingParams(params.base, len);
        std::vector<std::string> group;
        group.reserve(indices.size());
        for (std::size_t k : indices) group.push_back(patterns.patterns[k]);
        MatchReport pass = rabin_karp_one_doc(text, doc_id, group, indices,
                                              patterns.patterns.size(), pass_params);
        report.counters += pass.counters;
        for (std::size_t k = 0; k < pass.occurrences.size(); ++k) {
            auto& dst = report.occurrences[k];
            dst.insert(dst.end(), pass.occurrences[k].begin(), pass.occurrences[k].end());
        }
    }
    return report;
}

std::size_t configured_thread_count() {
    if (const char* env = std::getenv("ZKMATCH_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<std::size_t>(v);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace

MatchReport rabin_karp_match(std::string_view text, const PatternSet& patterns,
                             const RollingParams& params) {
    for (const std::string& p : patterns.patterns) {
        if (p.size() != params.window_len) {
            throw InputError("hashmatch: rabin_karp_match requires all patterns to have the "
                             "configured window length");
        }
    }
    return match_one_doc(text, "", patterns, params, MatchAlgo::RabinKarp);
}

MatchReport corpus_match(const Corpus& corpus, const PatternSet& patterns,
                         const RollingParams& params, MatchAlgo algo) {
    std::vector<MatchReport> per_doc(corpus.size());
    std::size_t threads = std::min(configured_thread_count(), corpus.size());

    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t d = begin; d < corpus.size(); d += step) {
            per_doc[d] = match_one_doc(corpus.documents[d], corpus.ids[d], patterns, params, algo);
        }
    };
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& th : pool) th.join();
    }

    MatchReport merged;
    merged.occurrences.resize(patterns.patterns.size());
    for (std::size_t d = 0; d < corpus.size(); ++d) {
        merged.counters += per_doc[d].counters;
        for (std::size_t k = 0; k < patterns.patterns.size(); ++k) {
            auto& dst = merged.occurrences[k];
            dst.insert(dst.end(), per_doc[d].occurrences[k].begin(), per_doc[d].occurrences[k].end());
        }
    }
    return merged;
}

} // namespace zkmatch
