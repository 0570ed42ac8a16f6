// zkmatch: substring-matching toolkit CLI.
//
// Subcommands: match (corpus search), commit (MiMC-Merkle commitment over
// legal windows), prove (membership proof or polynomial certificate),
// verify (artifact check, corpus never read), bench (CSV parameter sweeps).
//
// Exit codes: 0 success/valid, 1 invalid or no matches with --fail-on-absent,
// 2 input error, 3 empty commitment, 4 pattern not present, 5 parameter
// fingerprint mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "zkmatch/artifacts.hpp"
#include "zkmatch/circuitmodel.hpp"
#include "zkmatch/digest.hpp"
#include "zkmatch/io.hpp"

namespace {

using namespace zkmatch;
using nlohmann::json;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInputError = 2;
constexpr int kExitEmptyCommitment = 3;
constexpr int kExitNotPresent = 4;
constexpr int kExitFingerprintMismatch = 5;

constexpr const char* kDefaultChallengeSeed = "zkmatch-challenge-v1";

struct FingerprintMismatch : std::runtime_error {
    explicit FingerprintMismatch(const std::string& what) : std::runtime_error(what) {}
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    auto delta = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(delta).count();
}

void emit(const std::string& out_path, const std::string& contents) {
    if (out_path.empty() || out_path == "-") {
        std::cout << contents;
    } else {
        write_file(out_path, contents);
    }
}

// ---------------------------------------------------------------------------
// match

struct MatchOptions {
    std::string corpus_path;
    std::string patterns_path;
    std::vector<std::string> pattern_literals;
    std::string algo = "rabin-karp";
    std::string out_path;
    std::uint64_t modulus = FieldParams::default_field().modulus;
    std::uint64_t base = 257;
    bool fail_on_absent = false;
};

int run_match(const MatchOptions& opt) {
    const FieldParams& field = FieldParams::for_modulus(opt.modulus);
    Corpus corpus = load_corpus(opt.corpus_path);

    std::vector<std::string> raw_patterns;
    if (!opt.patterns_path.empty()) raw_patterns = load_patterns(opt.patterns_path);
    for (const std::string& lit : opt.pattern_literals) {
        raw_patterns.push_back(parse_pattern_literal(lit));
    }
    if (raw_patterns.empty()) {
        throw InputError("match: no patterns given (use --patterns or --pattern)");
    }
    PatternSet patterns(raw_patterns);

    MatchAlgo algo;
    if (opt.algo == "naive") algo = MatchAlgo::Naive;
    else if (opt.algo == "rabin-karp") algo = MatchAlgo::RabinKarp;
    else throw InputError("match: --algo must be naive|rabin-karp");

    RollingParams rolling(FieldElement(opt.base, field), raw_patterns.front().size());
    MatchReport report = corpus_match(corpus, patterns, rolling, algo);

    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "match_report";
    j["config"]["algo"] = opt.algo;
    j["config"]["base"] = opt.base;
    j["config"]["modulus"] = std::to_string(opt.modulus);
    j["config"]["corpus"] = opt.corpus_path;
    j["counters"]["window_hashes_computed"] = report.counters.window_hashes_computed;
    j["counters"]["hash_comparisons"] = report.counters.hash_comparisons;
    j["counters"]["char_comparisons"] = report.counters.char_comparisons;
    j["patterns"] = json::array();
    for (std::size_t k = 0; k < patterns.patterns.size(); ++k) {
        json entry;
        entry["index"] = k;
        entry["pattern_hex"] = bytes_to_hex(patterns.patterns[k]);
        entry["occurrences"] = json::array();
        for (const Occurrence& occ : report.occurrences[k]) {
            entry["occurrences"].push_back({{"doc", occ.doc_id}, {"offset", occ.offset}});
        }
        j["patterns"].push_back(std::move(entry));
    }
    j["total_matches"] = report.total_matches();
    emit(opt.out_path, j.dump(2) + "\n");

    if (opt.fail_on_absent && report.total_matches() == 0) return kExitInvalid;
    return kExitValid;
}

// ---------------------------------------------------------------------------
// commit

struct CommitOptions {
    std::string corpus_path;
    std::size_t window_len = 0;
    std::string policy = "url-unreserved";
    std::string seed = MimcParams::kDefaultSeed;
    std::uint64_t modulus = FieldParams::default_field().modulus;
    std::string out_path;
};

int run_commit(const CommitOptions& opt) {
    if (opt.modulus < 257) {
        throw InputError("commit: modulus must be >= 257 to embed bytes injectively");
    }
    const FieldParams& field = FieldParams::for_modulus(opt.modulus);
    MimcParams mimc = MimcParams::create(field, opt.seed);
    AlphabetPolicy policy = AlphabetPolicy::by_name(opt.policy);
    Corpus corpus = load_corpus(opt.corpus_path);

    LegalPatternSet set = filter_corpus_windows(corpus, opt.window_len, policy);
    if (set.patterns.empty()) {
        throw BuildError("commit: no legal windows of length " + std::to_string(opt.window_len) +
                         " in the corpus");
    }
    MerkleTree tree = build_tree(set, mimc);

    CommitmentFile file;
    file.modulus = opt.modulus;
    file.mimc_fingerprint = mimc.fingerprint();
    file.policy = policy.name;
    file.window_len = opt.window_len;
    file.depth = tree.depth;
    file.leaf_count = tree.leaf_count;
    file.root_hex = to_hex(tree.root());
    emit(opt.out_path, file.to_json_text());
    return kExitValid;
}

// ---------------------------------------------------------------------------
// prove

struct ProveOptions {
    std::string mode = "merkle";
    std::string corpus_path;
    std::string commitment_path;
    std::string pattern_literal;
    std::string doc_id;
    std::string seed = MimcParams::kDefaultSeed;
    std::string challenge_seed = kDefaultChallengeSeed;
    std::uint64_t modulus = FieldParams::default_field().modulus;
    std::uint64_t base = 257;
    std::string out_path;
};

int run_prove_merkle(const ProveOptions& opt, const std::string& pattern) {
    if (opt.commitment_path.empty()) {
        throw InputError("prove: merkle mode requires --commitment");
    }
    CommitmentFile commitment = CommitmentFile::from_json_text(read_file(opt.commitment_path));
    const FieldParams& field = FieldParams::for_modulus(commitment.modulus);
    MimcParams mimc = MimcParams::create(field, opt.seed);
    if (mimc.fingerprint() != commitment.mimc_fingerprint) {
        throw FingerprintMismatch("prove: MiMC parameter fingerprint differs from the commitment");
    }

    AlphabetPolicy policy = AlphabetPolicy::by_name(commitment.policy);
    Corpus corpus = load_corpus(opt.corpus_path);
    LegalPatternSet set = filter_corpus_windows(corpus, commitment.window_len, policy);
    if (set.patterns.empty()) {
        throw BuildError("prove: corpus yields no legal windows for the committed length");
    }
    MerkleTree tree = build_tree(set, mimc);
    if (to_hex(tree.root()) != commitment.root_hex) {
        throw FingerprintMismatch("prove: corpus does not reproduce the committed root");
    }

    MerkleProof proof = prove_membership(tree, set, pattern, mimc);
    emit(opt.out_path, ProofFile::from_proof(proof, commitment.header_fingerprint()).to_json_text());
    return kExitValid;
}

int run_prove_poly(const ProveOptions& opt, const std::string& pattern, bool want_containment) {
    const FieldParams& field = FieldParams::for_modulus(opt.modulus);
    Corpus corpus = load_corpus(opt.corpus_path);

    std::size_t doc_index = 0;
    if (!opt.doc_id.empty()) {
        bool found = false;
        for (std::size_t d = 0; d < corpus.size(); ++d) {
            if (corpus.ids[d] == opt.doc_id) {
                doc_index = d;
                found = true;
                break;
            }
        }
        if (!found) throw InputError("prove: document id '" + opt.doc_id + "' not in corpus");
    } else if (corpus.size() > 1) {
        throw InputError("prove: corpus has multiple documents; select one with --doc");
    }

    RollingParams rolling(FieldElement(opt.base, field), pattern.size());
    WindowPolynomial w = window_polynomial(corpus.documents[doc_index], rolling,
                                           corpus.ids[doc_index]);

    CertificateFile file;
    file.modulus = opt.modulus;
    file.rolling_fingerprint = rolling.fingerprint();
    file.challenge_seed = opt.challenge_seed;
    file.doc_id = w.doc_id;
    file.window_len = rolling.window_len;
    file.h_hex = to_hex(fingerprint(pattern, rolling));
    file.window_poly_hex = poly_to_hex(w.poly);

    if (want_containment) {
        file.mode = CertMode::Containment;
        file.quotient_hex = poly_to_hex(prove_containment(w, pattern, rolling));
        // Fingerprint-level containment can be a hash collision; log when the
        // bytes are not actually present.
        if (naive_match(corpus.documents[doc_index], pattern).empty()) {
            std::cerr << "note: fingerprint-level containment without a byte-level match "
                         "(hash collision at modulus " << opt.modulus << ")\n";
        }
    } else {
        file.mode = CertMode::Absence;
        BezoutCertificate cert = prove_absence(w, pattern, rolling);
        file.s_hex = poly_to_hex(cert.s);
        file.t_hex = poly_to_hex(cert.t);
    }
    emit(opt.out_path, file.to_json_text());
    return kExitValid;
}

int run_prove(const ProveOptions& opt) {
    std::string pattern = parse_pattern_literal(opt.pattern_literal);
    if (pattern.empty()) throw InputError("prove: pattern must be non-empty");
    if (opt.mode == "merkle") return run_prove_merkle(opt, pattern);
    if (opt.mode == "poly-contain") return run_prove_poly(opt, pattern, true);
    if (opt.mode == "poly-absent") return run_prove_poly(opt, pattern, false);
    throw InputError("prove: --mode must be merkle|poly-contain|poly-absent");
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string artifact_path;
    std::string commitment_path;
    std::string seed = MimcParams::kDefaultSeed;
    std::uint64_t base = 257;
    std::size_t window_len = 0;  // 0: take the certificate's own value
};

int run_verify(const VerifyOptions& opt) {
    std::string text = read_file(opt.artifact_path);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("kind")) {
        throw InputError("verify: artifact is not a recognized JSON artifact");
    }

    if (j["kind"] == "merkle_proof") {
        if (opt.commitment_path.empty()) {
            throw InputError("verify: merkle proofs require --commitment");
        }
        ProofFile proof_file = ProofFile::from_json_text(text);
        CommitmentFile commitment = CommitmentFile::from_json_text(read_file(opt.commitment_path));
        const FieldParams& field = FieldParams::for_modulus(commitment.modulus);
        MimcParams mimc = MimcParams::create(field, opt.seed);
        if (mimc.fingerprint() != commitment.mimc_fingerprint) {
            throw FingerprintMismatch("verify: MiMC parameters do not match the commitment");
        }
        if (proof_file.header_fingerprint != commitment.header_fingerprint()) {
            throw FingerprintMismatch("verify: proof was produced under a different commitment header");
        }
        if (proof_file.root_hex != commitment.root_hex) {
            return kExitInvalid;  // proof against a different root
        }
        MerkleProof proof = proof_file.to_proof(field);
        FieldElement root = field_from_hex(commitment.root_hex, field);
        return verify_membership(root, proof, mimc) ? kExitValid : kExitInvalid;
    }

    if (j["kind"] == "poly_certificate") {
        CertificateFile cert = CertificateFile::from_json_text(text);
        if (opt.window_len != 0) {
            const FieldParams& field = FieldParams::for_modulus(cert.modulus);
            RollingParams rolling(FieldElement(opt.base, field), opt.window_len);
            if (rolling.fingerprint() != cert.rolling_fingerprint) {
                throw FingerprintMismatch("verify: rolling-hash parameters do not match the certificate");
            }
        }
        return cert.verify() ? kExitValid : kExitInvalid;
    }

    throw InputError("verify: unsupported artifact kind");
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
    std::string suite;
    std::string sweep;  // min:max:step
    std::string out_path;
    std::uint64_t modulus = FieldParams::default_field().modulus;
};

struct SweepRange {
    std::size_t min = 0, max = 0, step = 1;
};

SweepRange parse_sweep(const std::string& text, SweepRange fallback) {
    if (text.empty()) return fallback;
    SweepRange r;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> r.min >> c1 >> r.max >> c2 >> r.step) || c1 != ':' || c2 != ':' || r.step == 0) {
        throw InputError("bench: --sweep must be min:max:step with step >= 1");
    }
    return r;
}

std::string random_text(std::mt19937_64& rng, std::size_t len, int alphabet) {
    std::uniform_int_distribution<int> dist(0, alphabet - 1);
    std::string s(len, 'a');
    for (auto& ch : s) ch = static_cast<char>('a' + dist(rng));
    return s;
}

int run_bench(const BenchOptions& opt) {
    const FieldParams& field = FieldParams::for_modulus(opt.modulus);
    std::ostringstream csv;

    if (opt.suite == "naive" || opt.suite == "rabin-karp") {
        SweepRange range = parse_sweep(opt.sweep, {64, 512, 64});
        csv << "suite,algo,M,N,K,T,window_hashes_computed,hash_comparisons,char_comparisons,"
               "total_matches,wall_ms\n";
        MatchAlgo algo = (opt.suite == "naive") ? MatchAlgo::Naive : MatchAlgo::RabinKarp;
        const std::size_t m_docs = 4, k_patterns = 4, t_len = 8;
        for (std::size_t n = range.min; n <= range.max; n += range.step) {
            std::mt19937_64 rng(0x62656e63ULL ^ n);
            std::vector<std::string> ids, docs;
            for (std::size_t d = 0; d < m_docs; ++d) {
                ids.push_back("doc" + std::to_string(d));
                docs.push_back(random_text(rng, n, 4));
            }
            std::vector<std::string> pats;
            for (std::size_t k = 0; k < k_patterns; ++k) {
                if (k % 2 == 0 && docs[k % m_docs].size() >= t_len) {
                    pats.push_back(docs[k % m_docs].substr(0, t_len));  // planted
                } else {
                    pats.push_back(random_text(rng, t_len, 4));
                }
            }
            Corpus corpus(ids, docs);
            PatternSet patterns(pats);
            RollingParams rolling(FieldElement(257, field), t_len);
            auto start = std::chrono::steady_clock::now();
            MatchReport report = corpus_match(corpus, patterns, rolling, algo);
            double ms = elapsed_ms(start);
            csv << opt.suite << "," << opt.suite << "," << m_docs << "," << n << ","
                << k_patterns << "," << t_len << "," << report.counters.window_hashes_computed
                << "," << report.counters.hash_comparisons << ","
                << report.counters.char_comparisons << "," << report.total_matches() << ","
                << ms << "\n";
        }
    } else if (opt.suite == "merkle") {
        SweepRange range = parse_sweep(opt.sweep, {16, 256, 16});
        csv << "suite,leaves,depth,compress_build,compress_verify,wall_ms\n";
        MimcParams mimc = MimcParams::create(field);
        const std::size_t t_len = 8;
        for (std::size_t leaves = range.min; leaves <= range.max; leaves += range.step) {
            std::mt19937_64 rng(0x6d65726bULL ^ leaves);
            std::string text = random_text(rng, leaves + t_len - 1, 26);
            LegalPatternSet set = filter_windows(text, t_len, AlphabetPolicy::any_byte());
            if (set.patterns.empty()) continue;
            auto start = std::chrono::steady_clock::now();
            reset_compress_call_count();
            MerkleTree tree = build_tree(set, mimc);
            std::uint64_t build_calls = compress_call_count();
            MerkleProof proof = prove_membership(tree, set, set.patterns.front(), mimc);
            reset_compress_call_count();
            verify_membership(tree.root(), proof, mimc);
            std::uint64_t verify_calls = compress_call_count() - proof.leaf_bytes.size();
            double ms = elapsed_ms(start);
            csv << "merkle," << set.patterns.size() << "," << tree.depth << "," << build_calls
                << "," << verify_calls << "," << ms << "\n";
        }
    } else if (opt.suite == "poly") {
        SweepRange range = parse_sweep(opt.sweep, {128, 1024, 128});
        csv << "suite,n,field_muls,wall_ms\n";
        for (std::size_t n = range.min; n <= range.max; n += range.step) {
            std::mt19937_64 rng(0x706f6c79ULL ^ n);
            std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus - 1);
            std::vector<FieldElement> coeffs, points;
            for (std::size_t i = 0; i < n; ++i) coeffs.emplace_back(dist(rng), field);
            while (points.size() < n) points.emplace_back(dist(rng), field);
            Polynomial f{std::move(coeffs)};
            ProductTree tree = build_product_tree(points);
            auto start = std::chrono::steady_clock::now();
            reset_field_mul_count();
            multipoint_eval(f, tree);
            std::uint64_t muls = field_mul_count();
            double ms = elapsed_ms(start);
            csv << "poly," << n << "," << muls << "," << ms << "\n";
        }
    } else if (opt.suite == "circuits") {
        SweepRange range = parse_sweep(opt.sweep, {32, 256, 32});
        csv << tally_csv_header() << "\n";
        MimcParams mimc = MimcParams::create(field);
        const std::size_t t_len = 16;
        for (std::size_t v = range.min; v <= range.max; v += range.step) {
            if (v >= t_len) {
                csv << tally_csv_row(build_naive_circuit(field, v, t_len), "N", v) << "\n";
            }
            csv << tally_csv_row(
                       build_rabin_karp_circuit(field, v, t_len, FieldElement(257, field)),
                       "KP", v)
                << "\n";
            csv << tally_csv_row(build_merkle_circuit(std::max<std::size_t>(1, v / 16), mimc),
                                 "depth", std::max<std::size_t>(1, v / 16))
                << "\n";
            csv << tally_csv_row(build_poly_identity_circuit(field, v, v, v, v), "deg", v) << "\n";
        }
    } else {
        throw InputError("bench: unknown suite '" + opt.suite +
                         "' (naive|rabin-karp|merkle|poly|circuits)");
    }

    emit(opt.out_path, csv.str());
    return kExitValid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zkmatch: rolling-hash matching, MiMC-Merkle commitments, polynomial "
                 "containment certificates, and constraint-count benchmarks"};
    app.require_subcommand(1);

    MatchOptions match_opt;
    CLI::App* match_cmd = app.add_subcommand("match", "search a corpus for patterns");
    match_cmd->add_option("--corpus", match_opt.corpus_path, "corpus directory or line-delimited file")
        ->required();
    match_cmd->add_option("--patterns", match_opt.patterns_path, "pattern file, one per line");
    match_cmd->add_option("--pattern", match_opt.pattern_literals, "pattern literal (repeatable)");
    match_cmd->add_option("--algo", match_opt.algo, "naive|rabin-karp");
    match_cmd->add_option("--modulus", match_opt.modulus, "field modulus (prime)");
    match_cmd->add_option("--base", match_opt.base, "rolling-hash base");
    match_cmd->add_option("--out", match_opt.out_path, "report path (default stdout)");
    match_cmd->add_flag("--fail-on-absent", match_opt.fail_on_absent,
                        "exit 1 when nothing matches");

    CommitOptions commit_opt;
    CLI::App* commit_cmd = app.add_subcommand("commit", "build a Merkle commitment over legal windows");
    commit_cmd->add_option("--corpus", commit_opt.corpus_path, "corpus directory or file")->required();
    commit_cmd->add_option("--window-len", commit_opt.window_len, "window length T")->required();
    commit_cmd->add_option("--policy", commit_opt.policy, "alphabet policy (url-unreserved|any)");
    commit_cmd->add_option("--seed", commit_opt.seed, "MiMC constant seed");
    commit_cmd->add_option("--modulus", commit_opt.modulus, "field modulus (prime, >= 257)");
    commit_cmd->add_option("--out", commit_opt.out_path, "commitment path (default stdout)");

    ProveOptions prove_opt;
    CLI::App* prove_cmd = app.add_subcommand("prove", "produce a membership proof or certificate");
    prove_cmd->add_option("--mode", prove_opt.mode, "merkle|poly-contain|poly-absent");
    prove_cmd->add_option("--corpus", prove_opt.corpus_path, "corpus directory or file")->required();
    prove_cmd->add_option("--commitment", prove_opt.commitment_path, "commitment file (merkle mode)");
    prove_cmd->add_option("--pattern", prove_opt.pattern_literal, "pattern literal")->required();
    prove_cmd->add_option("--doc", prove_opt.doc_id, "document id (poly modes, multi-doc corpora)");
    prove_cmd->add_option("--seed", prove_opt.seed, "MiMC constant seed");
    prove_cmd->add_option("--challenge-seed", prove_opt.challenge_seed, "certificate challenge seed");
    prove_cmd->add_option("--modulus", prove_opt.modulus, "field modulus (poly modes)");
    prove_cmd->add_option("--base", prove_opt.base, "rolling-hash base (poly modes)");
    prove_cmd->add_option("--out", prove_opt.out_path, "artifact path (default stdout)");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand("verify", "verify an artifact (never reads the corpus)");
    verify_cmd->add_option("--artifact", verify_opt.artifact_path, "proof or certificate file")
        ->required();
    verify_cmd->add_option("--commitment", verify_opt.commitment_path, "commitment file");
    verify_cmd->add_option("--seed", verify_opt.seed, "MiMC constant seed");
    verify_cmd->add_option("--base", verify_opt.base, "rolling-hash base cross-check");
    verify_cmd->add_option("--window-len", verify_opt.window_len, "window length cross-check");

    BenchOptions bench_opt;
    CLI::App* bench_cmd = app.add_subcommand("bench", "parameter-sweep counters to CSV");
    bench_cmd->add_option("--suite", bench_opt.suite, "naive|rabin-karp|merkle|poly|circuits")
        ->required();
    bench_cmd->add_option("--sweep", bench_opt.sweep, "min:max:step for the primary parameter");
    bench_cmd->add_option("--modulus", bench_opt.modulus, "field modulus");
    bench_cmd->add_option("--out", bench_opt.out_path, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (*match_cmd) return run_match(match_opt);
        if (*commit_cmd) return run_commit(commit_opt);
        if (*prove_cmd) return run_prove(prove_opt);
        if (*verify_cmd) return run_verify(verify_opt);
        if (*bench_cmd) return run_bench(bench_opt);
    } catch (const FingerprintMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFingerprintMismatch;
    } catch (const NotAMemberError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotPresent;
    } catch (const NotContainedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotPresent;
    } catch (const IsContainedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotPresent;
    } catch (const BuildError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmptyCommitment;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
