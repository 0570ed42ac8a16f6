// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and instance counts are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "zkmatch/circuitmodel.hpp"
#include "zkmatch/hashmatch.hpp"
#include "zkmatch/merkle.hpp"
#include "zkmatch/mimc.hpp"
#include "zkmatch/polyeval.hpp"

using namespace zkmatch;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        passed = false;
        if (detail.empty()) detail = why;
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

std::string random_text(std::mt19937_64& rng, std::size_t len, int alphabet) {
    std::uniform_int_distribution<int> dist(0, alphabet - 1);
    std::string s(len, 'a');
    for (auto& ch : s) ch = static_cast<char>('a' + dist(rng));
    return s;
}

const FieldParams& def() { return FieldParams::default_field(); }

// --------------------------------------------------------------------------
// 1. rabin_karp_match == naive_match on 1,000 randomized corpora, including
//    a forced-collision regime under modulus 97. Runtime < 30 s.
Outcome criterion1() {
    Outcome out;
    std::mt19937_64 rng(1001);
    int mismatches = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        const FieldParams& q = (iter % 4 == 0) ? FieldParams::for_modulus(97) : def();
        int alphabet = 2 + static_cast<int>(rng() % 25);
        std::size_t m_docs = 1 + rng() % 4;
        std::size_t t_len = 1 + rng() % 8;

        std::vector<std::string> ids, docs;
        for (std::size_t d = 0; d < m_docs; ++d) {
            ids.push_back("d" + std::to_string(d));
            docs.push_back(random_text(rng, rng() % 513, alphabet));
        }
        Corpus corpus(ids, docs);

        std::vector<std::string> pats;
        std::size_t k_pats = 1 + rng() % 4;
        for (std::size_t k = 0; k < k_pats; ++k) {
            const std::string& host = docs[rng() % m_docs];
            if (k % 2 == 0 && host.size() >= t_len) {
                std::size_t at = rng() % (host.size() - t_len + 1);
                pats.push_back(host.substr(at, t_len));
            } else {
                pats.push_back(random_text(rng, t_len, alphabet));
            }
        }
        PatternSet patterns(pats);
        RollingParams params = RollingParams::with_default_base(q, t_len);

        MatchReport naive = corpus_match(corpus, patterns, params, MatchAlgo::Naive);
        MatchReport rk = corpus_match(corpus, patterns, params, MatchAlgo::RabinKarp);
        for (std::size_t k = 0; k < pats.size(); ++k) {
            if (!(naive.occurrences[k] == rk.occurrences[k])) ++mismatches;
        }
    }
    out.require(mismatches == 0, std::to_string(mismatches) + " occurrence-set mismatches");
    out.detail = "1000 instances, " + std::to_string(mismatches) + " mismatches";
    return out;
}

// --------------------------------------------------------------------------
// 2. Chained roll() equals direct fingerprint() at every offset of 200
//    random texts. Exact equality.
Outcome criterion2() {
    Outcome out;
    std::mt19937_64 rng(1002);
    for (int iter = 0; iter < 200; ++iter) {
        const FieldParams& q = (iter % 3 == 0) ? FieldParams::for_modulus(97) : def();
        int alphabet = 2 + static_cast<int>(rng() % 25);
        std::size_t len = 1 + rng() % 512;
        std::size_t t_len = 1 + rng() % std::min<std::size_t>(len, 32);
        std::string text = random_text(rng, len, alphabet);
        RollingParams params = RollingParams::with_default_base(q, t_len);

        FieldElement h = fingerprint(text.substr(0, t_len), params);
        for (std::size_t i = 0; i + t_len <= text.size(); ++i) {
            if (h != fingerprint(text.substr(i, t_len), params)) {
                out.fail("chain diverged at offset " + std::to_string(i));
                return out;
            }
            if (i + t_len < text.size()) {
                h = roll(h, static_cast<std::uint8_t>(text[i]),
                         static_cast<std::uint8_t>(text[i + t_len]), params);
            }
        }
    }
    if (out.passed) out.detail = "200 texts, every offset exact";
    return out;
}

// --------------------------------------------------------------------------
// 3. Merkle roundtrip on 1..256 leaves plus a full single-component tamper
//    sweep on an 8-leaf tree. Runtime < 10 s.
Outcome criterion3() {
    Outcome out;
    MimcParams mimc = MimcParams::create(def());

    std::vector<std::string> pool;
    for (char a = 'a'; a <= 'z'; ++a) {
        for (char b = 'a'; b <= 'z'; ++b) pool.push_back(std::string{a, b});
    }

    std::size_t proofs = 0;
    for (std::size_t size = 1; size <= 256; ++size) {
        LegalPatternSet set;
        set.window_len = 2;
        set.patterns.assign(pool.begin(), pool.begin() + static_cast<long>(size));
        for (std::size_t i = 0; i < set.patterns.size(); ++i) set.index[set.patterns[i]] = i;
        MerkleTree tree = build_tree(set, mimc);
        for (const std::string& pattern : set.patterns) {
            MerkleProof proof = prove_membership(tree, set, pattern, mimc);
            ++proofs;
            if (!verify_membership(tree.root(), proof, mimc)) {
                out.fail("honest proof failed at size " + std::to_string(size));
                return out;
            }
        }
    }

    LegalPatternSet eight;
    eight.window_len = 2;
    eight.patterns.assign(pool.begin(), pool.begin() + 8);
    for (std::size_t i = 0; i < 8; ++i) eight.index[eight.patterns[i]] = i;
    MerkleTree tree = build_tree(eight, mimc);
    FieldElement one(1, def());
    std::size_t tampers = 0, caught = 0;
    for (const std::string& pattern : eight.patterns) {
        MerkleProof honest = prove_membership(tree, eight, pattern, mimc);
        for (std::size_t l = 0; l < honest.directions.size(); ++l) {
            MerkleProof bad = honest;
            bad.directions[l] ^= 1;
            ++tampers;
            caught += !verify_membership(tree.root(), bad, mimc);
        }
        for (std::size_t l = 0; l < honest.siblings.size(); ++l) {
            MerkleProof bad = honest;
            bad.siblings[l] += one;
            ++tampers;
            caught += !verify_membership(tree.root(), bad, mimc);
        }
        for (std::size_t i = 0; i < honest.leaf_bytes.size(); ++i) {
            MerkleProof bad = honest;
            bad.leaf_bytes[i] = static_cast<char>(bad.leaf_bytes[i] ^ 1);
            ++tampers;
            caught += !verify_membership(tree.root(), bad, mimc);
        }
        ++tampers;
        caught += !verify_membership(tree.root() + one, honest, mimc);
    }
    out.require(caught == tampers, "tamper sweep: " + std::to_string(tampers - caught) +
                                       " mutations slipped through");
    out.detail = std::to_string(proofs) + " honest proofs, " + std::to_string(tampers) +
                 "/" + std::to_string(tampers) + " tampers rejected";
    return out;
}

// --------------------------------------------------------------------------
// 4. Polynomial engine: multipoint vs Horner (100 instances up to n=1024),
//    interpolate after evaluate is the identity, Newton division equals long
//    division. Exact equality throughout.
Outcome criterion4() {
    Outcome out;
    std::mt19937_64 rng(1004);
    std::uniform_int_distribution<std::uint64_t> dist(0, def().modulus - 1);

    auto random_poly = [&](std::size_t len) {
        std::vector<FieldElement> v;
        v.reserve(len);
        for (std::size_t i = 0; i < len; ++i) v.emplace_back(dist(rng), def());
        return Polynomial(std::move(v));
    };
    auto distinct_points = [&](std::size_t n) {
        std::vector<FieldElement> pts;
        std::unordered_set<std::uint64_t> seen;
        while (pts.size() < n) {
            std::uint64_t v = dist(rng);
            if (seen.insert(v).second) pts.emplace_back(v, def());
        }
        return pts;
    };

    for (int iter = 0; iter < 100; ++iter) {
        std::size_t n = (iter < 4) ? 1024 : 1 + rng() % 512;
        std::vector<FieldElement> points = distinct_points(n);
        Polynomial f = random_poly(n);
        ProductTree tree = build_product_tree(points);
        std::vector<FieldElement> vals = multipoint_eval(f, tree);
        for (std::size_t i = 0; i < n; ++i) {
            if (vals[i] != f.eval(points[i])) {
                out.fail("multipoint != Horner at n=" + std::to_string(n));
                return out;
            }
        }
    }

    for (int iter = 0; iter < 20; ++iter) {
        std::size_t n = 2 + rng() % 200;
        std::vector<FieldElement> points = distinct_points(n);
        Polynomial f = random_poly(n);
        ProductTree tree = build_product_tree(points);
        if (interpolate(points, multipoint_eval(f, tree)) != f) {
            out.fail("interpolate(eval(f)) != f at n=" + std::to_string(n));
            return out;
        }
    }

    for (int iter = 0; iter < 20; ++iter) {
        Polynomial a = random_poly(200 + rng() % 200);
        Polynomial d = random_poly(65 + rng() % 80);
        if (d.is_zero()) continue;
        DivModResult fast = poly_divmod(a, d);  // Newton path at these sizes
        // Long-division reference.
        std::vector<FieldElement> rem = a.coeffs();
        std::size_t d_len = d.coeffs().size();
        std::vector<FieldElement> quot(rem.size() - d_len + 1, FieldElement(0, def()));
        FieldElement inv_lead = d.leading().inv();
        for (std::size_t i = quot.size(); i-- > 0;) {
            FieldElement factor = rem[i + d_len - 1] * inv_lead;
            quot[i] = factor;
            for (std::size_t j = 0; j < d_len; ++j) rem[i + j] -= factor * d.coeffs()[j];
        }
        rem.resize(d_len - 1, FieldElement(0, def()));
        if (fast.quotient != Polynomial(quot) || fast.remainder != Polynomial(rem)) {
            out.fail("fast division disagrees with long division");
            return out;
        }
    }
    if (out.passed) out.detail = "100 eval + 20 interpolation + 20 division instances, all exact";
    return out;
}

// --------------------------------------------------------------------------
// 5. Exactly one of containment/absence succeeds on 500 random pairs; every
//    emitted certificate verifies; every tampered certificate fails.
Outcome criterion5() {
    Outcome out;
    std::mt19937_64 rng(1005);
    FieldElement one(1, def());
    int contained = 0, absent = 0;
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t t_len = 1 + rng() % 4;
        std::size_t len = t_len + rng() % 80;
        std::string text = random_text(rng, len, 4);
        std::string pattern = (iter % 2 == 0 && len >= t_len)
                                  ? text.substr(rng() % (len - t_len + 1), t_len)
                                  : random_text(rng, t_len, 4);
        RollingParams params = RollingParams::with_default_base(def(), t_len);

        WindowPolynomial w;
        try {
            w = window_polynomial(text, params);
        } catch (...) {
            out.fail("window_polynomial threw unexpectedly");
            return out;
        }
        FieldElement h = fingerprint(pattern, params);

        bool got_containment = false, got_absence = false;
        Polynomial quotient;
        BezoutCertificate cert;
        try {
            quotient = prove_containment(w, pattern, params);
            got_containment = true;
        } catch (const NotContainedError&) {
        } catch (...) {
            out.fail("prove_containment threw an unexpected exception");
            return out;
        }
        try {
            cert = prove_absence(w, pattern, params);
            got_absence = true;
        } catch (const IsContainedError&) {
        } catch (...) {
            out.fail("prove_absence threw an unexpected exception");
            return out;
        }
        if (got_containment == got_absence) {
            out.fail("dichotomy violated at iteration " + std::to_string(iter));
            return out;
        }

        if (got_containment) {
            ++contained;
            if (!verify_containment(w.poly, h, quotient, "acceptance")) {
                out.fail("honest containment certificate rejected");
                return out;
            }
            Polynomial bad = poly_add(quotient, Polynomial::constant(one));
            if (verify_containment(w.poly, h, bad, "acceptance")) {
                out.fail("tampered containment certificate accepted");
                return out;
            }
            if (verify_containment(w.poly, h + one, quotient, "acceptance")) {
                out.fail("containment certificate accepted under the wrong point");
                return out;
            }
        } else {
            ++absent;
            if (!verify_absence(w.poly, h, cert, "acceptance")) {
                out.fail("honest absence certificate rejected");
                return out;
            }
            BezoutCertificate bad = cert;
            bad.t = poly_add(bad.t, Polynomial::constant(one));
            if (verify_absence(w.poly, h, bad, "acceptance")) {
                out.fail("tampered absence certificate accepted");
                return out;
            }
            if (verify_absence(w.poly, h + one, cert, "acceptance")) {
                out.fail("absence certificate accepted under the wrong point");
                return out;
            }
        }
    }
    out.detail = "500 pairs (" + std::to_string(contained) + " contained, " +
                 std::to_string(absent) + " absent), all certificates behaved";
    return out;
}

// --------------------------------------------------------------------------
// 6. Constraint growth shapes: naive doubling ratio in [1.9, 2.1] at T=16,
//    RK exactly affine in KP, poly-identity exactly affine per degree, and
//    closed forms equal enumerated counts on a 20-point grid.
Outcome criterion6() {
    Outcome out;
    FieldElement base(257, def());
    MimcParams mimc = MimcParams::create(def());

    for (std::size_t n : {256u, 512u, 1024u}) {
        double ratio = static_cast<double>(naive_circuit_total(2 * n, 16)) /
                       static_cast<double>(naive_circuit_total(n, 16));
        out.require(ratio >= 1.9 && ratio <= 2.1,
                    "naive ratio at N=" + std::to_string(n) + " is " + std::to_string(ratio));
    }

    // Zero residual against the line through the first two points.
    std::vector<std::uint64_t> rk_totals;
    for (std::size_t kp = 1; kp <= 10; ++kp) {
        rk_totals.push_back(build_rabin_karp_circuit(def(), kp, 16, base).constraints.size());
    }
    std::int64_t slope = static_cast<std::int64_t>(rk_totals[1]) -
                         static_cast<std::int64_t>(rk_totals[0]);
    for (std::size_t i = 0; i < rk_totals.size(); ++i) {
        std::int64_t expect = static_cast<std::int64_t>(rk_totals[0]) +
                              slope * static_cast<std::int64_t>(i);
        out.require(static_cast<std::int64_t>(rk_totals[i]) == expect,
                    "RK totals deviate from the affine fit at KP=" + std::to_string(i + 1));
    }

    // Exactly +1 constraint per +1 degree, in every coordinate.
    std::size_t base_deg[4] = {2, 3, 4, 5};
    std::uint64_t base_total =
        build_poly_identity_circuit(def(), 2, 3, 4, 5).constraints.size();
    for (int coord = 0; coord < 4; ++coord) {
        std::size_t d[4] = {base_deg[0], base_deg[1], base_deg[2], base_deg[3]};
        for (std::size_t bump = 1; bump <= 3; ++bump) {
            d[coord] = base_deg[coord] + bump;
            std::uint64_t total =
                build_poly_identity_circuit(def(), d[0], d[1], d[2], d[3]).constraints.size();
            out.require(total == base_total + bump, "poly-identity total is not affine per degree");
        }
    }

    // 20-point closed-form vs enumeration grid, five points per builder.
    struct NaivePoint { std::size_t n, t; };
    for (NaivePoint p : {NaivePoint{16, 16}, {32, 16}, {64, 8}, {20, 3}, {256, 16}}) {
        out.require(build_naive_circuit(def(), p.n, p.t).constraints.size() ==
                        naive_circuit_total(p.n, p.t),
                    "naive closed form mismatch at N=" + std::to_string(p.n));
    }
    struct RkPoint { std::size_t kp, t; };
    for (RkPoint p : {RkPoint{1, 1}, {1, 16}, {8, 4}, {32, 16}, {100, 2}}) {
        out.require(build_rabin_karp_circuit(def(), p.kp, p.t, base).constraints.size() ==
                        rabin_karp_circuit_total(p.kp, p.t),
                    "RK closed form mismatch at KP=" + std::to_string(p.kp));
    }
    for (std::size_t d : {1u, 2u, 4u, 8u, 16u}) {
        out.require(build_merkle_circuit(d, mimc).constraints.size() ==
                        merkle_circuit_total(d, mimc),
                    "merkle closed form mismatch at depth=" + std::to_string(d));
    }
    struct PolyPoint { std::size_t a, s, b, t; };
    for (PolyPoint p : {PolyPoint{0, 0, 0, 0}, {1, 0, 1, 0}, {5, 4, 1, 4}, {16, 15, 1, 15},
                        {64, 63, 1, 63}}) {
        out.require(build_poly_identity_circuit(def(), p.a, p.s, p.b, p.t).constraints.size() ==
                        poly_identity_circuit_total(p.a, p.s, p.b, p.t),
                    "poly-identity closed form mismatch");
    }
    if (out.passed) out.detail = "ratios in [1.9,2.1], affine fits exact, 20-point grid exact";
    return out;
}

// --------------------------------------------------------------------------
// 7. Circuit satisfiability agrees with the library oracles on 200 randomized
//    instances per circuit kind.
Outcome criterion7() {
    Outcome out;
    std::mt19937_64 rng(1007);
    FieldElement base(257, def());
    MimcParams mimc = MimcParams::create(def());

    auto to_fields = [](std::string_view s) {
        std::vector<FieldElement> v;
        for (char ch : s) v.emplace_back(static_cast<std::uint8_t>(ch), def());
        return v;
    };

    int naive_checked = 0;
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 3 + rng() % 8, t = 1 + rng() % 3;
        if (t > n) t = n;
        std::string text = random_text(rng, n, 2);
        std::string pattern = random_text(rng, t, 2);
        ConstraintSystem cs = build_naive_circuit(def(), n, t);
        Witness w = synthesize_witness(cs, {to_fields(text), to_fields(pattern)});
        bool oracle = !naive_match(text, pattern).empty();
        out.require(check_satisfied(cs, w) == oracle, "naive circuit disagrees with naive_match");
        ++naive_checked;
    }

    for (int iter = 0; iter < 200; ++iter) {
        std::size_t t = 2 + rng() % 4;
        RollingParams rolling(base, t);
        std::string pattern = random_text(rng, t, 6);
        FieldElement fp = fingerprint(pattern, rolling);
        std::vector<FieldElement> hashes;
        for (int k = 0; k < 4; ++k) hashes.emplace_back(rng() % def().modulus, def());
        if (iter % 2 == 0) hashes[rng() % hashes.size()] = fp;
        bool oracle = false;
        for (const auto& h : hashes) oracle |= (h == fp);
        ConstraintSystem cs = build_rabin_karp_circuit(def(), hashes.size(), t, base);
        Witness w = synthesize_witness(cs, {hashes, to_fields(pattern)});
        out.require(check_satisfied(cs, w) == oracle,
                    "RK circuit disagrees with fingerprint membership");
    }

    LegalPatternSet set = filter_windows("abcdefgh", 2, AlphabetPolicy::url_unreserved());
    MerkleTree tree = build_tree(set, mimc);
    ConstraintSystem merkle_cs = build_merkle_circuit(tree.depth, mimc);
    for (int iter = 0; iter < 200; ++iter) {
        const std::string& pattern = set.patterns[rng() % set.patterns.size()];
        MerkleProof proof = prove_membership(tree, set, pattern, mimc);
        if (iter % 2 == 1) {
            proof.directions[rng() % proof.directions.size()] ^= 1;
        }
        bool oracle = verify_membership(tree.root(), proof, mimc);
        CircuitInputs inputs;
        inputs.public_values = {tree.root()};
        inputs.private_values.push_back(hash_bytes(proof.leaf_bytes, mimc));
        for (const auto& s : proof.siblings) inputs.private_values.push_back(s);
        for (std::uint8_t d : proof.directions) inputs.private_values.emplace_back(d, def());
        Witness w = synthesize_witness(merkle_cs, inputs);
        out.require(check_satisfied(merkle_cs, w) == oracle,
                    "merkle circuit disagrees with verify_membership");
    }

    for (int iter = 0; iter < 200; ++iter) {
        std::size_t t_len = 1 + rng() % 3;
        std::string text = random_text(rng, t_len + 5 + rng() % 20, 4);
        std::string pattern = random_text(rng, t_len, 4);
        RollingParams rolling(base, t_len);
        WindowPolynomial wp = window_polynomial(text, rolling);
        FieldElement h = fingerprint(pattern, rolling);
        BezoutCertificate cert;
        try {
            cert = prove_absence(wp, pattern, rolling);
        } catch (const IsContainedError&) {
            continue;  // this instance exercises the containment side elsewhere
        }
        bool tamper = (iter % 2 == 1);
        if (tamper) cert.t = poly_add(cert.t, Polynomial::constant(FieldElement(1, def())));
        bool oracle = verify_absence(wp.poly, h, cert, "acceptance");

        Polynomial x_minus_h = Polynomial::linear_root(h);
        std::size_t deg_a = static_cast<std::size_t>(wp.poly.degree());
        std::size_t deg_s = cert.s.is_zero() ? 0 : static_cast<std::size_t>(cert.s.degree());
        std::size_t deg_t = cert.t.is_zero() ? 0 : static_cast<std::size_t>(cert.t.degree());
        ConstraintSystem cs = build_poly_identity_circuit(def(), deg_a, deg_s, 1, deg_t);
        auto pad = [&](const Polynomial& p, std::size_t deg) {
            std::vector<FieldElement> v(deg + 1, FieldElement(0, def()));
            for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i] = p.coeffs()[i];
            return v;
        };
        CircuitInputs inputs;
        inputs.public_values = {FieldElement(rng() % def().modulus, def())};
        for (auto& c : pad(wp.poly, deg_a)) inputs.private_values.push_back(c);
        for (auto& c : pad(cert.s, deg_s)) inputs.private_values.push_back(c);
        for (auto& c : pad(x_minus_h, 1)) inputs.private_values.push_back(c);
        for (auto& c : pad(cert.t, deg_t)) inputs.private_values.push_back(c);
        Witness w = synthesize_witness(cs, inputs);
        out.require(check_satisfied(cs, w) == oracle,
                    "poly-identity circuit disagrees with verify_absence");
    }

    if (out.passed) out.detail = "4 kinds x 200 instances, zero disagreements";
    (void)naive_checked;
    return out;
}

// --------------------------------------------------------------------------
// 8. Counter laws on the worst-case grid; Merkle verification compress count
//    equals depth; multipoint mul count fits c*n*log^2(n) with c drift < 2x.
Outcome criterion8() {
    Outcome out;

    // Worst-case corpus (a single repeated byte, patterns equal to it) makes
    // the naive and Rabin-Karp operation counts exact, data-independent laws.
    for (std::size_t m : {1u, 4u, 16u}) {
        for (std::size_t n : {64u, 256u}) {
            for (std::size_t k : {1u, 8u}) {
                for (std::size_t t : {4u, 16u}) {
                    std::vector<std::string> ids, docs;
                    for (std::size_t d = 0; d < m; ++d) {
                        ids.push_back("d" + std::to_string(d));
                        docs.emplace_back(n, 'a');
                    }
                    Corpus corpus(ids, docs);
                    PatternSet patterns(std::vector<std::string>(k, std::string(t, 'a')));
                    RollingParams params = RollingParams::with_default_base(def(), t);

                    std::uint64_t windows = m * (n - t + 1);
                    std::uint64_t full_compares = m * k * (n - t + 1) * t;

                    MatchReport naive = corpus_match(corpus, patterns, params, MatchAlgo::Naive);
                    out.require(naive.counters.char_comparisons == full_compares,
                                "naive char-comparison law failed");
                    out.require(naive.counters.window_hashes_computed == 0,
                                "naive computed window hashes");

                    MatchReport rk = corpus_match(corpus, patterns, params, MatchAlgo::RabinKarp);
                    out.require(rk.counters.window_hashes_computed == windows,
                                "RK window-hash law failed");
                    out.require(rk.counters.hash_comparisons == windows,
                                "RK hash-comparison law failed");
                    out.require(rk.counters.char_comparisons == full_compares,
                                "RK verification-comparison law failed");
                }
            }
        }
    }

    // Merkle verification cost: exactly depth compress calls on the path.
    MimcParams mimc = MimcParams::create(def());
    for (std::size_t size : {2u, 5u, 16u, 100u}) {
        std::vector<std::string> pool;
        for (char a = 'a'; a <= 'z' && pool.size() < size; ++a) {
            for (char b = 'a'; b <= 'z' && pool.size() < size; ++b) {
                pool.push_back(std::string{a, b});
            }
        }
        LegalPatternSet set;
        set.window_len = 2;
        set.patterns = pool;
        for (std::size_t i = 0; i < set.patterns.size(); ++i) set.index[set.patterns[i]] = i;
        MerkleTree tree = build_tree(set, mimc);
        MerkleProof proof = prove_membership(tree, set, set.patterns.back(), mimc);
        reset_compress_call_count();
        verify_membership(tree.root(), proof, mimc);
        std::uint64_t path_calls = compress_call_count() - proof.leaf_bytes.size();
        out.require(path_calls == tree.depth, "verification compress count != depth");
    }

    // Multipoint scaling: c = muls / (n log2(n)^2) drifts by less than 2x.
    std::mt19937_64 rng(1008);
    std::uniform_int_distribution<std::uint64_t> dist(0, def().modulus - 1);
    double c_min = 1e300, c_max = 0;
    for (std::size_t n : {128u, 256u, 512u, 1024u}) {
        std::vector<FieldElement> points;
        std::unordered_set<std::uint64_t> seen;
        while (points.size() < n) {
            std::uint64_t v = dist(rng);
            if (seen.insert(v).second) points.emplace_back(v, def());
        }
        std::vector<FieldElement> coeffs;
        for (std::size_t i = 0; i < n; ++i) coeffs.emplace_back(dist(rng), def());
        Polynomial f{std::move(coeffs)};
        ProductTree tree = build_product_tree(points);
        reset_field_mul_count();
        multipoint_eval(f, tree);
        double log2n = std::log2(static_cast<double>(n));
        double c = static_cast<double>(field_mul_count()) /
                   (static_cast<double>(n) * log2n * log2n);
        c_min = std::min(c_min, c);
        c_max = std::max(c_max, c);
    }
    out.require(c_max / c_min < 2.0,
                "multipoint mul-count constant drifts " + std::to_string(c_max / c_min) + "x");

    char buf[96];
    std::snprintf(buf, sizeof(buf), "counter laws exact on 24-point grid; c drift %.2fx",
                  c_max / c_min);
    if (out.passed) out.detail = buf;
    return out;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> fn;
    double time_limit_s;  // 0 = unlimited
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "oracle equivalence (rabin-karp == naive, collision suite included)", criterion1, 30.0},
        {2, "rolling-hash law (chained updates == direct recomputation)", criterion2, 0.0},
        {3, "merkle roundtrip and tamper sweep", criterion3, 10.0},
        {4, "polynomial engine (multipoint/Horner, interpolation, division)", criterion4, 0.0},
        {5, "bezout dichotomy and certificate verification", criterion5, 0.0},
        {6, "constraint growth shapes and closed forms", criterion6, 0.0},
        {7, "satisfiability soundness vs library oracles", criterion7, 0.0},
        {8, "counter laws (match grid, merkle depth, multipoint scaling)", criterion8, 0.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome = c.fn();
        double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && seconds > c.time_limit_s) {
            outcome.fail("runtime " + std::to_string(seconds) + "s exceeds " +
                         std::to_string(c.time_limit_s) + "s");
        }
        std::printf("%s criterion %d: %s (%s; %.2fs)\n", outcome.passed ? "PASS" : "FAIL",
                    c.id, c.name, outcome.detail.c_str(), seconds);
        if (!outcome.passed) ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
}
