#include "zkmatch/polyeval.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "zkmatch/digest.hpp"

namespace zkmatch {

namespace {

constexpr std::size_t kNttThreshold = 64;       // result lengths below this: schoolbook
constexpr std::size_t kFastDivThreshold = 64;   // divisor/quotient degrees below this: long division

const FieldParams& params_of(const Polynomial& a, const Polynomial& b) {
    if (!a.is_zero()) return FieldParams::for_modulus(a.coeffs().front().modulus());
    if (!b.is_zero()) return FieldParams::for_modulus(b.coeffs().front().modulus());
    throw std::domain_error("polyeval: cannot infer field from two zero polynomials");
}

} // namespace

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(FieldElement c) {
    return Polynomial(std::vector<FieldElement>{c});
}

Polynomial Polynomial::linear_root(FieldElement u) {
    FieldElement one = FieldElement::from_raw(1, u.modulus());
    return Polynomial(std::vector<FieldElement>{-u, one});
}

FieldElement Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("polyeval: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    FieldElement acc = FieldElement::from_raw(0, x.modulus());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<FieldElement> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * FieldElement(i % coeffs_[i].modulus(), FieldParams::for_modulus(coeffs_[i].modulus())));
    }
    return Polynomial(std::move(d));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    const auto& longer = ca.size() >= cb.size() ? ca : cb;
    const auto& shorter = ca.size() >= cb.size() ? cb : ca;
    std::vector<FieldElement> out = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i) out[i] += shorter[i];
    return Polynomial(std::move(out));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return a;
    std::vector<FieldElement> out = b.coeffs();
    for (auto& c : out) c = -c;
    return poly_add(a, Polynomial(std::move(out)));
}

Polynomial poly_scale(const Polynomial& a, const FieldElement& c) {
    if (a.is_zero() || c.is_zero()) return Polynomial();
    std::vector<FieldElement> out = a.coeffs();
    for (auto& x : out) x *= c;
    return Polynomial(std::move(out));
}

namespace {

std::vector<FieldElement> schoolbook_mul(const std::vector<FieldElement>& a,
                                         const std::vector<FieldElement>& b,
                                         const FieldParams& field) {
    std::vector<FieldElement> out(a.size() + b.size() - 1, FieldElement(0, field));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Iterative radix-2 Cooley-Tukey over the field; size must be a power of two
// covered by the field's two-adicity.
void ntt_inplace(std::vector<FieldElement>& a, bool inverse, const FieldParams& field) {
    const std::size_t n = a.size();
    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        FieldElement w_len = root_of_unity(field, len);
        if (inverse) w_len = w_len.inv();
        for (std::size_t start = 0; start < n; start += len) {
            FieldElement w = FieldElement(1, field);
            for (std::size_t k = 0; k < len / 2; ++k) {
                FieldElement even = a[start + k];
                FieldElement odd = a[start + k + len / 2] * w;
                a[start + k] = even + odd;
                a[start + k + len / 2] = even - odd;
                w *= w_len;
            }
        }
    }
    if (inverse) {
        FieldElement inv_n = FieldElement(n % field.modulus, field).inv();
        for (auto& x : a) x *= inv_n;
    }
}

bool ntt_applicable(std::size_t result_len, const FieldParams& field) {
    if (result_len < kNttThreshold) return false;
    std::size_t n = std::bit_ceil(result_len);
    return std::bit_width(n) - 1 <= field.two_adicity;
}

std::vector<FieldElement> ntt_mul(const std::vector<FieldElement>& a,
                                  const std::vector<FieldElement>& b,
                                  const FieldParams& field) {
    std::size_t result_len = a.size() + b.size() - 1;
    std::size_t n = std::bit_ceil(result_len);
    std::vector<FieldElement> fa(n, FieldElement(0, field));
    std::vector<FieldElement> fb(n, FieldElement(0, field));
    std::copy(a.begin(), a.end(), fa.begin());
    std::copy(b.begin(), b.end(), fb.begin());
    ntt_inplace(fa, false, field);
    ntt_inplace(fb, false, field);
    for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
    ntt_inplace(fa, true, field);
    fa.resize(result_len, FieldElement(0, field));
    return fa;
}

} // namespace

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    const FieldParams& field = params_of(a, b);
    std::size_t result_len = a.coeffs().size() + b.coeffs().size() - 1;
    if (ntt_applicable(result_len, field)) {
        return Polynomial(ntt_mul(a.coeffs(), b.coeffs(), field));
    }
    return Polynomial(schoolbook_mul(a.coeffs(), b.coeffs(), field));
}

namespace {

Polynomial truncate(const Polynomial& a, std::size_t len) {
    if (a.coeffs().size() <= len) return a;
    std::vector<FieldElement> out(a.coeffs().begin(),
                                  a.coeffs().begin() + static_cast<std::ptrdiff_t>(len));
    return Polynomial(std::move(out));
}

// Coefficient reversal at a fixed nominal degree (pads with zeros first).
Polynomial reverse_at(const Polynomial& a, std::size_t nominal_degree, const FieldParams& field) {
    std::vector<FieldElement> out(nominal_degree + 1, FieldElement(0, field));
    const auto& c = a.coeffs();
    for (std::size_t i = 0; i < c.size() && i <= nominal_degree; ++i) {
        out[nominal_degree - i] = c[i];
    }
    return Polynomial(std::move(out));
}

// Inverse of d mod x^k by Newton iteration; requires d(0) != 0.
Polynomial inverse_mod_xk(const Polynomial& d, std::size_t k, const FieldParams& field) {
    Polynomial g = Polynomial::constant(d.coeffs().front().inv());
    std::size_t precision = 1;
    Polynomial two = Polynomial::constant(FieldElement(2, field));
    while (precision < k) {
        precision = std::min(precision * 2, k);
        // g <- g * (2 - d*g) mod x^precision
        Polynomial dg = truncate(poly_mul(truncate(d, precision), g), precision);
        g = truncate(poly_mul(g, poly_sub(two, dg)), precision);
    }
    return g;
}

DivModResult long_division(const Polynomial& a, const Polynomial& d, const FieldParams& field) {
    std::vector<FieldElement> rem = a.coeffs();
    std::size_t d_len = d.coeffs().size();
    std::size_t q_len = rem.size() - d_len + 1;
    std::vector<FieldElement> quot(q_len, FieldElement(0, field));
    FieldElement lead_inv = d.leading().inv();
    for (std::size_t i = q_len; i-- > 0;) {
        FieldElement factor = rem[i + d_len - 1] * lead_inv;
        if (factor.is_zero()) continue;
        quot[i] = factor;
        for (std::size_t j = 0; j < d_len; ++j) {
            rem[i + j] -= factor * d.coeffs()[j];
        }
    }
    rem.resize(d_len - 1, FieldElement(0, field));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

DivModResult newton_division(const Polynomial& a, const Polynomial& d, const FieldParams& field) {
    std::size_t deg_a = static_cast<std::size_t>(a.degree());
    std::size_t deg_d = static_cast<std::size_t>(d.degree());
    std::size_t deg_q = deg_a - deg_d;
    Polynomial ra = reverse_at(a, deg_a, field);
    Polynomial rd = reverse_at(d, deg_d, field);
    Polynomial rd_inv = inverse_mod_xk(rd, deg_q + 1, field);
    Polynomial rq = truncate(poly_mul(ra, rd_inv), deg_q + 1);
    Polynomial q = reverse_at(rq, deg_q, field);
    Polynomial r = poly_sub(a, poly_mul(q, d));
    return {std::move(q), std::move(r)};
}

} // namespace

DivModResult poly_divmod(const Polynomial& a, const Polynomial& d) {
    if (d.is_zero()) {
        throw std::domain_error("polyeval: division by the zero polynomial");
    }
    if (a.is_zero() || a.degree() < d.degree()) {
        return {Polynomial(), a};
    }
    const FieldParams& field = params_of(a, d);
    std::size_t deg_q = static_cast<std::size_t>(a.degree() - d.degree());
    if (static_cast<std::size_t>(d.degree()) >= kFastDivThreshold && deg_q + 1 >= kFastDivThreshold) {
        return newton_division(a, d, field);
    }
    return long_division(a, d, field);
}

ProductTree build_product_tree(const std::vector<FieldElement>& points) {
    if (points.empty()) {
        throw InputError("polyeval: product tree needs at least one point");
    }
    ProductTree tree;
    tree.points = points;
    tree.nodes.reserve(2 * points.size());

    // Post-order recursive build over [lo, hi) slices.
    auto build = [&tree](auto&& self, std::size_t lo, std::size_t hi) -> int {
        ProductTree::Node node;
        node.lo = lo;
        node.hi = hi;
        if (hi - lo == 1) {
            node.poly = Polynomial::linear_root(tree.points[lo]);
        } else {
            std::size_t mid = lo + (hi - lo) / 2;
            node.left = self(self, lo, mid);
            node.right = self(self, mid, hi);
            node.poly = poly_mul(tree.nodes[static_cast<std::size_t>(node.left)].poly,
                                 tree.nodes[static_cast<std::size_t>(node.right)].poly);
        }
        tree.nodes.push_back(std::move(node));
        return static_cast<int>(tree.nodes.size()) - 1;
    };
    tree.root = build(build, 0, points.size());
    return tree;
}

std::vector<FieldElement> multipoint_eval(const Polynomial& f, const ProductTree& tree) {
    const FieldParams& field = FieldParams::for_modulus(tree.points.front().modulus());
    std::vector<FieldElement> out(tree.points.size(), FieldElement(0, field));

    auto descend = [&](auto&& self, int node_idx, const Polynomial& rem) -> void {
        const auto& node = tree.nodes[static_cast<std::size_t>(node_idx)];
        if (node.left < 0) {
            // Remainder mod (x - u) is the constant f(u).
            out[node.lo] = rem.is_zero() ? FieldElement(0, field) : rem.coeffs().front();
            return;
        }
        const Polynomial& left_poly = tree.nodes[static_cast<std::size_t>(node.left)].poly;
        const Polynomial& right_poly = tree.nodes[static_cast<std::size_t>(node.right)].poly;
        self(self, node.left,
             rem.degree() < left_poly.degree() ? rem : poly_divmod(rem, left_poly).remainder);
        self(self, node.right,
             rem.degree() < right_poly.degree() ? rem : poly_divmod(rem, right_poly).remainder);
    };

    const Polynomial& root_poly = tree.root_poly();
    descend(descend, tree.root,
            f.degree() < root_poly.degree() ? f : poly_divmod(f, root_poly).remainder);
    return out;
}

Polynomial interpolate(const std::vector<FieldElement>& points,
                       const std::vector<FieldElement>& values) {
    if (points.empty() || points.size() != values.size()) {
        throw InputError("polyeval: interpolation needs matching non-empty point/value lists");
    }
    std::unordered_set<std::uint64_t> seen;
    for (const auto& p : points) {
        if (!seen.insert(p.value()).second) {
            throw InputError("polyeval: interpolation points must be distinct");
        }
    }

    ProductTree tree = build_product_tree(points);
    std::vector<FieldElement> m_prime_at = multipoint_eval(tree.root_poly().derivative(), tree);

    // c_i = v_i / m'(u_i); then combine up the tree:
    // node poly = left_combo * right_subproduct + right_combo * left_subproduct.
    std::vector<FieldElement> coefficients;
    coefficients.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        coefficients.push_back(values[i] * m_prime_at[i].inv());
    }

    auto combine = [&](auto&& self, int node_idx) -> Polynomial {
        const auto& node = tree.nodes[static_cast<std::size_t>(node_idx)];
        if (node.left < 0) {
            return coefficients[node.lo].is_zero() ? Polynomial()
                                                   : Polynomial::constant(coefficients[node.lo]);
        }
        Polynomial left_combo = self(self, node.left);
        Polynomial right_combo = self(self, node.right);
        const Polynomial& left_sub = tree.nodes[static_cast<std::size_t>(node.left)].poly;
        const Polynomial& right_sub = tree.nodes[static_cast<std::size_t>(node.right)].poly;
        return poly_add(poly_mul(left_combo, right_sub), poly_mul(right_combo, left_sub));
    };
    return combine(combine, tree.root);
}

XgcdResult poly_xgcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) {
        throw std::domain_error("polyeval: gcd of two zero polynomials");
    }
    const FieldParams& field = params_of(a, b);
    Polynomial one = Polynomial::constant(FieldElement(1, field));

    Polynomial r0 = a, r1 = b;
    Polynomial s0 = one, s1;
    Polynomial t0, t1 = one;
    while (!r1.is_zero()) {
        DivModResult qr = poly_divmod(r0, r1);
        Polynomial r2 = qr.remainder;
        Polynomial s2 = poly_sub(s0, poly_mul(qr.quotient, s1));
        Polynomial t2 = poly_sub(t0, poly_mul(qr.quotient, t1));
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    FieldElement lead_inv = r0.leading().inv();
    return {poly_scale(r0, lead_inv), poly_scale(s0, lead_inv), poly_scale(t0, lead_inv)};
}

WindowPolynomial window_polynomial(std::string_view text, const RollingParams& params,
                                   std::string_view doc_id) {
    if (text.size() < params.window_len) {
        throw InputError("polyeval: text shorter than the window length");
    }
    std::vector<FieldElement> hashes;
    hashes.reserve(text.size() - params.window_len + 1);
    FieldElement h = fingerprint(text.substr(0, params.window_len), params);
    hashes.push_back(h);
    for (std::size_t i = 0; i + params.window_len < text.size(); ++i) {
        h = roll(h, static_cast<std::uint8_t>(text[i]),
                 static_cast<std::uint8_t>(text[i + params.window_len]), params);
        hashes.push_back(h);
    }

    WindowPolynomial w;
    w.doc_id = std::string(doc_id);
    w.window_len = params.window_len;
    w.rolling_fingerprint = params.fingerprint();
    w.window_count = hashes.size();
    w.poly = build_product_tree(hashes).root_poly();
    return w;
}

Polynomial prove_containment(const WindowPolynomial& w, std::string_view pattern,
                             const RollingParams& params) {
    if (pattern.size() != params.window_len) {
        throw InputError("polyeval: pattern length differs from the window length");
    }
    FieldElement h = fingerprint(pattern, params);
    if (!w.poly.eval(h).is_zero()) {
        throw NotContainedError("polyeval: pattern fingerprint is not a root of the window polynomial");
    }
    DivModResult qr = poly_divmod(w.poly, Polynomial::linear_root(h));
    // h is a root, so the division is exact.
    return qr.quotient;
}

BezoutCertificate prove_absence(const WindowPolynomial& w, std::string_view pattern,
                                const RollingParams& params) {
    if (pattern.size() != params.window_len) {
        throw InputError("polyeval: pattern length differs from the window length");
    }
    FieldElement h = fingerprint(pattern, params);
    if (w.poly.eval(h).is_zero()) {
        throw IsContainedError("polyeval: pattern fingerprint is contained (root of the window polynomial)");
    }
    XgcdResult xg = poly_xgcd(w.poly, Polynomial::linear_root(h));
    // gcd(w, x-h) = 1 since x-h is irreducible and h is not a root.
    return {xg.s, xg.t};
}

FieldElement derive_challenge_point(std::string_view challenge_seed,
                                    const std::vector<const Polynomial*>& polys,
                                    const FieldElement& h) {
    const FieldParams& field = FieldParams::for_modulus(h.modulus());
    std::string material(challenge_seed);
    material += "|" + std::to_string(field.modulus) + "|" + to_hex(h);
    for (const Polynomial* p : polys) {
        material += "|";
        for (const FieldElement& c : p->coeffs()) material += to_hex(c);
    }
    return field_from_digest(sha256(material), field);
}

bool verify_containment(const Polynomial& w, const FieldElement& h, const Polynomial& quotient,
                        std::string_view challenge_seed) {
    Polynomial recomposed = poly_mul(Polynomial::linear_root(h), quotient);
    if (recomposed != w) return false;
    // Spot check mirroring the in-circuit identity verification.
    FieldElement r = derive_challenge_point(challenge_seed, {&w, &quotient}, h);
    return w.eval(r) == (r - h) * quotient.eval(r);
}

bool verify_absence(const Polynomial& w, const FieldElement& h, const BezoutCertificate& cert,
                    std::string_view challenge_seed) {
    const FieldParams& field = FieldParams::for_modulus(h.modulus());
    Polynomial one = Polynomial::constant(FieldElement(1, field));
    Polynomial lhs = poly_add(poly_mul(w, cert.s),
                              poly_mul(Polynomial::linear_root(h), cert.t));
    if (lhs != one) return false;
    FieldElement r = derive_challenge_point(challenge_seed, {&w, &cert.s, &cert.t}, h);
    FieldElement spot = w.eval(r) * cert.s.eval(r) + (r - h) * cert.t.eval(r);
    return spot == FieldElement(1, field);
}

} // namespace zkmatch
