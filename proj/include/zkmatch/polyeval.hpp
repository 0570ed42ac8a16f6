#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zkmatch/field.hpp"
#include "zkmatch/hashmatch.hpp"

namespace zkmatch {

/// Dense polynomial over the field, coefficients in ascending degree with no
/// trailing zeros. The zero polynomial is the empty coefficient vector and
/// reports degree -1 (the -infinity sentinel).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static Polynomial constant(FieldElement c);
    /// The monic linear factor x - u.
    static Polynomial linear_root(FieldElement u);

    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const {
        return coeffs_.empty() ? -1 : static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    FieldElement leading() const;

    /// Horner evaluation.
    FieldElement eval(const FieldElement& x) const;

    /// Formal derivative.
    Polynomial derivative() const;

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    std::vector<FieldElement> coeffs_;
    void normalize();
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const FieldElement& c);

/// Coefficient-exact product. Uses the NTT when the result needs >= 64
/// coefficients and the field's two-adicity covers the transform size,
/// schoolbook otherwise; both paths agree coefficient for coefficient.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

struct DivModResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Division with remainder: a = q*d + r, deg(r) < deg(d). Fast path via
/// Newton iteration on reversed polynomials for large balanced operands,
/// classical long division otherwise. Zero divisor throws domain_error.
DivModResult poly_divmod(const Polynomial& a, const Polynomial& d);

/// Binary tree whose leaves are the monic linear factors (x - u_i) and whose
/// internal nodes are the products of their two children; the root expands to
/// prod(x - u_i). Duplicate points are kept (repeated roots).
struct ProductTree {
    struct Node {
        Polynomial poly;
        int left = -1;   // node indices; -1 for leaves
        int right = -1;
        std::size_t lo = 0;  // [lo, hi) slice of points covered
        std::size_t hi = 0;
    };
    std::vector<FieldElement> points;
    std::vector<Node> nodes;
    int root = -1;

    const Polynomial& root_poly() const { return nodes[static_cast<std::size_t>(root)].poly; }
};

ProductTree build_product_tree(const std::vector<FieldElement>& points);

/// f(u_i) for every tree point, by remainder-tree descent. Output order
/// follows the point order.
std::vector<FieldElement> multipoint_eval(const Polynomial& f, const ProductTree& tree);

/// Unique polynomial of degree < n through (points[i], values[i]); points
/// must be distinct. Implemented as fast evaluation of m'(x) followed by the
/// linear combination up the product tree.
Polynomial interpolate(const std::vector<FieldElement>& points,
                       const std::vector<FieldElement>& values);

struct XgcdResult {
    Polynomial g;  // monic gcd
    Polynomial s;
    Polynomial t;  // a*s + b*t = g
};

/// Extended Euclid over the polynomial ring; throws domain_error when both
/// inputs are zero. Cofactors carry the canonical degree bounds
/// deg(s) < deg(b), deg(t) < deg(a) whenever those are meaningful.
XgcdResult poly_xgcd(const Polynomial& a, const Polynomial& b);

/// Bezout certificate (s, t) with a*s + b*t = 1, witnessing coprimality.
struct BezoutCertificate {
    Polynomial s;
    Polynomial t;
};

/// prod(x - h_i) over all window fingerprints of a text, multiplicities kept,
/// so the degree always equals the window count.
struct WindowPolynomial {
    Polynomial poly;
    std::string doc_id;
    std::size_t window_len = 0;
    std::string rolling_fingerprint;
    std::size_t window_count = 0;
};

/// Throws InputError when the text is shorter than the window length.
WindowPolynomial window_polynomial(std::string_view text, const RollingParams& params,
                                   std::string_view doc_id = "");

/// Containment certificate: the quotient Q with w = (x - h) * Q, where h is
/// the pattern fingerprint. Throws NotContainedError when h is not a root.
Polynomial prove_containment(const WindowPolynomial& w, std::string_view pattern,
                             const RollingParams& params);

/// Absence certificate: (s, t) with w*s + (x - h)*t = 1, proving the pattern
/// fingerprint is not among the window hashes. Throws IsContainedError when
/// h is a root (fingerprint-level containment).
BezoutCertificate prove_absence(const WindowPolynomial& w, std::string_view pattern,
                                const RollingParams& params);

/// Full coefficient check plus a Schwartz-Zippel spot check at a pseudorandom
/// challenge point derived from challenge_seed and the serialized inputs.
bool verify_containment(const Polynomial& w, const FieldElement& h, const Polynomial& quotient,
                        std::string_view challenge_seed);
bool verify_absence(const Polynomial& w, const FieldElement& h, const BezoutCertificate& cert,
                    std::string_view challenge_seed);

/// Challenge point r = digest(challenge_seed || serialized inputs) mod p.
FieldElement derive_challenge_point(std::string_view challenge_seed,
                                    const std::vector<const Polynomial*>& polys,
                                    const FieldElement& h);

} // namespace zkmatch
