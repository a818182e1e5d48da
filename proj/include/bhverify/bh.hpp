#pragma once

#include "bhverify/groebner.hpp"
#include "bhverify/poly.hpp"
#include "bhverify/word.hpp"

#include <array>

namespace bhv {

/// The scalar ring R = k[X^{±1}, y, z] underlying the rank-2 quadratic
/// extension. All operations in this header expect polynomials over this
/// ring (same variable set, X Laurent).
RingPtr bh_ring();

/// The ring automorphism fixing y, z and sending X to X^{-1}.
ExactPoly bh_sigma_scalar(const ExactPoly& p);

/// The sigma-derivation on R determined by delta(X) = 2z and
/// delta(y) = delta(z) = 0. Satisfies sigma∘delta = delta,
/// delta∘sigma = -delta and delta∘delta = 0.
ExactPoly bh_delta(const ExactPoly& p);

/// Element A + B*t of the free quadratic extension R ⊕ R*t, with
/// t^2 = y^2 - 1 and the twisted-commutation law t*p = sigma(p)*t + delta(p).
struct BHElement {
    ExactPoly a;  // scalar part
    ExactPoly b;  // t part

    static BHElement zero();
    static BHElement one();
    static BHElement scalar(ExactPoly p);

    BHElement operator+(const BHElement& o) const { return {a + o.a, b + o.b}; }
    BHElement operator-(const BHElement& o) const { return {a - o.a, b - o.b}; }
    BHElement operator-() const { return {-a, -b}; }
    BHElement operator*(const BHElement& o) const;
    bool operator==(const BHElement& o) const { return a == o.a && b == o.b; }

    BHElement pow(long n) const;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

/// Image of a freely reduced word under a -> (X, 0), b -> (y, t-part 1).
/// Multiplicative: eval(w1*w2) = eval(w1)*eval(w2).
BHElement eval_word(const GroupWord& w);

enum class Involution {
    InverseStar,     // anti-involution extending g -> g^{-1}
    CanonicalGamma,  // anti-involution fixing X, y, z and t
    SwapXi,          // involution swapping the two generators
    InvertSigma,     // involution inverting both generators
};

/// Applies the requested (anti-)involution. SwapXi is computed through the
/// four-component decomposition over k[x, y, z] and is defined on all of
/// R ⊕ R*t; the decomposition divisions are exact by construction.
BHElement apply_involution(const BHElement& e, Involution which);

inline BHElement bh_star(const BHElement& e) { return apply_involution(e, Involution::InverseStar); }
inline BHElement bh_gamma(const BHElement& e) { return apply_involution(e, Involution::CanonicalGamma); }
inline BHElement bh_sigma(const BHElement& e) { return apply_involution(e, Involution::InvertSigma); }
inline BHElement bh_xi(const BHElement& e) { return apply_involution(e, Involution::SwapXi); }

/// Difference of the two sides of a relation w1 = w2, split as A + B*t.
/// The palindromic flag records whether sigma(B) = B, which selects the
/// smaller generating set for the associated ideal.
struct RelatorData {
    GroupWord lhs;
    GroupWord rhs;
    ExactPoly A;
    ExactPoly B;
    bool palindromic = false;
};

RelatorData relator_to_AB(const GroupWord& lhs, const GroupWord& rhs);

/// Ideal of t-part obstructions attached to a one-relator presentation:
/// generic generators {A, B, sigma(A) + delta(B), delta(A) + sigma(B)(y^2-1)},
/// or {A, B, sigma(A), delta(A)} in the palindromic case.
struct OneRelatorIdeal {
    std::vector<ExactPoly> generators;
    RelatorData source;
};

/// Builds the generator list. In the palindromic case both generating sets
/// are formed and their mutual ideal equality is asserted through the
/// membership engine (throws on disagreement); pass assert_equality = false
/// to skip that cross-check.
OneRelatorIdeal one_relator_ideal(const RelatorData& rel, const GBOptions& opts,
                                  bool assert_equality = true);

/// Membership of the longitude's image in the even part of the quotient:
/// evaluates the word, extracts the t-part r, and decides r ∈ J with a
/// certificate. A word with zero t-part is trivially a member.
MembershipResult longitude_in_H0(const GroupWord& longitude, const OneRelatorIdeal& ideal,
                                 const GBOptions& opts);

}  // namespace bhv
