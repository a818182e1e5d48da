#include "bhverify/bh.hpp"

#include "bhverify/chebyshev.hpp"
#include "bhverify/groebner.hpp"

#include <stdexcept>

namespace bhv {

RingPtr bh_ring() {
    static RingPtr ring = make_ring({{"X", true}, {"y", false}, {"z", false}});
    return ring;
}

namespace {

enum { VX = 0, VY = 1, VZ = 2 };

void check_bh_ring(const ExactPoly& p) {
    if (!p.ring() || !(*p.ring() == *bh_ring()))
        throw std::invalid_argument("polynomial is not over the (X, y, z) scalar ring");
}

}  // namespace

ExactPoly bh_sigma_scalar(const ExactPoly& p) {
    check_bh_ring(p);
    std::vector<ExactPoly::Term> terms = p.terms();
    for (auto& t : terms) t.exps[VX] = -t.exps[VX];
    return ExactPoly::from_terms(p.ring(), std::move(terms));
}

ExactPoly bh_delta(const ExactPoly& p) {
    check_bh_ring(p);
    // delta is R-linear over k[y,z] and vanishes there, so it is determined
    // by its values on X powers:
    //   delta(X^e) = 2z * (X^{e-1} + X^{e-3} + ... + X^{1-e})        e > 0
    //   delta(X^e) = -2z * (X^{e+1} + X^{e+3} + ... + X^{-e-1})      e < 0
    std::vector<ExactPoly::Term> out;
    for (const auto& t : p.terms()) {
        std::int32_t e = t.exps[VX];
        if (e == 0) continue;
        Rational c = t.coeff * 2;
        std::int32_t from, to;
        if (e > 0) {
            from = 1 - e;
            to = e - 1;
        } else {
            c = -c;
            from = e + 1;
            to = -e - 1;
        }
        for (std::int32_t k = from; k <= to; k += 2) {
            ExactPoly::Term nt = t;
            nt.exps[VX] = k;
            nt.exps[VZ] += 1;
            nt.coeff = c;
            out.push_back(std::move(nt));
        }
    }
    return ExactPoly::from_terms(p.ring(), std::move(out));
}

BHElement BHElement::zero() {
    return {ExactPoly::zero(bh_ring()), ExactPoly::zero(bh_ring())};
}

BHElement BHElement::one() {
    return {ExactPoly::constant(bh_ring(), 1), ExactPoly::zero(bh_ring())};
}

BHElement BHElement::scalar(ExactPoly p) {
    check_bh_ring(p);
    return {std::move(p), ExactPoly::zero(bh_ring())};
}

BHElement BHElement::operator*(const BHElement& o) const {
    // (A + Bt)(C + Dt) with t*p = sigma(p)*t + delta(p) and t^2 = y^2 - 1:
    //   scalar: A*C + B*delta(C) + B*sigma(D)*(y^2 - 1)
    //   t part: A*D + B*sigma(C) + B*delta(D)
    static const ExactPoly tsq = []() {
        ExactPoly y = ExactPoly::variable(bh_ring(), "y");
        return y * y - ExactPoly::constant(bh_ring(), 1);
    }();
    return {a * o.a + b * bh_delta(o.a) + b * bh_sigma_scalar(o.b) * tsq,
            a * o.b + b * bh_sigma_scalar(o.a) + b * bh_delta(o.b)};
}

BHElement BHElement::pow(long n) const {
    if (n < 0) throw std::invalid_argument("BHElement::pow: negative exponent");
    BHElement result = one();
    BHElement base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

BHElement eval_word(const GroupWord& w) {
    const RingPtr& R = bh_ring();
    BHElement acc = BHElement::one();
    ExactPoly y = ExactPoly::variable(R, "y");
    for (const auto& l : w.letters()) {
        BHElement factor;
        if (l.gen == 'a') {
            factor = BHElement::scalar(ExactPoly::variable(R, "X", static_cast<std::int32_t>(l.exp)));
        } else {
            // b^k = T_|k|(y) + sign(k) U_{|k|-1}(y) t
            long k = l.exp;
            long m = k < 0 ? -k : k;
            ExactPoly tpart = cheb_u(m - 1, y);
            if (k < 0) tpart = -tpart;
            factor = {cheb_t(m, y), std::move(tpart)};
        }
        acc = acc * factor;
    }
    return acc;
}

namespace {

/// Splits p = even + odd where sigma fixes even and negates odd, and odd is
/// divisible by X - X^{-1}; returns (even, odd/(X - X^{-1})).
std::pair<ExactPoly, ExactPoly> even_odd_split(const ExactPoly& p) {
    ExactPoly sp = bh_sigma_scalar(p);
    ExactPoly even = (p + sp) * Rational(1, 2);
    ExactPoly odd = (p - sp) * Rational(1, 2);
    ExactPoly xmxi = ExactPoly::variable(bh_ring(), "X") - ExactPoly::variable(bh_ring(), "X", -1);
    return {std::move(even), exact_div(odd, xmxi, "X")};
}

/// Swaps the roles of the two generators on a sigma-invariant scalar: such
/// elements are polynomials in x = (X + X^{-1})/2, y, z, and the swap
/// exchanges x and y. The input must be sigma-invariant.
ExactPoly swap_xy_invariant(const ExactPoly& p) {
    const RingPtr& R = bh_ring();
    ExactPoly X = ExactPoly::variable(R, "X");
    ExactPoly Xi = ExactPoly::variable(R, "X", -1);
    ExactPoly y = ExactPoly::variable(R, "y");
    ExactPoly x = (X + Xi) * Rational(1, 2);
    if (bh_sigma_scalar(p) != p)
        throw std::invalid_argument("swap involution applied to a non-symmetric scalar");
    // Peel the extreme X powers with Big T (T_n(X + X^{-1}) = X^n + X^{-n}),
    // swapping each peeled layer coef(y,z) * T_n(2x) to coef(x,z) * T_n(2y).
    ExactPoly rest = p;
    ExactPoly out = ExactPoly::zero(R);
    while (!rest.is_zero()) {
        std::int32_t top = rest.max_abs_exponent(VX);
        if (top == 0) {
            out += rest.substitute({{"y", x}});
            break;
        }
        std::vector<ExactPoly::Term> coef_terms;
        for (const auto& t : rest.terms())
            if (t.exps[VX] == top) {
                auto nt = t;
                nt.exps[VX] = 0;
                coef_terms.push_back(std::move(nt));
            }
        ExactPoly coef = ExactPoly::from_terms(R, std::move(coef_terms));
        rest -= coef * big_t(top, X + Xi);
        out += coef.substitute({{"y", x}}) * big_t(top, y * Rational(2));
    }
    return out;
}

}  // namespace

BHElement apply_involution(const BHElement& e, Involution which) {
    switch (which) {
        case Involution::InverseStar:
            // star(A + Bt) = sigma(A) + delta(B) - B t
            return {bh_sigma_scalar(e.a) + bh_delta(e.b), -e.b};
        case Involution::CanonicalGamma:
            // gamma(A + Bt) = A + delta(B) + sigma(B) t
            return {e.a + bh_delta(e.b), bh_sigma_scalar(e.b)};
        case Involution::InvertSigma:
            return {bh_sigma_scalar(e.a), -bh_sigma_scalar(e.b)};
        case Involution::SwapXi: {
            // Decompose as P0 + P1|a| + P2|b| + P3|ab| with Pi in k[x,y,z],
            // where |a| = (X - X^{-1})/2, |b| = t, |ab| = (y(X - X^{-1})/2
            // - z) + X t. The swap fixes that shape with coefficients
            // swapped in x <-> y and |ab| replaced by its mirror
            // 2y|a| + 2x|b| - |ab|.
            const RingPtr& R = bh_ring();
            ExactPoly y = ExactPoly::variable(R, "y");
            ExactPoly z = ExactPoly::variable(R, "z");
            ExactPoly X = ExactPoly::variable(R, "X");
            ExactPoly Xi = ExactPoly::variable(R, "X", -1);
            ExactPoly x = (X + Xi) * Rational(1, 2);
            ExactPoly half_d = (X - Xi) * Rational(1, 2);

            auto [b0, b1] = even_odd_split(e.b);   // B = b0 + b1 (X - X^{-1})
            ExactPoly p3 = b1 * Rational(2);
            ExactPoly p2 = b0 - p3 * x;
            auto [a0, a1] = even_odd_split(e.a);   // A = a0 + a1 (X - X^{-1})
            ExactPoly p0 = a0 + p3 * z;
            ExactPoly p1 = a1 * Rational(2) - p3 * y;

            ExactPoly q0 = swap_xy_invariant(p0);
            ExactPoly q1 = swap_xy_invariant(p1);
            ExactPoly q2 = swap_xy_invariant(p2);
            ExactPoly q3 = swap_xy_invariant(p3);

            ExactPoly c_a = q2 + q3 * y * Rational(2);   // coefficient of |a|
            ExactPoly c_b = q1 + q3 * x * Rational(2);   // coefficient of |b|
            ExactPoly c_ab = -q3;
            ExactPoly scalar = q0 + c_a * half_d + c_ab * (y * half_d - z);
            ExactPoly tpart = c_b + c_ab * X;
            return {std::move(scalar), std::move(tpart)};
        }
    }
    throw std::logic_error("apply_involution: unreachable");
}

RelatorData relator_to_AB(const GroupWord& lhs, const GroupWord& rhs) {
    BHElement diff = eval_word(lhs) - eval_word(rhs);
    RelatorData rel;
    rel.lhs = lhs;
    rel.rhs = rhs;
    rel.A = diff.a;
    rel.B = diff.b;
    rel.palindromic = bh_sigma_scalar(rel.B) == rel.B;
    return rel;
}

OneRelatorIdeal one_relator_ideal(const RelatorData& rel, const GBOptions& opts,
                                  bool assert_equality) {
    ExactPoly y = ExactPoly::variable(bh_ring(), "y");
    ExactPoly tsq = y * y - ExactPoly::constant(bh_ring(), 1);
    std::vector<ExactPoly> generic = {rel.A, rel.B, bh_sigma_scalar(rel.A) + bh_delta(rel.B),
                                      bh_delta(rel.A) + bh_sigma_scalar(rel.B) * tsq};
    OneRelatorIdeal ideal;
    ideal.source = rel;
    if (!rel.palindromic) {
        ideal.generators = std::move(generic);
        return ideal;
    }
    std::vector<ExactPoly> palindromic = {rel.A, rel.B, bh_sigma_scalar(rel.A), bh_delta(rel.A)};
    if (assert_equality) {
        Verdict same = ideals_equal(palindromic, generic, opts);
        if (same == Verdict::False)
            throw std::logic_error(
                "palindromic and generic generating sets disagree for relator " +
                rel.lhs.to_string() + " = " + rel.rhs.to_string());
        if (same == Verdict::Indeterminate)
            throw std::runtime_error(
                "resource caps hit while comparing generating sets for relator " +
                rel.lhs.to_string() + " = " + rel.rhs.to_string());
    }
    ideal.generators = std::move(palindromic);
    return ideal;
}

MembershipResult longitude_in_H0(const GroupWord& longitude, const OneRelatorIdeal& ideal,
                                 const GBOptions& opts) {
    BHElement image = eval_word(longitude);
    return membership_with_certificate(image.b, ideal.generators, opts);
}

}  // namespace bhv
