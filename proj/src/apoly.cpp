#include "bhverify/apoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace bhv {

RingPtr apoly_ring() {
    static RingPtr ring = make_ring({{"m", true}, {"l", true}});
    return ring;
}

namespace {

ExactPoly strip_units(const ExactPoly& p) {
    std::int32_t min_m = 0, min_l = 0;
    bool first = true;
    for (const auto& t : p.terms()) {
        if (first) {
            min_m = t.exps[0];
            min_l = t.exps[1];
            first = false;
        }
        min_m = std::min(min_m, t.exps[0]);
        min_l = std::min(min_l, t.exps[1]);
    }
    return p * ExactPoly::monomial(p.ring(), {-min_m, -min_l}, Rational(1));
}

std::vector<Rational> dense_in_l(const ExactPoly& p) {
    std::int32_t top = 0;
    for (const auto& t : p.terms()) top = std::max(top, t.exps[1]);
    std::vector<Rational> c(static_cast<std::size_t>(top) + 1, Rational(0));
    for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.exps[1])] = t.coeff;
    return c;
}

ExactPoly from_dense_in_l(const std::vector<Rational>& c) {
    ExactPoly out = ExactPoly::zero(apoly_ring());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            out += ExactPoly::monomial(apoly_ring(), {0, static_cast<std::int32_t>(i)}, c[i]);
    return out;
}

}  // namespace

ApolyResult apoly_condition(const ExactPoly& a) {
    if (a.ring() != apoly_ring() && !(*a.ring() == *apoly_ring()))
        throw std::invalid_argument("input must live in k[m^{+-1}, l^{+-1}]");
    if (a.is_zero()) throw std::invalid_argument("input polynomial is zero");

    ExactPoly normalized = strip_units(a);
    for (const auto& t : normalized.terms())
        if (t.exps[0] % 2 != 0)
            throw std::invalid_argument(
                "input is not a polynomial in m^2 up to unit monomials; offending term " +
                ExactPoly::monomial(a.ring(), t.exps, t.coeff).to_string());

    ExactPoly at_one = normalized.substitute({{"m", ExactPoly::constant(apoly_ring(), 1)}});
    ExactPoly dividend = parse_poly(apoly_ring(), "l^2 - 1");

    ApolyResult result;
    if (at_one.is_zero()) {
        result.holds = false;
        result.witness = dividend;
        result.note = "the input vanishes identically at m^2 = 1";
        return result;
    }

    std::vector<Rational> divisor = dense_in_l(strip_units(at_one));
    std::vector<Rational> rem = dense_in_l(dividend);
    std::vector<Rational> quot(3, Rational(0));
    const std::size_t dd = divisor.size() - 1;
    for (;;) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.size() <= dd) break;
        std::size_t shift = rem.size() - 1 - dd;
        Rational factor = rem.back() / divisor.back();
        quot[shift] = factor;
        for (std::size_t i = 0; i <= dd; ++i) rem[shift + i] -= factor * divisor[i];
    }

    if (rem.empty()) {
        result.holds = true;
        result.witness = from_dense_in_l(quot);
        result.note = "the value at m^2 = 1 divides l^2 - 1 exactly";
    } else {
        result.holds = false;
        result.witness = from_dense_in_l(rem);
        result.note = "nonzero remainder after dividing l^2 - 1 by the value at m^2 = 1";
    }
    return result;
}

}  // namespace bhv
