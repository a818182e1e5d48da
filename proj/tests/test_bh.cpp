#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bhverify/bh.hpp"
#include "bhverify/chebyshev.hpp"
#include "bhverify/groebner.hpp"

#include <random>

using namespace bhv;

namespace {

ExactPoly parse(const std::string& s) { return parse_poly(bh_ring(), s); }

ExactPoly random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> xe(-4, 4);
    std::uniform_int_distribution<int> ye(0, 3);
    std::uniform_int_distribution<int> ze(0, 2);
    std::uniform_int_distribution<int> num(-6, 6);
    std::vector<ExactPoly::Term> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        ExactPoly::Term t;
        t.exps = {xe(rng), ye(rng), ze(rng)};
        t.coeff = Rational(num(rng));
        terms.push_back(std::move(t));
    }
    return ExactPoly::from_terms(bh_ring(), std::move(terms));
}

BHElement random_element(std::mt19937& rng) {
    return {random_scalar(rng), random_scalar(rng)};
}

GroupWord random_word(std::mt19937& rng, int max_syllables = 5) {
    std::uniform_int_distribution<int> len(0, max_syllables);
    std::uniform_int_distribution<int> gen(0, 1);
    std::uniform_int_distribution<int> exp(-3, 3);
    GroupWord w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        int e = exp(rng);
        if (e == 0) e = 1;
        w.append(gen(rng) ? 'a' : 'b', e);
    }
    return w;
}

GroupWord reversed(const GroupWord& w) {
    GroupWord out;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.append(it->gen, it->exp);
    return out;
}

GroupWord exponent_negated(const GroupWord& w) {
    GroupWord out;
    for (const auto& l : w.letters()) out.append(l.gen, -l.exp);
    return out;
}

GroupWord generators_swapped(const GroupWord& w) {
    GroupWord out;
    for (const auto& l : w.letters()) out.append(l.gen == 'a' ? 'b' : 'a', l.exp);
    return out;
}

}  // namespace

TEST_CASE("sigma on scalars") {
    CHECK(bh_sigma_scalar(parse("X")) == parse("X^-1"));
    CHECK(bh_sigma_scalar(parse("y*z")) == parse("y*z"));
    CHECK(bh_sigma_scalar(parse("X^3*y - 2*X^-2*z")) == parse("X^-3*y - 2*X^2*z"));
    std::mt19937 rng(1);
    for (int i = 0; i < 1000; ++i) {
        ExactPoly p = random_scalar(rng);
        CHECK(bh_sigma_scalar(bh_sigma_scalar(p)) == p);
    }
}

TEST_CASE("delta on generators and closed powers") {
    CHECK(bh_delta(parse("X")) == parse("2*z"));
    CHECK(bh_delta(parse("y^3*z")).is_zero());
    CHECK(bh_delta(parse("X^3")) == parse("2*X^2*z + 2*z + 2*X^-2*z"));
    CHECK(bh_delta(parse("X^-1")) == parse("-2*z"));
    CHECK(bh_delta(parse("5")).is_zero());
}

TEST_CASE("delta matches the product-rule oracle on X powers") {
    // Independent route: delta(X^e) from delta(f*g) = sigma(f)*delta(g) + delta(f)*g
    // applied one X at a time, in both directions.
    ExactPoly X = parse("X");
    ExactPoly Xi = parse("X^-1");
    ExactPoly dX = parse("2*z");
    ExactPoly dXi = parse("-2*z");
    ExactPoly acc_pos = X, dacc_pos = dX;
    ExactPoly acc_neg = Xi, dacc_neg = dXi;
    for (int e = 2; e <= 8; ++e) {
        dacc_pos = bh_sigma_scalar(acc_pos) * dX + dacc_pos * X;
        acc_pos = acc_pos * X;
        CHECK(bh_delta(acc_pos) == dacc_pos);
        dacc_neg = bh_sigma_scalar(acc_neg) * dXi + dacc_neg * Xi;
        acc_neg = acc_neg * Xi;
        CHECK(bh_delta(acc_neg) == dacc_neg);
    }
}

TEST_CASE("delta is a sigma-derivation with sigma*delta = delta, delta*sigma = -delta") {
    std::mt19937 rng(2);
    for (int i = 0; i < 10000; ++i) {
        ExactPoly p = random_scalar(rng);
        ExactPoly dp = bh_delta(p);
        CHECK(bh_sigma_scalar(dp) == dp);
        CHECK(bh_delta(bh_sigma_scalar(p)) == -dp);
        CHECK(bh_delta(dp).is_zero());
    }
    for (int i = 0; i < 2000; ++i) {
        ExactPoly p = random_scalar(rng);
        ExactPoly q = random_scalar(rng);
        CHECK(bh_delta(p * q) == bh_sigma_scalar(p) * bh_delta(q) + bh_delta(p) * q);
    }
}

TEST_CASE("quadratic extension relations") {
    BHElement t{parse("0"), parse("1")};
    BHElement X = BHElement::scalar(parse("X"));
    CHECK(t * t == BHElement::scalar(parse("y^2 - 1")));
    // t*X = X^-1*t + 2z
    BHElement lhs = t * X;
    CHECK(lhs.a == parse("2*z"));
    CHECK(lhs.b == parse("X^-1"));
}

TEST_CASE("multiplication is associative and distributive") {
    std::mt19937 rng(3);
    for (int i = 0; i < 1000; ++i) {
        BHElement u = random_element(rng);
        BHElement v = random_element(rng);
        BHElement w = random_element(rng);
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * (v + w) == u * v + u * w);
    }
}

TEST_CASE("word evaluation basics") {
    CHECK(eval_word(GroupWord::parse("1")) == BHElement::one());
    BHElement a = eval_word(GroupWord::parse("a"));
    CHECK(a.a == parse("X"));
    CHECK(a.b == parse("0"));
    BHElement b = eval_word(GroupWord::parse("b"));
    CHECK(b.a == parse("y"));
    CHECK(b.b == parse("1"));
    BHElement binv = eval_word(GroupWord::parse("b^-1"));
    CHECK(binv.a == parse("y"));
    CHECK(binv.b == parse("-1"));
    BHElement ab = eval_word(GroupWord::parse("a b"));
    CHECK(ab.a == parse("X*y"));
    CHECK(ab.b == parse("X"));
}

TEST_CASE("powers of b follow the Chebyshev closed form") {
    ExactPoly y = parse("y");
    for (long k = -6; k <= 6; ++k) {
        if (k == 0) continue;
        GroupWord w;
        w.append('b', k);
        BHElement e = eval_word(w);
        long m = k < 0 ? -k : k;
        CHECK(e.a == cheb_t(m, y));
        CHECK(e.b == (k < 0 ? -cheb_u(m - 1, y) : cheb_u(m - 1, y)));
    }
}

TEST_CASE("word evaluation is a group homomorphism") {
    std::mt19937 rng(4);
    for (int i = 0; i < 300; ++i) {
        GroupWord u = random_word(rng);
        GroupWord v = random_word(rng);
        CHECK(eval_word(u * v) == eval_word(u) * eval_word(v));
        CHECK(eval_word(u) * eval_word(u.inverse()) == BHElement::one());
    }
}

TEST_CASE("star realizes inversion, gamma reversal, sigma exponent flip, xi the swap") {
    std::mt19937 rng(5);
    for (int i = 0; i < 150; ++i) {
        GroupWord w = random_word(rng);
        BHElement e = eval_word(w);
        CHECK(bh_star(e) == eval_word(w.inverse()));
        CHECK(bh_gamma(e) == eval_word(reversed(w)));
        CHECK(bh_sigma(e) == eval_word(exponent_negated(w)));
        CHECK(bh_xi(e) == eval_word(generators_swapped(w)));
    }
}

TEST_CASE("xi swaps the two generators in both directions") {
    CHECK(bh_xi(eval_word(GroupWord::parse("a b"))) == eval_word(GroupWord::parse("b a")));
    CHECK(bh_xi(eval_word(GroupWord::parse("a"))) == eval_word(GroupWord::parse("b")));
    CHECK(bh_xi(eval_word(GroupWord::parse("b^2 a^-1"))) ==
          eval_word(GroupWord::parse("a^2 b^-1")));
}

TEST_CASE("involutions square to the identity") {
    std::mt19937 rng(6);
    for (int i = 0; i < 400; ++i) {
        BHElement e = random_element(rng);
        CHECK(bh_star(bh_star(e)) == e);
        CHECK(bh_gamma(bh_gamma(e)) == e);
        CHECK(bh_sigma(bh_sigma(e)) == e);
        CHECK(bh_xi(bh_xi(e)) == e);
    }
}

TEST_CASE("star and gamma are anti-multiplicative, sigma and xi multiplicative") {
    std::mt19937 rng(7);
    for (int i = 0; i < 250; ++i) {
        BHElement u = random_element(rng);
        BHElement v = random_element(rng);
        CHECK(bh_star(u * v) == bh_star(v) * bh_star(u));
        CHECK(bh_gamma(u * v) == bh_gamma(v) * bh_gamma(u));
        CHECK(bh_sigma(u * v) == bh_sigma(u) * bh_sigma(v));
        CHECK(bh_xi(u * v) == bh_xi(u) * bh_xi(v));
    }
}

TEST_CASE("sigma on elements matches the scalar maps") {
    std::mt19937 rng(8);
    for (int i = 0; i < 200; ++i) {
        BHElement e = random_element(rng);
        BHElement s = bh_sigma(e);
        CHECK(s.a == bh_sigma_scalar(e.a));
        CHECK(s.b == -bh_sigma_scalar(e.b));
    }
}

TEST_CASE("relator difference splits as A + Bt") {
    GroupWord lhs = GroupWord::parse("a b a");
    GroupWord rhs = GroupWord::parse("b^2");
    RelatorData rel = relator_to_AB(lhs, rhs);
    BHElement diff = eval_word(lhs) - eval_word(rhs);
    CHECK(rel.A == diff.a);
    CHECK(rel.B == diff.b);
    CHECK(rel.palindromic);

    // (a b^2)^2 = b^5 has a non-symmetric t part
    RelatorData rel2 = relator_to_AB(GroupWord::parse("a b^2 a b^2"), GroupWord::parse("b^5"));
    CHECK(!rel2.palindromic);
}

TEST_CASE("one-relator ideal picks the palindromic generators when valid") {
    GBOptions opts;
    RelatorData rel = relator_to_AB(GroupWord::parse("a b a"), GroupWord::parse("b^2"));
    OneRelatorIdeal ideal = one_relator_ideal(rel, opts);
    REQUIRE(ideal.generators.size() == 4);
    CHECK(ideal.generators[0] == rel.A);
    CHECK(ideal.generators[1] == rel.B);
    CHECK(ideal.generators[2] == bh_sigma_scalar(rel.A));
    CHECK(ideal.generators[3] == bh_delta(rel.A));
}

TEST_CASE("one-relator ideal keeps the generic generators otherwise") {
    GBOptions opts;
    RelatorData rel = relator_to_AB(GroupWord::parse("a b^2 a b^2"), GroupWord::parse("b^5"));
    OneRelatorIdeal ideal = one_relator_ideal(rel, opts);
    REQUIRE(ideal.generators.size() == 4);
    ExactPoly tsq = parse("y^2 - 1");
    CHECK(ideal.generators[2] == bh_sigma_scalar(rel.A) + bh_delta(rel.B));
    CHECK(ideal.generators[3] == bh_delta(rel.A) + bh_sigma_scalar(rel.B) * tsq);
}

TEST_CASE("traces are central scalars") {
    std::mt19937 rng(77);
    BHElement ga = eval_word(GroupWord::parse("a"));
    BHElement gb = eval_word(GroupWord::parse("b"));
    for (int i = 0; i < 200; ++i) {
        GroupWord c = random_word(rng);
        BHElement trace = eval_word(c) + bh_star(eval_word(c));
        CHECK(trace.b.is_zero());
        CHECK(trace * ga == ga * trace);
        CHECK(trace * gb == gb * trace);
    }
}

TEST_CASE("word powers satisfy the half-trace recurrence") {
    std::mt19937 rng(78);
    for (int i = 0; i < 60; ++i) {
        GroupWord c = random_word(rng, 4);
        BHElement e = eval_word(c);
        ExactPoly half = (e + bh_star(e)).a * Rational(1, 2);
        for (long n = 0; n <= 5; ++n) {
            BHElement expected =
                BHElement::scalar(cheb_u(n, half)) * e - BHElement::scalar(cheb_u(n - 1, half));
            CHECK(eval_word(c.pow(n + 1)) == expected);
        }
    }
}

TEST_CASE("longitude membership through the t part") {
    GBOptions opts;
    // pure meridian powers have zero t part
    RelatorData rel = relator_to_AB(GroupWord::parse("a b a"), GroupWord::parse("b^2"));
    OneRelatorIdeal ideal = one_relator_ideal(rel, opts, false);
    MembershipResult trivial = longitude_in_H0(GroupWord::parse("a^4"), ideal, opts);
    CHECK(trivial.verdict == Verdict::True);
    CHECK(check_certificate(*trivial.certificate));

    // trefoil longitude
    MembershipResult lon = longitude_in_H0(GroupWord::parse("b^3 a^-6"), ideal, opts);
    CHECK(lon.verdict == Verdict::True);
    CHECK(check_certificate(*lon.certificate));

    // the free group (zero relator) rejects b: its t part is the unit
    RelatorData none = relator_to_AB(GroupWord::parse("a"), GroupWord::parse("a"));
    OneRelatorIdeal zero_ideal = one_relator_ideal(none, opts, false);
    MembershipResult free_b = longitude_in_H0(GroupWord::parse("b"), zero_ideal, opts);
    CHECK(free_b.verdict == Verdict::False);
}
