#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bhverify/chebyshev.hpp"
#include "bhverify/torus.hpp"

using namespace bhv;

namespace {

ExactPoly parse(const std::string& s) { return parse_poly(bh_ring(), s); }

const CoveringStep* find_step(const CoveringPlan& plan, long long p) {
    for (const CoveringStep& s : plan.steps)
        if (s.p == p) return &s;
    return nullptr;
}

}  // namespace

TEST_CASE("presentations spell out the expected words") {
    TorusPresentation p2 = torus_presentation(TorusFamily::SuccessorPair, 2);
    CHECK(p2.relator_lhs.to_string() == "a b a");
    CHECK(p2.relator_rhs.to_string() == "b^2");
    CHECK(p2.meridian.to_string() == "a");
    CHECK(p2.longitude.to_string() == "b^3 a^-6");

    TorusPresentation p3 = torus_presentation(TorusFamily::SuccessorPair, 3);
    CHECK(p3.relator_lhs.to_string() == "a b a b a");
    CHECK(p3.relator_rhs.to_string() == "b^3");
    CHECK(p3.longitude.to_string() == "b^4 a^-12");

    TorusPresentation q3 = torus_presentation(TorusFamily::DoublePlusOne, 3);
    CHECK(q3.relator_lhs.to_string() == "a b^2 a b^2 a b^2");
    CHECK(q3.relator_rhs.to_string() == "b^7");
    CHECK(q3.longitude.to_string() == "b^7 a^-21");

    CHECK_THROWS_AS(torus_presentation(TorusFamily::SuccessorPair, 1), std::invalid_argument);
    CHECK_THROWS_AS(torus_presentation(TorusFamily::SuccessorPair, -2), std::invalid_argument);
    CHECK_THROWS_AS(torus_presentation(TorusFamily::DoublePlusOne, 0), std::invalid_argument);
}

TEST_CASE("closed-form generators match the expected polynomials for p = 2") {
    std::vector<ExactPoly> gens = torus_ideal_closed_form(TorusFamily::SuccessorPair, 2);
    REQUIRE(gens.size() == 4);
    // U_1(Q) = 2Q = (X + X^-1) y + 2z, U_2(y) = 4y^2 - 1
    ExactPoly u1q = parse("X*y + X^-1*y + 2*z");
    ExactPoly u2y = parse("4*y^2 - 1");
    CHECK(gens[0] == u1q * parse("X") - u2y);
    CHECK(gens[1] == u1q * parse("X^-1") - u2y);
    CHECK(gens[2] == parse("1") - parse("2*y"));
    ExactPoly q = parse("1/2*X*y + 1/2*X^-1*y + z");
    CHECK(gens[3] == q * u1q - parse("y") * u2y);
}

TEST_CASE("closed-form and relator-derived ideals coincide") {
    GBOptions opts;
    for (long long p : {2, 3, 4}) {
        TorusPresentation pres = torus_presentation(TorusFamily::SuccessorPair, p);
        RelatorData rel = relator_to_AB(pres.relator_lhs, pres.relator_rhs);
        OneRelatorIdeal ideal = one_relator_ideal(rel, opts, false);
        CHECK(ideals_equal(torus_ideal_closed_form(TorusFamily::SuccessorPair, p),
                           ideal.generators, opts) == Verdict::True);
    }
    for (long long p : {2, 3}) {
        TorusPresentation pres = torus_presentation(TorusFamily::DoublePlusOne, p);
        RelatorData rel = relator_to_AB(pres.relator_lhs, pres.relator_rhs);
        OneRelatorIdeal ideal = one_relator_ideal(rel, opts, false);
        CHECK(ideals_equal(torus_ideal_closed_form(TorusFamily::DoublePlusOne, p),
                           ideal.generators, opts) == Verdict::True);
    }
}

TEST_CASE("base verification succeeds with re-checkable evidence") {
    KnotVerdict v = verify_torus_base(TorusFamily::SuccessorPair, 2);
    CHECK(v.knot == "torus:2,3");
    CHECK(v.verdict == Verdict::True);
    CHECK(v.evidence["kind"] == "membership");
    CHECK(recheck_evidence(v.evidence) == Verdict::True);
    bool has_hypothesis = false;
    for (const std::string& note : v.notes)
        has_hypothesis = has_hypothesis || note == kDeltaInjectivityNote;
    CHECK(has_hypothesis);

    KnotVerdict w = verify_torus_base(TorusFamily::DoublePlusOne, 3);
    CHECK(w.knot == "torus:3,7");
    CHECK(w.verdict == Verdict::True);
    CHECK(recheck_evidence(w.evidence) == Verdict::True);
}

TEST_CASE("negative base parameters verify too") {
    KnotVerdict v = verify_torus_base(TorusFamily::SuccessorPair, -3);
    CHECK(v.knot == "torus:-3,-2");
    CHECK(v.verdict == Verdict::True);
    KnotVerdict w = verify_torus_base(TorusFamily::DoublePlusOne, -3);
    CHECK(w.knot == "torus:-3,-5");
    CHECK(w.verdict == Verdict::True);
}

TEST_CASE("a truncated generating set refutes the target") {
    std::vector<ExactPoly> gens = torus_ideal_closed_form(TorusFamily::SuccessorPair, 2);
    MembershipResult res = membership_with_certificate(
        torus_target(TorusFamily::SuccessorPair, 2), {gens[0]});
    CHECK(res.verdict == Verdict::False);
    REQUIRE(res.witness.has_value());
    CHECK(!res.witness->is_zero());
}

TEST_CASE("covering plans match the worked examples") {
    CoveringPlan p23 = covering_certificate(2, 3);
    REQUIRE(p23.steps.size() == 1);
    CHECK(p23.steps[0].family == 1);
    CHECK(p23.steps[0].p == 2);
    CHECK(p23.steps[0].d == 1);
    CHECK(bezout_step_consistent(p23.bezout));

    CoveringPlan p34 = covering_certificate(3, 4);
    REQUIRE(p34.steps.size() == 1);
    CHECK(p34.steps[0].family == 1);
    CHECK(p34.steps[0].p == 3);
    CHECK(p34.steps[0].d == 1);

    CoveringPlan p35 = covering_certificate(3, 5);
    REQUIRE(p35.steps.size() == 1);
    CHECK(p35.steps[0].family == 2);
    CHECK(p35.steps[0].p == -3);
    CHECK(p35.steps[0].d == 1);

    CoveringPlan p25 = covering_certificate(2, 5);
    REQUIRE(p25.steps.size() == 2);
    const CoveringStep* s4 = find_step(p25, 4);
    const CoveringStep* s5 = find_step(p25, 5);
    REQUIRE(s4 != nullptr);
    REQUIRE(s5 != nullptr);
    CHECK(s4->d == 2);
    CHECK(s5->d == 3);
    CHECK(bezout_step_consistent(p25.bezout));
    for (const CoveringStep& s : p25.steps) CHECK(covering_step_consistent(s));

    CHECK_THROWS_AS(covering_certificate(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(covering_certificate(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(covering_certificate(1, 2), std::invalid_argument);
}

TEST_CASE("full torus verification composes covering and membership evidence") {
    KnotVerdict v = verify_torus(2, 3);
    CHECK(v.knot == "torus:2,3");
    CHECK(v.verdict == Verdict::True);
    nlohmann::ordered_json j = knot_verdict_to_json(v);
    CHECK(recheck_verdict_json(j));
    CHECK(j["evidence"]["kind"] == "bezout");
    REQUIRE(j["evidence"]["children"].size() == 1);
    CHECK(j["evidence"]["children"][0]["kind"] == "covering");

    KnotVerdict round = knot_verdict_from_json(j);
    CHECK(round.verdict == v.verdict);
    CHECK(knot_verdict_to_json(round).dump() == j.dump());
}

TEST_CASE("odd-product pairs verify through the second family") {
    KnotVerdict v = verify_torus(3, 5);
    CHECK(v.verdict == Verdict::True);
    nlohmann::ordered_json j = knot_verdict_to_json(v);
    CHECK(recheck_verdict_json(j));
    CHECK(j["evidence"]["children"][0]["family"] == 2);
    CHECK(j["evidence"]["children"][0]["p"] == -3);
}

TEST_CASE("tampered torus evidence is rejected") {
    nlohmann::ordered_json j = knot_verdict_to_json(verify_torus(2, 3));
    REQUIRE(recheck_verdict_json(j));

    nlohmann::ordered_json bad = j;
    bad["evidence"]["pairs"][0][1] = 2;  // sum(a*d) becomes 2
    CHECK(!recheck_verdict_json(bad));

    bad = j;
    bad["evidence"]["children"][0]["d"] = 5;
    CHECK(!recheck_verdict_json(bad));

    bad = j;
    auto& cofs = bad["evidence"]["children"][0]["base"]["evidence"]["certificate"]["cofactors"];
    cofs[0] = cofs[0].get<std::string>() + " + 1";
    CHECK(!recheck_verdict_json(bad));
}

TEST_CASE("indeterminate base runs propagate to the composite verdict") {
    GBOptions tiny;
    tiny.max_terms = 5;  // chokes basis construction before any reducer lands
    KnotVerdict v = verify_torus(2, 3, tiny);
    CHECK(v.verdict == Verdict::Indeterminate);
    nlohmann::ordered_json j = knot_verdict_to_json(v);
    CHECK(recheck_verdict_json(j));
}
