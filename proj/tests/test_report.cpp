#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bhverify/verdict.hpp"

using namespace bhv;

namespace {

KnotVerdict synthetic(const std::string& knot, Verdict v) {
    KnotVerdict out;
    out.knot = knot;
    out.verdict = v;
    if (v == Verdict::True) {
        // a real, minimal certificate: y^2 - 1 in <y - 1>
        RingPtr r = make_ring({{"y", false}});
        MembershipResult res =
            membership_with_certificate(parse_poly(r, "y^2 - 1"), {parse_poly(r, "y - 1")});
        out.evidence = evidence_membership("toy membership", *res.certificate);
        out.notes.push_back(kDeltaInjectivityNote);
    } else if (v == Verdict::False) {
        RingPtr r = make_ring({{"y", false}});
        out.evidence = evidence_refutation("toy refutation", parse_poly(r, "y"));
    } else {
        out.evidence = evidence_indeterminate("toy open case", "resource caps");
    }
    return out;
}

}  // namespace

TEST_CASE("covering step consistency is pure integer arithmetic") {
    CoveringStep good{1, 2, 3, 1, 1, 2, 1};
    CHECK(covering_step_consistent(good));

    CoveringStep fam2{2, 3, 5, -1, -1, -3, 1};
    CHECK(fam2.family == 2);
    CHECK(covering_step_consistent(fam2));

    CoveringStep bad = good;
    bad.d = 2;
    CHECK(!covering_step_consistent(bad));
    bad = good;
    bad.p = 3;
    CHECK(!covering_step_consistent(bad));
    bad = good;
    bad.n = 2;
    CHECK(!covering_step_consistent(bad));

    // the excluded degenerate bases
    CoveringStep unknot{1, 2, 1, -1, -1, -2, 1};
    CHECK(!covering_step_consistent(unknot));
    CoveringStep zero{1, 2, 3, 0, 0, 0, 0};
    CHECK(!covering_step_consistent(zero));
}

TEST_CASE("bezout step consistency checks the combination") {
    CHECK(bezout_step_consistent({{{1, 1}}}));
    CHECK(bezout_step_consistent({{{2, -1}, {3, 1}}}));
    CHECK(bezout_step_consistent({{{6, -1}, {10, -1}, {17, 1}}}));
    CHECK(!bezout_step_consistent({{{2, 1}, {3, 1}}}));
    CHECK(!bezout_step_consistent({{}}));
}

TEST_CASE("verdict objects round-trip through JSON") {
    KnotVerdict v = synthetic("torus:2,3", Verdict::True);
    nlohmann::ordered_json j = knot_verdict_to_json(v);
    KnotVerdict back = knot_verdict_from_json(j);
    CHECK(back.knot == v.knot);
    CHECK(back.condition == "BH");
    CHECK(back.verdict == Verdict::True);
    CHECK(back.notes == v.notes);
    CHECK(knot_verdict_to_json(back).dump() == j.dump());
    CHECK(recheck_verdict_json(j));

    // a verdict resting on an unverified hypothesis parses as open
    j["verdict"] = "unchecked_hypothesis";
    CHECK(knot_verdict_from_json(j).verdict == Verdict::Indeterminate);
}

TEST_CASE("recheck distinguishes semantic failure from schema violation") {
    KnotVerdict v = synthetic("toy", Verdict::True);
    nlohmann::ordered_json j = knot_verdict_to_json(v);

    nlohmann::ordered_json bad = j;
    bad["evidence"]["certificate"]["unit_power"] = 3;
    CHECK(recheck_evidence(bad["evidence"]) == Verdict::False);
    CHECK(!recheck_verdict_json(bad));

    bad = j;
    bad["evidence"].erase("certificate");
    CHECK_THROWS_AS(recheck_evidence(bad["evidence"]), std::invalid_argument);

    bad = j;
    bad["evidence"]["kind"] = "mystery";
    CHECK_THROWS_AS(recheck_evidence(bad["evidence"]), std::invalid_argument);
}

TEST_CASE("refutation and open evidence recheck to their own statuses") {
    CHECK(recheck_evidence(synthetic("a", Verdict::False).evidence) == Verdict::False);
    CHECK(recheck_evidence(synthetic("a", Verdict::Indeterminate).evidence) ==
          Verdict::Indeterminate);
}

TEST_CASE("connect sums inherit the weakest status") {
    KnotVerdict t = synthetic("torus:2,3", Verdict::True);
    KnotVerdict u = synthetic("pretzel:1", Verdict::True);
    KnotVerdict open = synthetic("torus:9,10", Verdict::Indeterminate);
    KnotVerdict no = synthetic("badknot", Verdict::False);

    KnotVerdict both = connect_sum({t, u});
    CHECK(both.knot == "connectsum:[torus:2,3,pretzel:1]");
    CHECK(both.verdict == Verdict::True);
    CHECK(recheck_verdict_json(knot_verdict_to_json(both)));

    CHECK(connect_sum({t, open}).verdict == Verdict::Indeterminate);
    CHECK(connect_sum({t, no}).verdict == Verdict::False);
    CHECK(connect_sum({no, open}).verdict == Verdict::False);
    CHECK_THROWS_AS(connect_sum({}), std::invalid_argument);

    // nesting: (true # true) # true stays true and re-verifies at depth 2
    KnotVerdict nested = connect_sum({both, synthetic("pretzel:2", Verdict::True)});
    CHECK(nested.verdict == Verdict::True);
    CHECK(recheck_verdict_json(knot_verdict_to_json(nested)));
    CHECK(nested.evidence["children"][0]["evidence"]["kind"] == "connect_sum");

    // the shared hypothesis note is carried once
    int count = 0;
    for (const std::string& note : nested.notes)
        if (note == kDeltaInjectivityNote) ++count;
    CHECK(count == 1);
}

TEST_CASE("tampering inside a nested connect sum is caught") {
    KnotVerdict both = connect_sum({synthetic("torus:2,3", Verdict::True),
                                    synthetic("pretzel:1", Verdict::True)});
    nlohmann::ordered_json j = knot_verdict_to_json(both);
    REQUIRE(recheck_verdict_json(j));
    auto& cofs = j["evidence"]["children"][1]["evidence"]["certificate"]["cofactors"];
    cofs[0] = "y + 2";
    CHECK(!recheck_verdict_json(j));
}
