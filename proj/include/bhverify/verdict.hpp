#pragma once

#include "bhverify/groebner.hpp"

#include <string>
#include <vector>

namespace bhv {

/// Hypothesis every affirmative verdict depends on but which the engine does
/// not check; attached verbatim as a note.
inline constexpr const char* kDeltaInjectivityNote =
    "unchecked hypothesis: multiplication by X - X^-1 is injective on the odd "
    "part of the peripheral subalgebra";

/// One covering of the target torus knot by a base-family knot. The integer
/// data is self-checking: family 1 requires -r*k + s*n = 1, p = r*k,
/// p + 1 = s*n; family 2 requires -2*r*k + s*n = 1, p = r*k, 2p + 1 = s*n.
/// In both families the longitude exponent is d = k*n.
struct CoveringStep {
    int family = 1;  // 1 = (p, p+1) base, 2 = (p, 2p+1) base
    long long r = 0, s = 0;
    long long k = 0, n = 0;
    long long p = 0;
    long long d = 0;
};

bool covering_step_consistent(const CoveringStep& step);

/// Integer combination sum(a_i * d_i) = 1 over the covering exponents.
struct BezoutStep {
    std::vector<std::pair<long long, long long>> pairs;  // (d_i, a_i)
};

bool bezout_step_consistent(const BezoutStep& step);

/// Verdict for one knot plus the evidence tree that justifies it. Evidence
/// nodes are JSON objects tagged by "kind":
///   membership    {claim, certificate}
///   refutation    {claim, witness}
///   indeterminate {claim, note}
///   covering      {family, r, s, k, n, p, d, base: <verdict object>}
///   bezout        {r, s, pairs: [[d, a]...], children: [covering...]}
///   connect_sum   {children: [<verdict object>...]}
/// An affirmative verdict's tree re-verifies using only certificate
/// expansion and integer arithmetic.
struct KnotVerdict {
    std::string knot;  // descriptor, e.g. "torus:2,3"
    std::string condition = "BH";
    Verdict verdict = Verdict::Indeterminate;
    std::vector<std::string> notes;
    nlohmann::ordered_json evidence;
};

nlohmann::ordered_json evidence_membership(const std::string& claim,
                                           const MembershipCertificate& cert);
nlohmann::ordered_json evidence_refutation(const std::string& claim, const ExactPoly& witness);
nlohmann::ordered_json evidence_indeterminate(const std::string& claim, const std::string& note);
nlohmann::ordered_json evidence_covering(const CoveringStep& step, nlohmann::ordered_json base);
nlohmann::ordered_json evidence_bezout(long long r, long long s, const BezoutStep& bezout,
                                       std::vector<nlohmann::ordered_json> children);
nlohmann::ordered_json evidence_connect_sum(std::vector<nlohmann::ordered_json> children);

nlohmann::ordered_json knot_verdict_to_json(const KnotVerdict& v);
KnotVerdict knot_verdict_from_json(const nlohmann::ordered_json& j);

/// Recomputes the verdict an evidence tree supports, bottom-up, using only
/// check_certificate and integer identities. Structural problems (missing
/// fields, unknown kinds) throw; semantic failures (a certificate that does
/// not expand, a broken integer identity) yield False.
Verdict recheck_evidence(const nlohmann::ordered_json& node);

/// Full-report recheck: the supported verdict must equal the claimed one.
bool recheck_verdict_json(const nlohmann::ordered_json& verdict_object);

/// Composition for connect sums: no new polynomial computation, the combined
/// verdict inherits the weakest constituent status.
KnotVerdict connect_sum(const std::vector<KnotVerdict>& parts);

}  // namespace bhv
