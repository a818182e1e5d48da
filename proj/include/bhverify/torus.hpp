#pragma once

#include "bhverify/bh.hpp"
#include "bhverify/verdict.hpp"
#include "bhverify/word.hpp"

namespace bhv {

/// The two base presentations used for torus knots: (p, p+1) with relator
/// (ab)^{p-1} a = b^p, and (p, 2p+1) with relator (a b^2)^p = b^{2p+1}. Both
/// take meridian a; the longitudes are b^{p+1} a^{-p(p+1)} and
/// b^{2p+1} a^{-p(2p+1)}.
enum class TorusFamily { SuccessorPair = 1, DoublePlusOne = 2 };

/// Valid base parameters. Family 1 needs p >= 2 or p <= -3 (|p| = 1 and
/// p = -2 give the unknot); family 2 needs |p| >= 2.
bool torus_base_valid(TorusFamily family, long long p);

struct TorusPresentation {
    GroupWord relator_lhs;
    GroupWord relator_rhs;
    GroupWord meridian;
    GroupWord longitude;
};

TorusPresentation torus_presentation(TorusFamily family, long long p);

/// The presentation-specific ideal in closed Chebyshev form. Family 1 uses
/// Q = x*y + z; family 2 uses Q = (2y^2 - 1)x + 2yz, with x = (X + X^-1)/2.
std::vector<ExactPoly> torus_ideal_closed_form(TorusFamily family, long long p);

/// The single polynomial whose membership decides the longitude condition:
/// U_p(y) for family 1, U_{2p}(y) for family 2.
ExactPoly torus_target(TorusFamily family, long long p);

std::string torus_descriptor(TorusFamily family, long long p);

/// Verifies the longitude condition for one base knot: decides membership of
/// the Chebyshev target in the closed-form ideal (the certificate kept as
/// evidence), and independently runs the longitude word through the
/// relator-derived ideal, requiring agreement whenever both routes are
/// conclusive.
KnotVerdict verify_torus_base(TorusFamily family, long long p, const GBOptions& opts = {});

struct CoveringPlan {
    std::vector<CoveringStep> steps;
    BezoutStep bezout;
};

/// Reduces an arbitrary torus knot (gcd(r,s) = 1, 2 <= r < s) to base-family
/// knots: enumerates coverings over a shift window (widened geometrically
/// from t_bound until the exponents admit a Bezout combination), preferring
/// bases with small |p| and positive p.
CoveringPlan covering_certificate(int r, int s, int t_bound = 5);

/// Full verification for torus:r,s by covering composition; the verdict
/// inherits the weakest base status.
KnotVerdict verify_torus(int r, int s, const GBOptions& opts = {}, int t_bound = 5);

}  // namespace bhv
