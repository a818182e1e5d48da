#pragma once

#include "bhverify/bh.hpp"
#include "bhverify/verdict.hpp"

namespace bhv {

/// Closed-form data for the (-2, 3, 2n+1) pretzel presentation
/// <a, b | b^n E = F b^n> with E = a b a^-1 b^-1 a^-1 and F = E^sigma b^-1.
/// Every polynomial is cross-checked against direct word evaluation at
/// construction time (throws on mismatch).
struct PretzelData {
    ExactPoly E0, E1;   // eval(E) = E0 + E1 t
    ExactPoly A, B;     // eval(b^n E) - eval(F b^n) = A + B t
    ExactPoly C, D;     // eval(b a b^n) = C + D t
    ExactPoly lbar1;    // t part of eval(b a b^n a b^n a b)
};

PretzelData pretzel_build(int n);

GroupWord pretzel_relator_lhs(int n);
GroupWord pretzel_relator_rhs(int n);

/// Membership of the reduced longitude's t part in the relator ideal. The
/// full longitude differs from b a b^n a b^n a b by meridian powers only,
/// which scale the t part by a unit.
KnotVerdict verify_pretzel(int n, const GBOptions& opts = {});

/// Compares the relator ideal with the symmetrized generating set
/// {A, B, A^sigma, B^sigma, delta(A), delta(B)} by mutual membership.
Verdict pretzel_ideal_symmetry_probe(int n, const GBOptions& opts = {});

}  // namespace bhv
