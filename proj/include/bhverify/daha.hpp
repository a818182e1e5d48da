#pragma once

#include "bhverify/poly.hpp"

#include "json.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace bhv {

/// Coefficient ring for the polynomial representation: formal parameters
/// q, t1..t4 (all invertible) and the representation variable X (invertible).
RingPtr daha_ring();

/// Linear operator on Laurent polynomials in X over the parameter field.
/// Divided-difference operators assert exact divisibility; a division with
/// remainder throws instead of producing a rational function.
struct LaurentOperator {
    std::string description;
    std::function<ExactPoly(const ExactPoly&)> action;
    ExactPoly operator()(const ExactPoly& f) const { return action(f); }
};

/// The six-operator realization on k[X^{+-1}]:
///   xhat: f(X) -> X f(X)      s: f(X) -> f(X^-1)      yhat: f(X) -> f(q^-2 X)
///   T2 = t2*s*yhat - (q^2 tb2 X^2 + q tb1 X)/(1 - q^2 X^2) * (1 - s*yhat)
///   T3 = t3*s + (tb3 + tb4 X)/(1 - X^2) * (1 - s)
///   T1 = q * T2^-1 * xhat     T4 = xhat^-1 * T3^-1
/// with tbi = ti - ti^-1 and inverses realized via Ti^-1 = Ti - tbi.
struct PolyRepOperators {
    RingPtr ring;
    LaurentOperator xhat, s, yhat, T1, T2, T3, T4;
    LaurentOperator T1_inv, T2_inv, T3_inv, T4_inv;
};

PolyRepOperators polyrep_operators();

/// Outcome of one symbolic check. Residuals hold the nonzero leftovers of
/// identities that should have vanished; empty residuals means pass.
struct DahaReport {
    std::string check;
    bool pass = true;
    std::vector<std::string> residuals;
    std::vector<std::string> notes;
    long long runtime_ms = 0;
};

nlohmann::ordered_json daha_report_to_json(const DahaReport& report, bool with_runtime = true);

/// Quadratic relations (Ti - ti)(Ti + ti^-1) = 0 for i = 1..4 and the product
/// relation T4 T3 T2 T1 = q, applied to every monomial X^n with |n| <= window,
/// all with formal parameters.
DahaReport verify_daha_relations(int window);

/// Element num / delta^power of the invariant Laurent ring localized at
/// delta = xh - xh^-1.
struct LocalizedElement {
    ExactPoly num;
    int delta_power = 0;
};

/// Images of the three spherical generators at q = epsilon = +-1, t3 = t4 = 1,
/// in two displayed forms that are proven equal on construction:
/// over the torus ring (t1, t2, xh, yh) with denominator powers of
/// delta = xh - xh^-1, and over the skein ring (t1, t2, xT, yT, zT) as
/// main + correction / (xT^2 - 4). The torus generators embed as
/// xT = xh + xh^-1, yT = yh + yh^-1, zT = epsilon*(xh*yh + xh^-1*yh^-1).
struct DunklImages {
    int epsilon = -1;
    RingPtr torus_ring;
    LocalizedElement x, y, z;
    RingPtr skein_ring;
    ExactPoly x_main, y_main, z_main;
    ExactPoly y_corr, z_corr;
    std::vector<std::string> notes;
};

DunklImages symmetric_dunkl_images(int epsilon);

/// Substitutes the images into the spherical cubic at q = epsilon, t3 = t4 = 1:
///   -eps*x*y*z + x^2 + y^2 + z^2 - eps*tb1*tb2*x = tb1^2 + tb2^2 + 4
/// as an identity in the localized ring, and checks the t1 = t2 = 1
/// degeneration to the bare torus relation with right side 4.
DahaReport verify_dunkl_cubic(int epsilon);

/// Action of the spherical generators on a knot-complement skein module,
/// as matrices over k[x, t1^{+-1}, t2^{+-1}] acting on coordinate columns
/// in the listed basis. matX is multiplication by x.
struct ModuleAction {
    RingPtr ring;
    std::vector<std::string> basis;
    std::vector<std::vector<ExactPoly>> matX, matY, matZ;
};

/// Trefoil module on basis (u, v), deformed parameters (q = -1, t3 = t4 = 1).
ModuleAction trefoil_action();

/// Trefoil module with formal q and t = 1, on basis (u, v).
ModuleAction trefoil_classical_action();

/// Commutativity, annihilation by
///   (y + t2 + t2^-1)(y - t2^-1 T6 - tb1 S5 + tb2 S4),
/// agreement of the t = 1 specialization with the formal-q action at q = -1,
/// the classical annihilator (y+2)(y-T6), and the spherical cubic.
DahaReport verify_trefoil_annihilator();

/// Figure-eight module on basis (p, u, v), q = -1, t3 = t4 = 1.
ModuleAction fig8_action();

/// The entries of the y-action on the (u, v) block, in the order
/// a, b, c (column u) and d, e, f (column v).
std::array<ExactPoly, 6> fig8_constants();

/// Commutativity, annihilation by
///   (y + t2 + t2^-1)(y^2 - (b+f) y + (bf - ce)),
/// its t = 1 factorization (y+2)(y + T4 - T2 - T0)^2, the classical
/// annihilator at t = 1, and the spherical cubic.
DahaReport verify_fig8_annihilator();

/// Substitutes (xS, yS, zS, a1..a4) -> (-x, -y, -z, i*tb1, .., i*tb4) into the
/// four-holed-sphere trace relation and matches it against the q = 1 spherical
/// cubic, checking the imaginary part vanishes and the t = 1 degeneration.
DahaReport goldman_crosscheck();

/// Named check groups for the command-line tool and the bindings:
/// "relations" (uses window), "dunkl" (both signs), "trefoil", "fig8",
/// "goldman". Throws std::invalid_argument on an unknown name.
std::vector<DahaReport> run_daha_check(const std::string& name, int window);

}  // namespace bhv
