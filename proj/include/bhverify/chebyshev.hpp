#pragma once

#include "bhverify/poly.hpp"

namespace bhv {

/// Two Chebyshev-style families, evaluated at an arbitrary polynomial
/// argument. Indices extend to all integers via the usual reflection rules.
///
/// Classical convention (recurrence P_{n+1} = 2v*P_n - P_{n-1}):
///   T_0 = 1, T_1 = v;  U_0 = 1, U_1 = 2v
///   T_{-n} = T_n;      U_{-1} = 0, U_{-n} = -U_{n-2}
///
/// Big convention (recurrence P_{n+1} = v*P_n - P_{n-1}):
///   T_0 = 2, T_1 = v;  S_0 = 1, S_1 = v
///   T_{-n} = T_n;      S_{-1} = 0, S_{-n} = -S_{n-2}
/// Big T satisfies T_n(X + X^-1) = X^n + X^-n.
enum class ChebKind { ClassicalT, ClassicalU, BigT, BigS };

ExactPoly chebyshev(ChebKind kind, long n, const ExactPoly& arg);

inline ExactPoly cheb_t(long n, const ExactPoly& arg) { return chebyshev(ChebKind::ClassicalT, n, arg); }
inline ExactPoly cheb_u(long n, const ExactPoly& arg) { return chebyshev(ChebKind::ClassicalU, n, arg); }
inline ExactPoly big_t(long n, const ExactPoly& arg) { return chebyshev(ChebKind::BigT, n, arg); }
inline ExactPoly big_s(long n, const ExactPoly& arg) { return chebyshev(ChebKind::BigS, n, arg); }

}  // namespace bhv
