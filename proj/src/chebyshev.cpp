#include "bhverify/chebyshev.hpp"

#include <stdexcept>

namespace bhv {

namespace {

/// Nonnegative-index evaluation by running the shared two-term recurrence
/// P_{n+1} = m*v*P_n - P_{n-1} from the convention's base pair.
ExactPoly run_recurrence(const ExactPoly& p0, const ExactPoly& p1, const Rational& m,
                         const ExactPoly& arg, long n) {
    if (n == 0) return p0;
    ExactPoly prev = p0;
    ExactPoly cur = p1;
    ExactPoly step = arg * m;
    for (long i = 1; i < n; ++i) {
        ExactPoly next = step * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

ExactPoly chebyshev(ChebKind kind, long n, const ExactPoly& arg) {
    const RingPtr& ring = arg.ring();
    if (!ring) throw std::invalid_argument("chebyshev: argument has no ring");
    ExactPoly one = ExactPoly::constant(ring, 1);
    switch (kind) {
        case ChebKind::ClassicalT:
            return run_recurrence(one, arg, 2, arg, n < 0 ? -n : n);
        case ChebKind::BigT:
            return run_recurrence(ExactPoly::constant(ring, 2), arg, 1, arg, n < 0 ? -n : n);
        case ChebKind::ClassicalU:
            if (n == -1) return ExactPoly::zero(ring);
            if (n < -1) return -chebyshev(ChebKind::ClassicalU, -n - 2, arg);
            return run_recurrence(one, arg * Rational(2), 2, arg, n);
        case ChebKind::BigS:
            if (n == -1) return ExactPoly::zero(ring);
            if (n < -1) return -chebyshev(ChebKind::BigS, -n - 2, arg);
            return run_recurrence(one, arg, 1, arg, n);
    }
    throw std::logic_error("chebyshev: unreachable");
}

}  // namespace bhv
