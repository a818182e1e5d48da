#pragma once

#include "bhverify/poly.hpp"

#include <string>

namespace bhv {

/// The boundary-slope ring k[m^{±1}, l^{±1}] the criterion works in.
RingPtr apoly_ring();

struct ApolyResult {
    bool holds = false;
    ExactPoly witness;  // quotient on success, remainder (or blocker) on failure
    std::string note;
};

/// Divisibility test at the meridian values m = ±1: normalizes the input up
/// to unit monomials ±m^a l^b, requires it to be a polynomial in m^2 (throws
/// otherwise), evaluates at m^2 = 1, and decides whether the result divides
/// l^2 - 1. The witness is the exact quotient when it does and the division
/// remainder when it does not.
ApolyResult apoly_condition(const ExactPoly& a);

}  // namespace bhv
