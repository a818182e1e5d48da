#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bhv {

/// Exact rational number, always stored in lowest terms with positive
/// denominator (mpq_class canonicalizes on construction and arithmetic).
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& text) {
    mpq_class value;
    if (value.set_str(text, 10) != 0)
        throw std::invalid_argument("invalid rational literal: '" + text + "'");
    if (value.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    value.canonicalize();
    return value;
}

/// Canonical text form: "n" for integers, "n/d" otherwise, with any sign on
/// the numerator.
inline std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

inline bool is_integer(const Rational& value) {
    return value.get_den() == 1;
}

/// Exact conversion to a machine integer; throws if the value is not an
/// integer or does not fit.
inline long rational_to_long(const Rational& value) {
    if (!is_integer(value))
        throw std::domain_error("rational is not an integer: " + rational_to_string(value));
    if (!value.get_num().fits_slong_p())
        throw std::domain_error("integer out of machine range: " + rational_to_string(value));
    return value.get_num().get_si();
}

}  // namespace bhv
