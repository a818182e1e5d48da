#pragma once

#include "bhverify/poly.hpp"

namespace bhv {

/// Polynomial with a formal imaginary unit: re + i*im, i^2 = -1. Kept as a
/// two-component extension so no ring ever carries an algebraic relation.
struct GaussExt {
    ExactPoly re;
    ExactPoly im;

    static GaussExt real(ExactPoly p) {
        GaussExt g;
        g.im = ExactPoly::zero(p.ring());
        g.re = std::move(p);
        return g;
    }

    static GaussExt imaginary(ExactPoly p) {
        GaussExt g;
        g.re = ExactPoly::zero(p.ring());
        g.im = std::move(p);
        return g;
    }

    GaussExt operator+(const GaussExt& o) const { return {re + o.re, im + o.im}; }
    GaussExt operator-(const GaussExt& o) const { return {re - o.re, im - o.im}; }
    GaussExt operator-() const { return {-re, -im}; }

    GaussExt operator*(const GaussExt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    GaussExt conj() const { return {re, -im}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    bool operator==(const GaussExt& o) const { return re == o.re && im == o.im; }
};

}  // namespace bhv
