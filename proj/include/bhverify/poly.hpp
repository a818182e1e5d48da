#pragma once

#include "bhverify/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bhv {

/// One ring variable. Laurent variables may carry negative exponents.
struct VarSpec {
    std::string name;
    bool laurent = false;

    bool operator==(const VarSpec& other) const {
        return name == other.name && laurent == other.laurent;
    }
};

/// Immutable ordered list of variables. The listing order is the printing
/// and term-order significance (earlier = more significant).
class Ring {
  public:
    explicit Ring(std::vector<VarSpec> vars);

    std::size_t size() const { return vars_.size(); }
    const VarSpec& var(std::size_t i) const { return vars_[i]; }
    const std::vector<VarSpec>& vars() const { return vars_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const Ring& other) const { return vars_ == other.vars_; }
    std::string description() const;

  private:
    std::vector<VarSpec> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<VarSpec> vars);

/// Exponent vector, one entry per ring variable.
using Exponents = std::vector<std::int32_t>;

/// Graded-lexicographic comparison: sum of absolute exponent values first (so
/// Laurent monomials grade by how far they sit from 1), then lex on the raw
/// exponents in listing order.
int compare_graded_lex(const Exponents& a, const Exponents& b);

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed ring. Terms are kept sorted in descending graded-lex order with no
/// zero coefficients, so equal polynomials have identical representations.
class ExactPoly {
  public:
    struct Term {
        Exponents exps;
        Rational coeff;
    };

    ExactPoly() = default;
    static ExactPoly zero(RingPtr ring);
    static ExactPoly constant(RingPtr ring, Rational value);
    static ExactPoly variable(RingPtr ring, std::string_view name, std::int32_t exp = 1);
    static ExactPoly monomial(RingPtr ring, Exponents exps, Rational coeff);
    /// Builds from arbitrary (exps, coeff) pairs, combining duplicates.
    static ExactPoly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool is_constant() const;
    /// The constant coefficient (zero if absent).
    Rational constant_value() const;
    /// Max total degree over terms; 0 for the zero polynomial.
    std::int64_t total_degree() const;
    /// Max absolute exponent of one variable over all terms.
    std::int32_t max_abs_exponent(std::size_t var_index) const;

    ExactPoly operator-() const;
    ExactPoly operator+(const ExactPoly& other) const;
    ExactPoly operator-(const ExactPoly& other) const;
    ExactPoly operator*(const ExactPoly& other) const;
    ExactPoly& operator+=(const ExactPoly& other) { return *this = *this + other; }
    ExactPoly& operator-=(const ExactPoly& other) { return *this = *this - other; }
    ExactPoly& operator*=(const ExactPoly& other) { return *this = *this * other; }
    ExactPoly operator*(const Rational& scalar) const;
    bool operator==(const ExactPoly& other) const;
    bool operator!=(const ExactPoly& other) const { return !(*this == other); }

    /// Nonnegative powers always work; negative powers require a unit base
    /// (single invertible term).
    ExactPoly pow(std::int64_t n) const;

    /// True iff the polynomial is a single term c*m whose monomial involves
    /// only Laurent variables (hence invertible in the ring).
    bool is_unit() const;
    ExactPoly unit_inverse() const;

    /// Ring homomorphism fixing unbound variables. Binding a Laurent
    /// variable to a non-unit is rejected.
    ExactPoly substitute(const std::map<std::string, ExactPoly>& bindings) const;

    /// Canonical text form, e.g. "3*X^-2*y*z - 1/2". Round-trips exactly
    /// through parse_poly.
    std::string to_string() const;

  private:
    RingPtr ring_;
    std::vector<Term> terms_;  // descending graded-lex, no zero coefficients

    void normalize();
    static void check_same_ring(const ExactPoly& a, const ExactPoly& b);
    void check_exponents(const Exponents& exps) const;
};

ExactPoly operator*(const Rational& scalar, const ExactPoly& p);

/// Parses the canonical text form (and benign whitespace variants).
ExactPoly parse_poly(RingPtr ring, std::string_view text);

/// Exact division of f by g, both viewed as univariate in `var` with
/// polynomial coefficients in the remaining variables; the leading
/// coefficient of g must be a unit. Throws if the division leaves a
/// remainder. Handles Laurent exponents of `var` by shifting.
ExactPoly exact_div(const ExactPoly& f, const ExactPoly& g, const std::string& var);

/// Monic gcd of two polynomials that must be univariate in `var` (all other
/// exponents zero everywhere).
ExactPoly univariate_gcd(const ExactPoly& a, const ExactPoly& b, const std::string& var);

}  // namespace bhv
