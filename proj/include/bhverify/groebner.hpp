#pragma once

#include "bhverify/poly.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bhv {

/// Three-valued answer for resource-capped decision procedures. A capped run
/// reports Indeterminate, never False.
enum class Verdict { True, False, Indeterminate };

std::string verdict_name(Verdict v);
Verdict verdict_from_name(std::string_view name);

/// Combines sub-verdicts: a composite claim is only as strong as its weakest
/// part (False < Indeterminate < True).
Verdict weakest_verdict(Verdict a, Verdict b);

/// Resource caps for basis computation. Exceeding a cap aborts the run and
/// marks the result incomplete; it never flips a verdict to False.
struct GBOptions {
    std::int64_t max_degree = 80;       // largest S-pair lcm degree processed
    std::int64_t max_terms = 2'000'000; // total stored terms, cofactors included
    std::int64_t max_basis = 10'000;    // basis elements before giving up
};

/// A Laurent ideal re-encoded over a plain polynomial ring: every Laurent
/// variable V gains an inverse partner (W, W2, ...) listed before the source
/// variables, together with the relation V*W - 1.
struct LiftedIdeal {
    RingPtr source_ring;
    RingPtr ring;                          // partners first, then source vars
    std::vector<ExactPoly> generators;     // lifted, order as given
    std::vector<ExactPoly> unit_relations; // V_j * W_j - 1, in laurent order

    /// Rewrites negative exponents through the inverse partners.
    ExactPoly lift(const ExactPoly& p) const;
    /// Sends each partner W_j back to V_j^-1.
    ExactPoly lower(const ExactPoly& p) const;
};

LiftedIdeal lift_ideal(RingPtr source_ring, const std::vector<ExactPoly>& generators);

/// Output of the basis computation. Monomial order is graded reverse
/// lexicographic with the listing order of the lifted ring ascending (for the
/// standard lift of k[X^{+-1}, y, z] that is W < X < y < z).
struct GroebnerBasis {
    LiftedIdeal ideal;
    /// Monic basis elements, ascending by leading monomial. When `reduced` is
    /// true this is the unique reduced basis of the lifted ideal. After a
    /// membership stop the elements appear in discovery order instead.
    std::vector<ExactPoly> basis;
    /// basis[i] == sum_j cofactors[i][j] * inputs[j] where inputs are the
    /// lifted generators followed by the unit relations.
    std::vector<std::vector<ExactPoly>> cofactors;
    bool reduced = false;
    /// The basis contains a nonzero constant, so the ideal is the whole ring.
    /// Trustworthy even when the run was capped.
    bool contains_one = false;
    /// The run was cut short deliberately because the requested membership
    /// target reduced to zero against the working basis (see groebner_basis).
    bool membership_stop = false;
    std::string diagnostic; // reason the run ended early when not reduced
    GBOptions opts;         // caps the run was performed under

    std::size_t input_count() const {
        return ideal.generators.size() + ideal.unit_relations.size();
    }
    /// Properness of the ideal (1 not a member): False when a constant was
    /// derived, True for a completed run without one, else Indeterminate.
    Verdict proper() const;
};

/// Deterministic extended Buchberger run over the lifted ideal. Generators
/// live in the Laurent source ring; zero generators are tolerated and simply
/// receive zero cofactors. When `stop_when_member` is given, the run is
/// abandoned as soon as that polynomial reduces to zero against the working
/// basis: the partial basis then suffices to certify the membership, which is
/// usually far cheaper than completing the basis. Refuting a non-member still
/// requires the full run, which such a run performs as usual.
GroebnerBasis groebner_basis(RingPtr ring, const std::vector<ExactPoly>& generators,
                             const GBOptions& opts = {},
                             const ExactPoly* stop_when_member = nullptr);

/// Normal form of p against the basis, mapped back to the source ring. Zero
/// iff p is a member, provided the basis is complete.
ExactPoly reduce(const ExactPoly& p, const GroebnerBasis& gb);

/// Self-contained witness that `target` lies in the ideal generated by
/// `generators` inside the Laurent source ring. The defining identity is
///
///   V^unit_power * lift(target) =
///       sum_i cofactors[i] * lift(generators[i])
///     + sum_j cofactors[#generators + j] * unit_relations[j]
///
/// where V is the first Laurent variable; checking it needs nothing beyond
/// polynomial expansion.
struct MembershipCertificate {
    RingPtr source_ring;
    RingPtr lifted_ring;
    ExactPoly target;                      // source ring
    std::int64_t unit_power = 0;           // m >= 0
    std::vector<ExactPoly> generators;     // source ring, as supplied
    std::vector<ExactPoly> unit_relations; // lifted ring
    std::vector<ExactPoly> cofactors;      // lifted ring, generators then relations
};

/// Expands the certificate identity and validates the shape of the unit
/// relations. Shares no state with the basis computation that produced the
/// certificate.
bool check_certificate(const MembershipCertificate& cert);

nlohmann::ordered_json certificate_to_json(const MembershipCertificate& cert);
MembershipCertificate certificate_from_json(const nlohmann::ordered_json& j);

struct MembershipResult {
    Verdict verdict = Verdict::Indeterminate;
    /// Present iff verdict is True; already re-checked by the producer.
    std::optional<MembershipCertificate> certificate;
    /// Nonzero normal form of the unit-stripped target (source ring) iff the
    /// verdict is False.
    std::optional<ExactPoly> witness;
    std::string note;
};

/// Runs the basis computation with `target` as the stop-when-member watch, so
/// affirmative answers usually return long before the basis completes.
MembershipResult membership_with_certificate(const ExactPoly& target,
                                             const std::vector<ExactPoly>& generators,
                                             const GBOptions& opts = {});

/// Re-uses a precomputed basis; `target` must live in its source ring. The
/// certificate embeds the original generator list from the basis run.
MembershipResult membership_with_certificate(const ExactPoly& target, const GroebnerBasis& gb);

/// Mutual membership of two generating sets over the same Laurent ring.
Verdict ideals_equal(const std::vector<ExactPoly>& lhs, const std::vector<ExactPoly>& rhs,
                     const GBOptions& opts = {});

}  // namespace bhv
