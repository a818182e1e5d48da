#include "bhverify/groebner.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace bhv {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::Indeterminate: return "indeterminate";
    }
    throw std::logic_error("verdict_name: bad enum value");
}

Verdict verdict_from_name(std::string_view name) {
    if (name == "true") return Verdict::True;
    if (name == "false") return Verdict::False;
    if (name == "indeterminate") return Verdict::Indeterminate;
    throw std::invalid_argument("unknown verdict name: " + std::string(name));
}

Verdict weakest_verdict(Verdict a, Verdict b) {
    if (a == Verdict::False || b == Verdict::False) return Verdict::False;
    if (a == Verdict::Indeterminate || b == Verdict::Indeterminate)
        return Verdict::Indeterminate;
    return Verdict::True;
}

namespace {

std::vector<std::size_t> laurent_positions(const Ring& r) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < r.size(); ++v)
        if (r.var(v).laurent) out.push_back(v);
    return out;
}

std::string partner_name(std::size_t laurent_index) {
    return laurent_index == 0 ? "W" : "W" + std::to_string(laurent_index + 1);
}

/// Rewrites a Laurent polynomial over the lifted ring: the j-th Laurent
/// variable's negative exponents move to lifted slot j, its positive ones to
/// its own slot after the partner block. Pure term surgery.
ExactPoly lift_into(const RingPtr& lifted, const ExactPoly& p,
                    const std::vector<std::size_t>& laurent) {
    const std::size_t k = laurent.size();
    std::vector<ExactPoly::Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        ExactPoly::Term nt;
        nt.coeff = t.coeff;
        nt.exps.assign(lifted->size(), 0);
        for (std::size_t v = 0; v < t.exps.size(); ++v) nt.exps[k + v] = t.exps[v];
        for (std::size_t j = 0; j < k; ++j) {
            std::int32_t e = t.exps[laurent[j]];
            if (e < 0) {
                nt.exps[j] = -e;
                nt.exps[k + laurent[j]] = 0;
            }
        }
        out.push_back(std::move(nt));
    }
    return ExactPoly::from_terms(lifted, std::move(out));
}

ExactPoly lower_into(const RingPtr& source, const ExactPoly& p,
                     const std::vector<std::size_t>& laurent) {
    const std::size_t k = laurent.size();
    std::vector<ExactPoly::Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        ExactPoly::Term nt;
        nt.coeff = t.coeff;
        nt.exps.assign(source->size(), 0);
        for (std::size_t v = 0; v < source->size(); ++v) nt.exps[v] = t.exps[k + v];
        for (std::size_t j = 0; j < k; ++j) nt.exps[laurent[j]] -= t.exps[j];
        out.push_back(std::move(nt));
    }
    return ExactPoly::from_terms(source, std::move(out));
}

constexpr std::size_t kMaxVars = 8;

struct Mono {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;
};

inline bool mono_equal(const Mono& a, const Mono& b) { return a.deg == b.deg && a.e == b.e; }

/// Graded reverse lexicographic order; slot 0 is the least significant
/// variable. Ties break on the first differing slot, smaller exponent wins.
inline bool mono_less(const Mono& a, const Mono& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

inline bool mono_divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out;
    out.deg = a.deg + b.deg;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        std::uint32_t s = std::uint32_t(a.e[i]) + b.e[i];
        if (s > 0xFFFF) throw std::overflow_error("monomial exponent exceeds 16 bits");
        out.e[i] = static_cast<std::uint16_t>(s);
    }
    return out;
}

inline Mono mono_quot(const Mono& b, const Mono& a) {
    Mono out;
    out.deg = b.deg - a.deg;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        out.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    return out;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono out;
    std::uint32_t deg = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        out.e[i] = std::max(a.e[i], b.e[i]);
        deg += out.e[i];
    }
    out.deg = deg;
    return out;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

/// Terms sorted descending under mono_less, parallel coefficient array, no
/// zero coefficients.
struct EPoly {
    std::vector<Mono> ms;
    std::vector<Rational> cs;

    bool zero() const { return ms.empty(); }
    std::size_t size() const { return ms.size(); }
    const Mono& lm() const { return ms.front(); }
    const Rational& lc() const { return cs.front(); }
};

EPoly to_epoly(const ExactPoly& p) {
    if (p.ring()->size() > kMaxVars)
        throw std::invalid_argument("basis engine supports at most 8 variables");
    std::vector<std::size_t> order(p.term_count());
    EPoly out;
    out.ms.resize(p.term_count());
    out.cs.reserve(p.term_count());
    for (std::size_t i = 0; i < p.term_count(); ++i) {
        const auto& t = p.terms()[i];
        Mono m;
        for (std::size_t v = 0; v < t.exps.size(); ++v) {
            if (t.exps[v] < 0 || t.exps[v] > 0xFFFF)
                throw std::invalid_argument("exponent out of engine range");
            m.e[v] = static_cast<std::uint16_t>(t.exps[v]);
            m.deg += m.e[v];
        }
        out.ms[i] = m;
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return mono_less(out.ms[b], out.ms[a]);
    });
    std::vector<Mono> ms(p.term_count());
    for (std::size_t i = 0; i < order.size(); ++i) {
        ms[i] = out.ms[order[i]];
        out.cs.push_back(p.terms()[order[i]].coeff);
    }
    out.ms = std::move(ms);
    return out;
}

ExactPoly from_epoly(const RingPtr& ring, const EPoly& p) {
    std::vector<ExactPoly::Term> terms;
    terms.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        ExactPoly::Term t;
        t.coeff = p.cs[i];
        t.exps.assign(ring->size(), 0);
        for (std::size_t v = 0; v < ring->size(); ++v) t.exps[v] = p.ms[i].e[v];
        terms.push_back(std::move(t));
    }
    return ExactPoly::from_terms(ring, std::move(terms));
}

/// out = f[head..] + c * x^m * g, merged in descending order.
EPoly axpy_from(const EPoly& f, std::size_t head, const Rational& c, const Mono& m,
                const EPoly& g) {
    EPoly out;
    out.ms.reserve(f.size() - head + g.size());
    out.cs.reserve(f.size() - head + g.size());
    std::size_t i = head, j = 0;
    Mono gm;
    bool gm_valid = false;
    while (i < f.size() || j < g.size()) {
        if (j < g.size() && !gm_valid) {
            gm = mono_mul(m, g.ms[j]);
            gm_valid = true;
        }
        if (i < f.size() && j < g.size() && mono_equal(f.ms[i], gm)) {
            Rational v = f.cs[i] + c * g.cs[j];
            if (v != 0) {
                out.ms.push_back(f.ms[i]);
                out.cs.push_back(std::move(v));
            }
            ++i;
            ++j;
            gm_valid = false;
        } else if (j >= g.size() || (i < f.size() && mono_less(gm, f.ms[i]))) {
            out.ms.push_back(f.ms[i]);
            out.cs.push_back(f.cs[i]);
            ++i;
        } else {
            out.ms.push_back(gm);
            out.cs.push_back(c * g.cs[j]);
            ++j;
            gm_valid = false;
        }
    }
    return out;
}

EPoly mono_scale(const EPoly& f, const Mono& m) {
    EPoly out = f;
    for (auto& mm : out.ms) mm = mono_mul(mm, m);
    return out;
}

struct CapHit {
    std::string what;
};

struct BasisEl {
    EPoly p;                 // monic
    std::vector<EPoly> row;  // p == sum_k row[k] * input_k
    bool redundant = false;
};

struct Pair {
    std::uint32_t deg;
    std::uint32_t i, j;  // i < j
    Mono lcm;
};

struct Engine {
    GBOptions opts;
    std::size_t n_inputs = 0;
    std::vector<BasisEl> basis;
    std::vector<Pair> pairs;
    std::size_t stored_terms = 0;
    const EPoly* watch = nullptr; // stop the run once this reduces to zero
    bool watch_hit = false;

    std::size_t transient_size(const EPoly& f, const std::vector<EPoly>* usage) const {
        std::size_t n = f.size();
        if (usage)
            for (const auto& u : *usage) n += u.size();
        return n;
    }

    /// Deterministic full reduction against the current basis. When `usage`
    /// is given (pre-sized to n_inputs), it accumulates the input cofactors
    /// spent, so f_in == result + sum_k usage[k] * input_k on top of whatever
    /// usage already held.
    EPoly reduce_full(EPoly f, std::vector<EPoly>* usage) const {
        EPoly nf;
        std::size_t head = 0;
        while (head < f.size()) {
            const Mono& lead = f.ms[head];
            std::size_t hit = basis.size();
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (mono_divides(basis[k].p.lm(), lead)) {
                    hit = k;
                    break;
                }
            if (hit == basis.size()) {
                nf.ms.push_back(f.ms[head]);
                nf.cs.push_back(f.cs[head]);
                ++head;
                continue;
            }
            const BasisEl& b = basis[hit];
            Rational q = f.cs[head];
            Mono shift = mono_quot(lead, b.p.lm());
            f = axpy_from(f, head, -q, shift, b.p);
            head = 0;
            if (usage)
                for (std::size_t k = 0; k < n_inputs; ++k)
                    if (!b.row[k].zero())
                        (*usage)[k] = axpy_from((*usage)[k], 0, q, shift, b.row[k]);
            if (stored_terms + transient_size(f, usage) >
                static_cast<std::size_t>(opts.max_terms))
                throw CapHit{"term cap exceeded during reduction"};
        }
        return nf;
    }

    /// True exactly when a full reduction of f against the current basis
    /// reaches zero. Mirrors reduce_full's reducer choice, so a later tracked
    /// reduction replays the same rewrites. Gives up (false) on the first
    /// irreducible leading monomial or when the rewrite outgrows the term
    /// cap; a false answer therefore claims nothing.
    bool probes_to_zero(EPoly f) const {
        while (!f.zero()) {
            const Mono& lead = f.lm();
            std::size_t hit = basis.size();
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (mono_divides(basis[k].p.lm(), lead)) {
                    hit = k;
                    break;
                }
            if (hit == basis.size()) return false;
            const BasisEl& b = basis[hit];
            Rational q = f.cs[0];
            Mono shift = mono_quot(lead, b.p.lm());
            f = axpy_from(f, 0, -q, shift, b.p);
            if (stored_terms + f.size() > static_cast<std::size_t>(opts.max_terms))
                return false;
        }
        return true;
    }

    bool watch_fired() {
        if (watch_hit || (watch && probes_to_zero(*watch))) watch_hit = true;
        return watch_hit;
    }

    /// Gebauer-Moeller update of the pair queue for new element index t.
    void update_pairs(std::uint32_t t) {
        const Mono& h = basis[t].p.lm();
        struct Cand {
            std::uint32_t i;
            Mono lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (std::uint32_t i = 0; i < t; ++i)
            if (!basis[i].redundant)
                cands.push_back({i, mono_lcm(basis[i].p.lm(), h),
                                 mono_coprime(basis[i].p.lm(), h)});
        std::vector<Cand> kept;
        for (std::size_t pos = 0; pos < cands.size(); ++pos) {
            const Cand& c = cands[pos];
            bool drop = false;
            if (!c.coprime) {
                for (std::size_t q = pos + 1; q < cands.size() && !drop; ++q)
                    if (mono_divides(cands[q].lcm, c.lcm)) drop = true;
                for (std::size_t q = 0; q < kept.size() && !drop; ++q)
                    if (mono_divides(kept[q].lcm, c.lcm)) drop = true;
            }
            if (!drop) kept.push_back(c);
        }
        std::vector<Pair> fresh;
        for (const Cand& c : kept)
            if (!c.coprime) fresh.push_back({c.lcm.deg, c.i, t, c.lcm});
        // Old pairs whose lcm strictly absorbs the new leading monomial are
        // covered by the two fresh pairs through the chain criterion.
        std::vector<Pair> remain;
        remain.reserve(pairs.size() + fresh.size());
        for (const Pair& p : pairs) {
            bool prune = mono_divides(h, p.lcm) &&
                         !mono_equal(mono_lcm(basis[p.i].p.lm(), h), p.lcm) &&
                         !mono_equal(mono_lcm(basis[p.j].p.lm(), h), p.lcm);
            if (!prune) remain.push_back(p);
        }
        for (Pair& p : fresh) remain.push_back(std::move(p));
        pairs = std::move(remain);
        for (std::uint32_t i = 0; i < t; ++i)
            if (!basis[i].redundant && mono_divides(h, basis[i].p.lm()))
                basis[i].redundant = true;
    }

    /// Appends a nonzero reduced element (made monic here) and refreshes the
    /// pair queue.
    void add_element(EPoly f, std::vector<EPoly> row) {
        if (basis.size() >= static_cast<std::size_t>(opts.max_basis))
            throw CapHit{"basis size cap exceeded"};
        const Rational lc = f.lc();
        if (lc != 1) {
            for (auto& c : f.cs) c /= lc;
            for (auto& r : row)
                for (auto& c : r.cs) c /= lc;
        }
        stored_terms += f.size();
        for (const auto& r : row) stored_terms += r.size();
        if (stored_terms > static_cast<std::size_t>(opts.max_terms))
            throw CapHit{"term cap exceeded by stored basis"};
        basis.push_back({std::move(f), std::move(row), false});
        update_pairs(static_cast<std::uint32_t>(basis.size() - 1));
    }

    void seed(const std::vector<EPoly>& inputs) {
        n_inputs = inputs.size();
        for (std::size_t k = 0; k < inputs.size(); ++k) {
            if (inputs[k].zero()) continue;
            std::vector<EPoly> usage(n_inputs);
            EPoly nf = reduce_full(inputs[k], &usage);
            if (nf.zero()) continue;
            std::vector<EPoly> row(n_inputs);
            Mono one;
            row[k].ms.push_back(one);
            row[k].cs.push_back(Rational(1));
            for (std::size_t j = 0; j < n_inputs; ++j)
                if (!usage[j].zero())
                    row[j] = axpy_from(row[j], 0, Rational(-1), one, usage[j]);
            add_element(std::move(nf), std::move(row));
        }
    }

    /// Processes pairs in (degree, i, j) order until the queue drains or a
    /// cap fires. Returns true when the basis is complete. A watch target is
    /// probed after every basis change; once it reduces to zero the queue is
    /// abandoned, leaving a partial basis that already proves the membership.
    bool run(std::string& diagnostic) {
        try {
            if (watch_fired()) {
                diagnostic = "run stopped once the membership target reduced to zero";
                return false;
            }
            while (!pairs.empty()) {
                std::size_t best = 0;
                for (std::size_t p = 1; p < pairs.size(); ++p) {
                    const Pair &a = pairs[p], &b = pairs[best];
                    if (a.deg != b.deg ? a.deg < b.deg
                                       : (a.i != b.i ? a.i < b.i : a.j < b.j))
                        best = p;
                }
                Pair pr = pairs[best];
                pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
                if (pr.deg > static_cast<std::uint32_t>(
                                 std::min<std::int64_t>(opts.max_degree, 0x7FFFFFFF)))
                    throw CapHit{"degree cap exceeded by S-pair of degree " +
                                 std::to_string(pr.deg)};
                const BasisEl& bi = basis[pr.i];
                const BasisEl& bj = basis[pr.j];
                Mono si = mono_quot(pr.lcm, bi.p.lm());
                Mono sj = mono_quot(pr.lcm, bj.p.lm());
                EPoly sp = axpy_from(mono_scale(bi.p, si), 0, Rational(-1), sj, bj.p);
                if (sp.zero()) continue;
                std::vector<EPoly> usage(n_inputs);
                EPoly nf = reduce_full(sp, &usage);
                if (nf.zero()) continue;
                std::vector<EPoly> row(n_inputs);
                for (std::size_t k = 0; k < n_inputs; ++k) {
                    row[k] = bi.row[k].zero() ? EPoly{}
                                              : mono_scale(bi.row[k], si);
                    if (!bj.row[k].zero())
                        row[k] = axpy_from(row[k], 0, Rational(-1), sj, bj.row[k]);
                    if (!usage[k].zero())
                        row[k] = axpy_from(row[k], 0, Rational(-1), Mono{}, usage[k]);
                }
                add_element(std::move(nf), std::move(row));
                if (watch_fired()) {
                    diagnostic = "run stopped once the membership target reduced to zero";
                    return false;
                }
            }
            return true;
        } catch (const CapHit& cap) {
            diagnostic = cap.what;
            return false;
        }
    }

    /// Keeps one element per minimal leading monomial, tail-reduces each
    /// against the rest, and sorts ascending. On a complete run the result is
    /// the unique reduced basis.
    void interreduce() {
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!basis[i].redundant) order.push_back(i);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (mono_less(basis[a].p.lm(), basis[b].p.lm())) return true;
            if (mono_less(basis[b].p.lm(), basis[a].p.lm())) return false;
            return a < b;
        });
        std::vector<BasisEl> kept;
        for (std::size_t idx : order) {
            bool covered = false;
            for (const BasisEl& k : kept)
                if (mono_divides(k.p.lm(), basis[idx].p.lm())) {
                    covered = true;
                    break;
                }
            if (!covered) kept.push_back(std::move(basis[idx]));
        }
        basis = std::move(kept);
        pairs.clear();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            BasisEl self = std::move(basis[i]);
            std::vector<BasisEl> others;
            others.reserve(basis.size() - 1);
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Engine view;
            view.opts = opts;
            view.n_inputs = n_inputs;
            view.basis = std::move(others);
            view.stored_terms = 0;
            std::vector<EPoly> usage(n_inputs);
            EPoly nf = view.reduce_full(self.p, &usage);
            for (std::size_t k = 0; k < n_inputs; ++k)
                if (!usage[k].zero())
                    self.row[k] = axpy_from(self.row[k], 0, Rational(-1), Mono{}, usage[k]);
            self.p = std::move(nf);
            basis[i] = std::move(self);
        }
    }
};

/// Shared bundle for reduction against a finished public basis.
struct BasisView {
    Engine eng;
    std::vector<std::size_t> laurent;
};

BasisView make_view(const GroebnerBasis& gb, const GBOptions& opts) {
    BasisView view;
    view.eng.opts = opts;
    view.eng.n_inputs = gb.input_count();
    view.laurent = laurent_positions(*gb.ideal.source_ring);
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        BasisEl el;
        el.p = to_epoly(gb.basis[i]);
        for (const ExactPoly& c : gb.cofactors[i]) el.row.push_back(to_epoly(c));
        view.eng.stored_terms += el.p.size();
        for (const auto& r : el.row) view.eng.stored_terms += r.size();
        view.eng.basis.push_back(std::move(el));
    }
    return view;
}

ExactPoly shift_laurent(const ExactPoly& p, std::size_t var, std::int32_t delta) {
    std::vector<ExactPoly::Term> terms = p.terms();
    for (auto& t : terms) t.exps[var] += delta;
    return ExactPoly::from_terms(p.ring(), std::move(terms));
}

/// Membership is invariant under unit multiples, so divide out the extreme
/// power of the first Laurent variable; this keeps high unit powers (for
/// instance longitude framings) away from the degree caps. Sets `strip` to
/// the power divided out and `strip_var` to the variable it came from.
ExactPoly strip_extreme_units(const ExactPoly& target, const std::vector<std::size_t>& laurent,
                              std::int32_t& strip, std::size_t& strip_var) {
    strip = 0;
    strip_var = 0;
    if (laurent.empty() || target.is_zero()) return target;
    strip_var = laurent[0];
    std::int32_t lo = target.terms()[0].exps[strip_var];
    for (const auto& t : target.terms()) lo = std::min(lo, t.exps[strip_var]);
    if (lo == 0) return target;
    strip = lo;
    return shift_laurent(target, strip_var, -lo);
}

}  // namespace

ExactPoly LiftedIdeal::lift(const ExactPoly& p) const {
    return lift_into(ring, p, laurent_positions(*source_ring));
}

ExactPoly LiftedIdeal::lower(const ExactPoly& p) const {
    return lower_into(source_ring, p, laurent_positions(*source_ring));
}

LiftedIdeal lift_ideal(RingPtr source_ring, const std::vector<ExactPoly>& generators) {
    if (!source_ring) throw std::invalid_argument("lift_ideal: null ring");
    LiftedIdeal out;
    out.source_ring = source_ring;
    std::vector<std::size_t> laurent = laurent_positions(*source_ring);
    std::vector<VarSpec> vars;
    vars.reserve(source_ring->size() + laurent.size());
    for (std::size_t j = 0; j < laurent.size(); ++j) {
        std::string name = partner_name(j);
        if (source_ring->index_of(name))
            throw std::invalid_argument("variable name " + name +
                                        " collides with the inverse partner");
        vars.push_back({name, false});
    }
    for (const VarSpec& v : source_ring->vars()) vars.push_back({v.name, false});
    out.ring = make_ring(std::move(vars));
    for (const ExactPoly& g : generators) {
        if (*g.ring() != *source_ring)
            throw std::invalid_argument("generator ring mismatch");
        out.generators.push_back(lift_into(out.ring, g, laurent));
    }
    const std::size_t k = laurent.size();
    for (std::size_t j = 0; j < k; ++j) {
        Exponents e(out.ring->size(), 0);
        e[j] = 1;
        e[k + laurent[j]] = 1;
        ExactPoly rel = ExactPoly::monomial(out.ring, std::move(e), Rational(1)) -
                        ExactPoly::constant(out.ring, Rational(1));
        out.unit_relations.push_back(std::move(rel));
    }
    return out;
}

Verdict GroebnerBasis::proper() const {
    if (contains_one) return Verdict::False;
    return reduced ? Verdict::True : Verdict::Indeterminate;
}

GroebnerBasis groebner_basis(RingPtr ring, const std::vector<ExactPoly>& generators,
                             const GBOptions& opts, const ExactPoly* stop_when_member) {
    GroebnerBasis out;
    out.opts = opts;
    out.ideal = lift_ideal(std::move(ring), generators);
    Engine eng;
    eng.opts = opts;
    std::vector<EPoly> inputs;
    for (const ExactPoly& g : out.ideal.generators) inputs.push_back(to_epoly(g));
    for (const ExactPoly& r : out.ideal.unit_relations) inputs.push_back(to_epoly(r));
    EPoly watch;
    if (stop_when_member) {
        if (*stop_when_member->ring() != *out.ideal.source_ring)
            throw std::invalid_argument("groebner_basis: membership target not in the ideal ring");
        std::int32_t strip = 0;
        std::size_t strip_var = 0;
        ExactPoly stripped = strip_extreme_units(
            *stop_when_member, laurent_positions(*out.ideal.source_ring), strip, strip_var);
        watch = to_epoly(out.ideal.lift(stripped));
        eng.watch = &watch;
    }
    bool seeded = true;
    try {
        eng.seed(inputs);
    } catch (const CapHit& cap) {
        out.diagnostic = cap.what;
        seeded = false;
    }
    out.reduced = seeded && eng.run(out.diagnostic);
    out.membership_stop = eng.watch_hit;
    // An early-stopped basis is exported untouched so that reducing the watch
    // target replays the exact rewrites the probe performed.
    if (!eng.watch_hit) eng.interreduce();
    for (const BasisEl& el : eng.basis) {
        out.basis.push_back(from_epoly(out.ideal.ring, el.p));
        std::vector<ExactPoly> row;
        for (const EPoly& r : el.row) row.push_back(from_epoly(out.ideal.ring, r));
        out.cofactors.push_back(std::move(row));
        if (el.p.lm().deg == 0) out.contains_one = true;
    }
    return out;
}

ExactPoly reduce(const ExactPoly& p, const GroebnerBasis& gb) {
    if (*p.ring() != *gb.ideal.source_ring)
        throw std::invalid_argument("reduce: polynomial not in the basis ring");
    BasisView view = make_view(gb, gb.opts);
    try {
        EPoly nf = view.eng.reduce_full(to_epoly(gb.ideal.lift(p)), nullptr);
        return gb.ideal.lower(from_epoly(gb.ideal.ring, nf));
    } catch (const CapHit& cap) {
        throw std::runtime_error("reduce: " + cap.what);
    }
}

namespace {

MembershipCertificate build_certificate(const GroebnerBasis& gb, const ExactPoly& target,
                                        std::int32_t strip, std::size_t strip_var,
                                        const std::vector<EPoly>& usage) {
    MembershipCertificate cert;
    cert.source_ring = gb.ideal.source_ring;
    cert.lifted_ring = gb.ideal.ring;
    cert.target = target;
    for (const ExactPoly& g : gb.ideal.generators) cert.generators.push_back(gb.ideal.lower(g));
    cert.unit_relations = gb.ideal.unit_relations;
    for (const EPoly& u : usage) cert.cofactors.push_back(from_epoly(gb.ideal.ring, u));

    const std::vector<std::size_t> laurent = laurent_positions(*gb.ideal.source_ring);
    if (strip > 0) {
        // target == V^strip * stripped, so scale every cofactor by V^strip.
        std::size_t v_slot = laurent.size() + strip_var;
        ExactPoly vpow = ExactPoly::variable(gb.ideal.ring,
                                             gb.ideal.ring->var(v_slot).name, strip);
        for (ExactPoly& c : cert.cofactors) c = c * vpow;
        cert.unit_power = 0;
    } else if (strip < 0) {
        // target == V^strip * stripped with strip = -m: clearing denominators
        // costs V^m on the left and a geometric correction on the unit
        // relation V*W - 1, assembled per target term below.
        const std::int64_t m = -static_cast<std::int64_t>(strip);
        cert.unit_power = m;
        std::size_t partner = 0;
        for (std::size_t j = 0; j < laurent.size(); ++j)
            if (laurent[j] == strip_var) partner = j;
        std::size_t v_slot = laurent.size() + strip_var;
        std::vector<ExactPoly::Term> corr;
        for (const auto& t : target.terms()) {
            std::int64_t e = t.exps[strip_var];
            if (e >= 0) continue;
            // Lift the residual monomial (other Laurent variables and all),
            // then graft on the V and W powers of the geometric series.
            ExactPoly::Term residual = t;
            residual.exps[strip_var] = 0;
            ExactPoly base =
                lift_into(gb.ideal.ring,
                          ExactPoly::from_terms(cert.source_ring, {residual}), laurent);
            for (std::int64_t j = 0; j < -e; ++j) {
                ExactPoly::Term nt = base.terms()[0];
                nt.exps[v_slot] += static_cast<std::int32_t>(e + m + j);
                nt.exps[partner] += static_cast<std::int32_t>(j);
                corr.push_back(std::move(nt));
            }
        }
        std::size_t rel_slot = gb.ideal.generators.size() + partner;
        cert.cofactors[rel_slot] =
            cert.cofactors[rel_slot] +
            ExactPoly::from_terms(gb.ideal.ring, std::move(corr));
    }
    return cert;
}

}  // namespace

MembershipResult membership_with_certificate(const ExactPoly& target, const GroebnerBasis& gb) {
    if (*target.ring() != *gb.ideal.source_ring)
        throw std::invalid_argument("membership: target not in the ideal ring");
    MembershipResult res;
    if (target.is_zero()) {
        std::vector<EPoly> usage(gb.input_count());
        res.verdict = Verdict::True;
        res.certificate = build_certificate(gb, target, 0, 0, usage);
        if (!check_certificate(*res.certificate))
            throw std::logic_error("freshly built certificate failed its own check");
        return res;
    }

    std::int32_t strip = 0;
    std::size_t strip_var = 0;
    ExactPoly stripped = strip_extreme_units(
        target, laurent_positions(*gb.ideal.source_ring), strip, strip_var);

    BasisView view = make_view(gb, gb.opts);
    std::vector<EPoly> usage(gb.input_count());
    EPoly nf;
    try {
        nf = view.eng.reduce_full(to_epoly(gb.ideal.lift(stripped)), &usage);
    } catch (const CapHit& cap) {
        res.verdict = Verdict::Indeterminate;
        res.note = cap.what;
        return res;
    }
    if (nf.zero()) {
        res.verdict = Verdict::True;
        res.certificate = build_certificate(gb, target, strip, strip_var, usage);
        if (!check_certificate(*res.certificate))
            throw std::logic_error("freshly built certificate failed its own check");
        return res;
    }
    if (gb.reduced) {
        res.verdict = Verdict::False;
        res.witness = gb.ideal.lower(from_epoly(gb.ideal.ring, nf));
        if (res.witness->is_zero())
            throw std::logic_error("nonzero normal form lowered to zero");
    } else {
        res.verdict = Verdict::Indeterminate;
        res.note = "basis incomplete: " + gb.diagnostic;
    }
    return res;
}

MembershipResult membership_with_certificate(const ExactPoly& target,
                                             const std::vector<ExactPoly>& generators,
                                             const GBOptions& opts) {
    GroebnerBasis gb = groebner_basis(target.ring(), generators, opts, &target);
    return membership_with_certificate(target, gb);
}

Verdict ideals_equal(const std::vector<ExactPoly>& lhs, const std::vector<ExactPoly>& rhs,
                     const GBOptions& opts) {
    if (lhs.empty() && rhs.empty()) return Verdict::True;
    RingPtr ring = !lhs.empty() ? lhs.front().ring() : rhs.front().ring();
    GroebnerBasis gl = groebner_basis(ring, lhs, opts);
    GroebnerBasis gr = groebner_basis(ring, rhs, opts);
    if (gl.reduced && gr.reduced) {
        if (gl.basis.size() != gr.basis.size()) return Verdict::False;
        for (std::size_t i = 0; i < gl.basis.size(); ++i)
            if (gl.basis[i] != gr.basis[i]) return Verdict::False;
        return Verdict::True;
    }
    // A capped side can still confirm membership (reductions to zero remain
    // sound); it just cannot refute it.
    Verdict acc = Verdict::True;
    auto absorb = [&acc](const GroebnerBasis& gb, const std::vector<ExactPoly>& gens) {
        for (const ExactPoly& g : gens) {
            if (acc == Verdict::False) return;
            ExactPoly nf = reduce(g, gb);
            if (nf.is_zero()) continue;
            acc = gb.reduced ? Verdict::False : Verdict::Indeterminate;
        }
    };
    absorb(gl, rhs);
    absorb(gr, lhs);
    return acc;
}

bool check_certificate(const MembershipCertificate& cert) {
    if (!cert.source_ring || !cert.lifted_ring) return false;
    if (cert.unit_power < 0) return false;
    if (cert.cofactors.size() != cert.generators.size() + cert.unit_relations.size())
        return false;

    const Ring& src = *cert.source_ring;
    const Ring& lifted = *cert.lifted_ring;
    std::vector<std::size_t> laurent = laurent_positions(src);
    const std::size_t k = laurent.size();
    if (cert.unit_relations.size() != k) return false;
    if (lifted.size() != src.size() + k) return false;
    for (std::size_t v = 0; v < lifted.size(); ++v)
        if (lifted.var(v).laurent) return false;
    for (std::size_t v = 0; v < src.size(); ++v)
        if (lifted.var(k + v).name != src.var(v).name) return false;
    if (cert.unit_power > 0 && k == 0) return false;

    // The unit relations must literally be V_j * W_j - 1; anything else could
    // smuggle in a fake membership.
    for (std::size_t j = 0; j < k; ++j) {
        Exponents e(lifted.size(), 0);
        e[j] = 1;
        e[k + laurent[j]] = 1;
        ExactPoly expected = ExactPoly::monomial(cert.lifted_ring, std::move(e), Rational(1)) -
                             ExactPoly::constant(cert.lifted_ring, Rational(1));
        if (cert.unit_relations[j] != expected) return false;
    }

    ExactPoly lhs = lift_into(cert.lifted_ring, cert.target, laurent);
    if (cert.unit_power > 0) {
        ExactPoly vpow = ExactPoly::variable(
            cert.lifted_ring, lifted.var(k + laurent[0]).name,
            static_cast<std::int32_t>(cert.unit_power));
        lhs = lhs * vpow;
    }
    ExactPoly rhs = ExactPoly::zero(cert.lifted_ring);
    for (std::size_t i = 0; i < cert.generators.size(); ++i)
        rhs += cert.cofactors[i] * lift_into(cert.lifted_ring, cert.generators[i], laurent);
    for (std::size_t j = 0; j < k; ++j)
        rhs += cert.cofactors[cert.generators.size() + j] * cert.unit_relations[j];
    return lhs == rhs;
}

nlohmann::ordered_json certificate_to_json(const MembershipCertificate& cert) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json ring = nlohmann::ordered_json::array();
    for (const VarSpec& v : cert.source_ring->vars())
        ring.push_back({{"name", v.name}, {"laurent", v.laurent}});
    j["ring"] = std::move(ring);
    nlohmann::ordered_json lifted = nlohmann::ordered_json::array();
    for (const VarSpec& v : cert.lifted_ring->vars()) lifted.push_back(v.name);
    j["lifted_ring"] = std::move(lifted);
    j["target"] = cert.target.to_string();
    j["unit_power"] = cert.unit_power;
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const ExactPoly& g : cert.generators) gens.push_back(g.to_string());
    j["generators"] = std::move(gens);
    nlohmann::ordered_json rels = nlohmann::ordered_json::array();
    for (const ExactPoly& r : cert.unit_relations) rels.push_back(r.to_string());
    j["unit_relations"] = std::move(rels);
    nlohmann::ordered_json cofs = nlohmann::ordered_json::array();
    for (const ExactPoly& c : cert.cofactors) cofs.push_back(c.to_string());
    j["cofactors"] = std::move(cofs);
    return j;
}

MembershipCertificate certificate_from_json(const nlohmann::ordered_json& j) {
    MembershipCertificate cert;
    std::vector<VarSpec> src_vars;
    for (const auto& v : j.at("ring"))
        src_vars.push_back({v.at("name").get<std::string>(), v.at("laurent").get<bool>()});
    cert.source_ring = make_ring(std::move(src_vars));
    std::vector<VarSpec> lifted_vars;
    for (const auto& v : j.at("lifted_ring"))
        lifted_vars.push_back({v.get<std::string>(), false});
    cert.lifted_ring = make_ring(std::move(lifted_vars));
    cert.target = parse_poly(cert.source_ring, j.at("target").get<std::string>());
    cert.unit_power = j.at("unit_power").get<std::int64_t>();
    for (const auto& g : j.at("generators"))
        cert.generators.push_back(parse_poly(cert.source_ring, g.get<std::string>()));
    for (const auto& r : j.at("unit_relations"))
        cert.unit_relations.push_back(parse_poly(cert.lifted_ring, r.get<std::string>()));
    for (const auto& c : j.at("cofactors"))
        cert.cofactors.push_back(parse_poly(cert.lifted_ring, c.get<std::string>()));
    return cert;
}

}  // namespace bhv
