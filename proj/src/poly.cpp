#include "bhverify/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bhv {

Ring::Ring(std::vector<VarSpec> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name.empty())
            throw std::invalid_argument("ring variable with empty name");
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i].name == vars_[j].name)
                throw std::invalid_argument("duplicate ring variable: " + vars_[i].name);
    }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    return std::nullopt;
}

std::string Ring::description() const {
    std::string out = "(";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) out += ", ";
        out += vars_[i].name;
        if (vars_[i].laurent) out += "^±1";
    }
    return out + ")";
}

RingPtr make_ring(std::vector<VarSpec> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

int compare_graded_lex(const Exponents& a, const Exponents& b) {
    std::int64_t da = 0, db = 0;
    for (auto e : a) da += e < 0 ? -std::int64_t(e) : e;
    for (auto e : b) db += e < 0 ? -std::int64_t(e) : e;
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {

struct MonoLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return compare_graded_lex(a, b) < 0;
    }
};

}  // namespace

ExactPoly ExactPoly::zero(RingPtr ring) {
    ExactPoly p;
    p.ring_ = std::move(ring);
    return p;
}

ExactPoly ExactPoly::constant(RingPtr ring, Rational value) {
    ExactPoly p;
    p.ring_ = std::move(ring);
    if (value != 0)
        p.terms_.push_back({Exponents(p.ring_->size(), 0), std::move(value)});
    return p;
}

ExactPoly ExactPoly::variable(RingPtr ring, std::string_view name, std::int32_t exp) {
    auto idx = ring->index_of(name);
    if (!idx)
        throw std::invalid_argument("unknown variable '" + std::string(name) + "' in ring " +
                                    ring->description());
    Exponents exps(ring->size(), 0);
    exps[*idx] = exp;
    return monomial(std::move(ring), std::move(exps), 1);
}

ExactPoly ExactPoly::monomial(RingPtr ring, Exponents exps, Rational coeff) {
    ExactPoly p;
    p.ring_ = std::move(ring);
    if (exps.size() != p.ring_->size())
        throw std::invalid_argument("exponent vector length mismatch");
    p.check_exponents(exps);
    if (coeff != 0)
        p.terms_.push_back({std::move(exps), std::move(coeff)});
    return p;
}

ExactPoly ExactPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    ExactPoly p;
    p.ring_ = std::move(ring);
    p.terms_ = std::move(terms);
    for (const auto& t : p.terms_) {
        if (t.exps.size() != p.ring_->size())
            throw std::invalid_argument("exponent vector length mismatch");
        p.check_exponents(t.exps);
    }
    p.normalize();
    return p;
}

void ExactPoly::check_exponents(const Exponents& exps) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] < 0 && !ring_->var(i).laurent)
            throw std::invalid_argument("negative exponent on non-laurent variable " +
                                        ring_->var(i).name);
}

void ExactPoly::normalize() {
    std::map<Exponents, Rational, MonoLess> acc;
    for (auto& t : terms_) {
        auto [it, fresh] = acc.try_emplace(std::move(t.exps), std::move(t.coeff));
        if (!fresh) it->second += t.coeff;
    }
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) terms_.push_back({it->first, it->second});
}

bool ExactPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto e : terms_[0].exps)
        if (e != 0) return false;
    return true;
}

Rational ExactPoly::constant_value() const {
    for (const auto& t : terms_) {
        bool is_const = true;
        for (auto e : t.exps)
            if (e != 0) { is_const = false; break; }
        if (is_const) return t.coeff;
    }
    return Rational(0);
}

std::int64_t ExactPoly::total_degree() const {
    std::int64_t best = 0;
    bool first = true;
    for (const auto& t : terms_) {
        std::int64_t d = 0;
        for (auto e : t.exps) d += e;
        if (first || d > best) { best = d; first = false; }
    }
    return best;
}

std::int32_t ExactPoly::max_abs_exponent(std::size_t var_index) const {
    std::int32_t best = 0;
    for (const auto& t : terms_)
        best = std::max(best, std::abs(t.exps[var_index]));
    return best;
}

void ExactPoly::check_same_ring(const ExactPoly& a, const ExactPoly& b) {
    if (!a.ring_ || !b.ring_)
        throw std::invalid_argument("operation on default-constructed polynomial");
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_))
        throw std::invalid_argument("ring mismatch: " + a.ring_->description() + " vs " +
                                    b.ring_->description());
}

ExactPoly ExactPoly::operator-() const {
    ExactPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

ExactPoly ExactPoly::operator+(const ExactPoly& other) const {
    check_same_ring(*this, other);
    ExactPoly out;
    out.ring_ = ring_;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        int c = compare_graded_lex(terms_[i].exps, other.terms_[j].exps);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            Rational sum = terms_[i].coeff + other.terms_[j].coeff;
            if (sum != 0) out.terms_.push_back({terms_[i].exps, std::move(sum)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
    return out;
}

ExactPoly ExactPoly::operator-(const ExactPoly& other) const {
    return *this + (-other);
}

ExactPoly ExactPoly::operator*(const ExactPoly& other) const {
    check_same_ring(*this, other);
    std::map<Exponents, Rational, MonoLess> acc;
    const std::size_t n = ring_->size();
    Exponents exps(n, 0);
    for (const auto& t1 : terms_) {
        for (const auto& t2 : other.terms_) {
            for (std::size_t v = 0; v < n; ++v) exps[v] = t1.exps[v] + t2.exps[v];
            auto [it, fresh] = acc.try_emplace(exps, Rational(0));
            if (fresh)
                it->second = t1.coeff * t2.coeff;
            else
                it->second += t1.coeff * t2.coeff;
        }
    }
    ExactPoly out;
    out.ring_ = ring_;
    out.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) out.terms_.push_back({it->first, it->second});
    return out;
}

ExactPoly ExactPoly::operator*(const Rational& scalar) const {
    if (scalar == 0) return zero(ring_);
    ExactPoly out = *this;
    for (auto& t : out.terms_) t.coeff *= scalar;
    return out;
}

ExactPoly operator*(const Rational& scalar, const ExactPoly& p) {
    return p * scalar;
}

bool ExactPoly::operator==(const ExactPoly& other) const {
    check_same_ring(*this, other);
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exps != other.terms_[i].exps || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

ExactPoly ExactPoly::pow(std::int64_t n) const {
    if (!ring_) throw std::invalid_argument("pow on default-constructed polynomial");
    if (n < 0) return unit_inverse().pow(-n);
    ExactPoly result = constant(ring_, 1);
    ExactPoly base = *this;
    std::int64_t e = n;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool ExactPoly::is_unit() const {
    if (terms_.size() != 1) return false;
    const auto& e = terms_[0].exps;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !ring_->var(i).laurent) return false;
    return true;
}

ExactPoly ExactPoly::unit_inverse() const {
    if (!is_unit())
        throw std::domain_error("not a unit: " + to_string());
    Exponents e = terms_[0].exps;
    for (auto& v : e) v = -v;
    return monomial(ring_, std::move(e), 1 / terms_[0].coeff);
}

ExactPoly ExactPoly::substitute(const std::map<std::string, ExactPoly>& bindings) const {
    if (bindings.empty()) return *this;
    std::vector<const ExactPoly*> image(ring_->size(), nullptr);
    RingPtr target = ring_;
    for (const auto& [name, value] : bindings) {
        auto idx = ring_->index_of(name);
        if (!idx)
            throw std::invalid_argument("substitute: unknown variable '" + name + "'");
        image[*idx] = &value;
        target = value.ring();
    }
    for (const auto& [name, value] : bindings)
        if (!(*value.ring() == *target))
            throw std::invalid_argument("substitute: images live in different rings");
    // Unbound variables must exist in the target ring.
    std::vector<std::optional<std::size_t>> carry(ring_->size());
    for (std::size_t v = 0; v < ring_->size(); ++v) {
        if (image[v]) continue;
        carry[v] = target->index_of(ring_->var(v).name);
        if (!carry[v])
            throw std::invalid_argument("substitute: variable " + ring_->var(v).name +
                                        " missing from target ring " + target->description());
    }
    ExactPoly acc = zero(target);
    for (const auto& t : terms_) {
        ExactPoly term_val = constant(target, t.coeff);
        Exponents passthrough(target->size(), 0);
        for (std::size_t v = 0; v < ring_->size(); ++v) {
            if (t.exps[v] == 0) continue;
            if (image[v]) {
                if (t.exps[v] < 0 && !image[v]->is_unit())
                    throw std::invalid_argument(
                        "substitute: laurent variable " + ring_->var(v).name +
                        " bound to non-unit " + image[v]->to_string());
                term_val *= image[v]->pow(t.exps[v]);
            } else {
                passthrough[*carry[v]] += t.exps[v];
            }
        }
        term_val *= monomial(target, std::move(passthrough), 1);
        acc += term_val;
    }
    return acc;
}

std::string ExactPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool negative = c < 0;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        Rational mag = negative ? Rational(-c) : c;
        std::string mono;
        for (std::size_t v = 0; v < t.exps.size(); ++v) {
            if (t.exps[v] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += ring_->var(v).name;
            if (t.exps[v] != 1) mono += '^' + std::to_string(t.exps[v]);
        }
        if (mono.empty()) {
            out << rational_to_string(mag);
        } else if (mag == 1) {
            out << mono;
        } else {
            out << rational_to_string(mag) << '*' << mono;
        }
    }
    return out.str();
}

namespace {

/// Minimal recursive-descent parser for the canonical polynomial text form.
class PolyParser {
  public:
    PolyParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

    ExactPoly parse() {
        ExactPoly acc = ExactPoly::zero(ring_);
        skip_ws();
        bool negative = consume_sign();
        acc += parse_term(negative);
        skip_ws();
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c != '+' && c != '-')
                fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            acc += parse_term(c == '-');
            skip_ws();
        }
        return acc;
    }

  private:
    RingPtr ring_;
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                    ": " + what + " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume_sign() {
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            bool neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    bool at_digit() const {
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    bool at_ident() const {
        return pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
    }

    std::string read_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string read_uint() {
        std::size_t start = pos_;
        while (at_digit()) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::int32_t read_int() {
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        long v = std::stol(read_uint());
        return static_cast<std::int32_t>(neg ? -v : v);
    }

    Rational read_rational() {
        std::string num = read_uint();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            num += '/' + read_uint();
        }
        return rational_from_string(num);
    }

    ExactPoly parse_term(bool negative) {
        Rational coeff = 1;
        Exponents exps(ring_->size(), 0);
        bool saw_factor = false;
        if (at_digit()) {
            coeff = read_rational();
            saw_factor = true;
        }
        while (true) {
            skip_ws();
            if (saw_factor) {
                if (pos_ < text_.size() && text_[pos_] == '*') {
                    ++pos_;
                    skip_ws();
                } else {
                    break;
                }
            }
            if (!at_ident()) {
                if (saw_factor) fail("expected variable after '*'");
                break;
            }
            std::string name = read_ident();
            auto idx = ring_->index_of(name);
            if (!idx) fail("unknown variable '" + name + "'");
            std::int32_t exp = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                skip_ws();
                exp = read_int();
            }
            exps[*idx] += exp;
            saw_factor = true;
        }
        if (!saw_factor) fail("expected term");
        if (negative) coeff = -coeff;
        return ExactPoly::monomial(ring_, std::move(exps), std::move(coeff));
    }
};

}  // namespace

ExactPoly parse_poly(RingPtr ring, std::string_view text) {
    return PolyParser(std::move(ring), text).parse();
}

namespace {

/// f as a dense coefficient ladder in `var`: coeffs[i] multiplies var^(i+off).
struct UnivariateView {
    std::vector<ExactPoly> coeffs;
    std::int32_t offset = 0;

    int degree() const {
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
            if (!coeffs[i].is_zero()) return i;
        return -1;
    }
};

UnivariateView split_by_var(const ExactPoly& f, std::size_t vi) {
    UnivariateView view;
    if (f.is_zero()) return view;
    std::int32_t lo = 0, hi = 0;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::int32_t e = t.exps[vi];
        if (first) { lo = hi = e; first = false; }
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    view.offset = lo;
    view.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), ExactPoly::zero(f.ring()));
    for (const auto& t : f.terms()) {
        Exponents rest = t.exps;
        std::int32_t e = rest[vi];
        rest[vi] = 0;
        view.coeffs[static_cast<std::size_t>(e - lo)] +=
            ExactPoly::monomial(f.ring(), std::move(rest), t.coeff);
    }
    return view;
}

ExactPoly join_by_var(const UnivariateView& view, const RingPtr& ring, std::size_t vi) {
    ExactPoly out = ExactPoly::zero(ring);
    for (std::size_t i = 0; i < view.coeffs.size(); ++i) {
        if (view.coeffs[i].is_zero()) continue;
        Exponents shift(ring->size(), 0);
        shift[vi] = view.offset + static_cast<std::int32_t>(i);
        out += view.coeffs[i] * ExactPoly::monomial(ring, std::move(shift), 1);
    }
    return out;
}

}  // namespace

ExactPoly exact_div(const ExactPoly& f, const ExactPoly& g, const std::string& var) {
    auto vi = f.ring()->index_of(var);
    if (!vi) throw std::invalid_argument("exact_div: unknown variable " + var);
    if (g.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (f.is_zero()) return f;
    UnivariateView fv = split_by_var(f, *vi);
    UnivariateView gv = split_by_var(g, *vi);
    int gd = gv.degree();
    const ExactPoly& glead = gv.coeffs[static_cast<std::size_t>(gd)];
    if (!glead.is_unit())
        throw std::domain_error("exact_div: leading coefficient of divisor is not a unit: " +
                                glead.to_string());
    ExactPoly glead_inv = glead.unit_inverse();
    UnivariateView q;
    int fd = fv.degree();
    if (fd - gd + 1 > 0) q.coeffs.assign(static_cast<std::size_t>(fd - gd + 1),
                                         ExactPoly::zero(f.ring()));
    q.offset = fv.offset - gv.offset;
    for (int d = fd; d >= gd; --d) {
        ExactPoly& lead = fv.coeffs[static_cast<std::size_t>(d)];
        if (lead.is_zero()) continue;
        ExactPoly qc = lead * glead_inv;
        q.coeffs[static_cast<std::size_t>(d - gd)] = qc;
        for (int i = 0; i <= gd; ++i)
            fv.coeffs[static_cast<std::size_t>(d - gd + i)] -= qc * gv.coeffs[static_cast<std::size_t>(i)];
    }
    for (const auto& c : fv.coeffs)
        if (!c.is_zero())
            throw std::domain_error("exact_div: nonzero remainder dividing " + f.to_string() +
                                    " by " + g.to_string());
    return join_by_var(q, f.ring(), *vi);
}

namespace {

bool univariate_in(const ExactPoly& p, std::size_t vi) {
    for (const auto& t : p.terms())
        for (std::size_t v = 0; v < t.exps.size(); ++v)
            if (v != vi && t.exps[v] != 0) return false;
    return true;
}

/// Plain univariate remainder over Rational coefficients.
ExactPoly univariate_rem(ExactPoly f, const ExactPoly& g, const RingPtr& ring, std::size_t vi) {
    UnivariateView gv = split_by_var(g, vi);
    int gd = gv.degree();
    while (!f.is_zero()) {
        UnivariateView fv = split_by_var(f, vi);
        int fd = fv.degree();
        int shift_f = fv.offset + fd;
        int shift_g = gv.offset + gd;
        if (shift_f < shift_g) break;
        Rational lc_f = fv.coeffs[static_cast<std::size_t>(fd)].constant_value();
        Rational lc_g = gv.coeffs[static_cast<std::size_t>(gd)].constant_value();
        Exponents mono(ring->size(), 0);
        mono[vi] = shift_f - shift_g;
        f -= ExactPoly::monomial(ring, std::move(mono), lc_f / lc_g) * g;
    }
    return f;
}

}  // namespace

ExactPoly univariate_gcd(const ExactPoly& a, const ExactPoly& b, const std::string& var) {
    auto vi = a.ring()->index_of(var);
    if (!vi) throw std::invalid_argument("univariate_gcd: unknown variable " + var);
    if (!univariate_in(a, *vi) || !univariate_in(b, *vi))
        throw std::invalid_argument("univariate_gcd: inputs are not univariate in " + var);
    for (const auto& poly : {a, b})
        for (const auto& t : poly.terms())
            if (t.exps[*vi] < 0)
                throw std::invalid_argument("univariate_gcd: negative exponents unsupported");
    ExactPoly f = a, g = b;
    while (!g.is_zero()) {
        ExactPoly r = univariate_rem(f, g, a.ring(), *vi);
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    UnivariateView fv = split_by_var(f, *vi);
    Rational lc = fv.coeffs[static_cast<std::size_t>(fv.degree())].constant_value();
    return f * (1 / lc);
}

}  // namespace bhv
