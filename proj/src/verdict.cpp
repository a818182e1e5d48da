#include "bhverify/verdict.hpp"

#include <algorithm>
#include <stdexcept>

namespace bhv {

namespace {

using ordered_json = nlohmann::ordered_json;

long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in evidence arithmetic");
    return out;
}

const ordered_json& field(const ordered_json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw std::invalid_argument(std::string("evidence node is missing field '") + name + "'");
    return *it;
}

long long int_field(const ordered_json& j, const char* name) {
    const ordered_json& v = field(j, name);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("evidence field '") + name +
                                    "' is not an integer");
    return v.get<long long>();
}

}  // namespace

bool covering_step_consistent(const CoveringStep& step) {
    if (step.d == 0 || step.k == 0 || step.n == 0) return false;
    long long rk = checked_mul(step.r, step.k);
    long long sn = checked_mul(step.s, step.n);
    if (step.d != checked_mul(step.k, step.n)) return false;
    if (step.p != rk) return false;
    if (step.family == 1) {
        if (step.p < 2 && step.p > -3) return false;
        return sn - rk == 1 && step.p + 1 == sn;
    }
    if (step.family == 2) {
        if (step.p > -2 && step.p < 2) return false;
        return sn - 2 * rk == 1 && 2 * step.p + 1 == sn;
    }
    return false;
}

bool bezout_step_consistent(const BezoutStep& step) {
    if (step.pairs.empty()) return false;
    long long total = 0;
    for (const auto& [d, a] : step.pairs) total += checked_mul(a, d);
    return total == 1;
}

ordered_json evidence_membership(const std::string& claim, const MembershipCertificate& cert) {
    ordered_json node;
    node["kind"] = "membership";
    node["claim"] = claim;
    node["certificate"] = certificate_to_json(cert);
    return node;
}

ordered_json evidence_refutation(const std::string& claim, const ExactPoly& witness) {
    ordered_json node;
    node["kind"] = "refutation";
    node["claim"] = claim;
    node["witness"] = witness.to_string();
    return node;
}

ordered_json evidence_indeterminate(const std::string& claim, const std::string& note) {
    ordered_json node;
    node["kind"] = "indeterminate";
    node["claim"] = claim;
    node["note"] = note;
    return node;
}

ordered_json evidence_covering(const CoveringStep& step, ordered_json base) {
    ordered_json node;
    node["kind"] = "covering";
    node["family"] = step.family;
    node["r"] = step.r;
    node["s"] = step.s;
    node["k"] = step.k;
    node["n"] = step.n;
    node["p"] = step.p;
    node["d"] = step.d;
    node["base"] = std::move(base);
    return node;
}

ordered_json evidence_bezout(long long r, long long s, const BezoutStep& bezout,
                             std::vector<ordered_json> children) {
    ordered_json node;
    node["kind"] = "bezout";
    node["r"] = r;
    node["s"] = s;
    ordered_json pairs = ordered_json::array();
    for (const auto& [d, a] : bezout.pairs) pairs.push_back(ordered_json::array({d, a}));
    node["pairs"] = std::move(pairs);
    node["children"] = std::move(children);
    return node;
}

ordered_json evidence_connect_sum(std::vector<ordered_json> children) {
    ordered_json node;
    node["kind"] = "connect_sum";
    node["children"] = std::move(children);
    return node;
}

ordered_json knot_verdict_to_json(const KnotVerdict& v) {
    ordered_json j;
    j["knot"] = v.knot;
    j["condition"] = v.condition;
    j["verdict"] = verdict_name(v.verdict);
    j["notes"] = v.notes;
    j["evidence"] = v.evidence;
    return j;
}

KnotVerdict knot_verdict_from_json(const ordered_json& j) {
    KnotVerdict v;
    v.knot = field(j, "knot").get<std::string>();
    v.condition = field(j, "condition").get<std::string>();
    std::string name = field(j, "verdict").get<std::string>();
    // a verdict that rests on an unverified hypothesis is treated as open
    v.verdict = name == "unchecked_hypothesis" ? Verdict::Indeterminate : verdict_from_name(name);
    for (const auto& n : field(j, "notes")) v.notes.push_back(n.get<std::string>());
    v.evidence = field(j, "evidence");
    return v;
}

Verdict recheck_evidence(const ordered_json& node) {
    if (!node.is_object()) throw std::invalid_argument("evidence node is not an object");
    std::string kind = field(node, "kind").get<std::string>();
    if (kind == "membership") {
        MembershipCertificate cert = certificate_from_json(field(node, "certificate"));
        return check_certificate(cert) ? Verdict::True : Verdict::False;
    }
    if (kind == "refutation") {
        field(node, "witness");
        return Verdict::False;
    }
    if (kind == "indeterminate") {
        field(node, "note");
        return Verdict::Indeterminate;
    }
    if (kind == "covering") {
        CoveringStep step;
        step.family = static_cast<int>(int_field(node, "family"));
        step.r = int_field(node, "r");
        step.s = int_field(node, "s");
        step.k = int_field(node, "k");
        step.n = int_field(node, "n");
        step.p = int_field(node, "p");
        step.d = int_field(node, "d");
        if (!covering_step_consistent(step)) return Verdict::False;
        const ordered_json& base = field(node, "base");
        if (!recheck_verdict_json(base)) return Verdict::False;
        return knot_verdict_from_json(base).verdict;
    }
    if (kind == "bezout") {
        long long r = int_field(node, "r");
        long long s = int_field(node, "s");
        BezoutStep bezout;
        const ordered_json& pairs = field(node, "pairs");
        for (const auto& pr : pairs) {
            if (!pr.is_array() || pr.size() != 2)
                throw std::invalid_argument("bezout pair is not a [d, a] array");
            bezout.pairs.emplace_back(pr[0].get<long long>(), pr[1].get<long long>());
        }
        if (!bezout_step_consistent(bezout)) return Verdict::False;
        const ordered_json& children = field(node, "children");
        if (children.size() != bezout.pairs.size()) return Verdict::False;
        Verdict acc = Verdict::True;
        for (std::size_t i = 0; i < children.size(); ++i) {
            const ordered_json& child = children[i];
            if (field(child, "kind").get<std::string>() != "covering")
                throw std::invalid_argument("bezout child is not a covering node");
            if (int_field(child, "d") != bezout.pairs[i].first) return Verdict::False;
            long long cr = int_field(child, "r"), cs = int_field(child, "s");
            bool same_pair = (cr == r && cs == s) || (cr == s && cs == r);
            if (!same_pair) return Verdict::False;
            acc = weakest_verdict(acc, recheck_evidence(child));
        }
        return acc;
    }
    if (kind == "connect_sum") {
        const ordered_json& children = field(node, "children");
        if (children.empty()) throw std::invalid_argument("connect_sum node has no children");
        Verdict acc = Verdict::True;
        for (const auto& child : children) {
            if (!recheck_verdict_json(child)) return Verdict::False;
            acc = weakest_verdict(acc, knot_verdict_from_json(child).verdict);
        }
        return acc;
    }
    throw std::invalid_argument("unknown evidence kind '" + kind + "'");
}

bool recheck_verdict_json(const ordered_json& verdict_object) {
    KnotVerdict claimed = knot_verdict_from_json(verdict_object);
    return recheck_evidence(claimed.evidence) == claimed.verdict;
}

KnotVerdict connect_sum(const std::vector<KnotVerdict>& parts) {
    if (parts.empty()) throw std::invalid_argument("connect sum of zero knots");
    KnotVerdict out;
    out.verdict = Verdict::True;
    std::string desc = "connectsum:[";
    std::vector<ordered_json> children;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) desc += ",";
        desc += parts[i].knot;
        out.verdict = weakest_verdict(out.verdict, parts[i].verdict);
        for (const std::string& note : parts[i].notes)
            if (std::find(out.notes.begin(), out.notes.end(), note) == out.notes.end())
                out.notes.push_back(note);
        children.push_back(knot_verdict_to_json(parts[i]));
    }
    out.knot = desc + "]";
    out.evidence = evidence_connect_sum(std::move(children));
    return out;
}

}  // namespace bhv
