#include "bhverify/daha.hpp"

#include "bhverify/chebyshev.hpp"
#include "bhverify/gauss.hpp"

#include <chrono>
#include <map>
#include <stdexcept>
#include <utility>

namespace bhv {

namespace {

using Mat = std::vector<std::vector<ExactPoly>>;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        auto d = std::chrono::steady_clock::now() - start;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }
};

ExactPoly var(const RingPtr& ring, std::string_view name, std::int32_t exp = 1) {
    return ExactPoly::variable(ring, name, exp);
}

ExactPoly con(const RingPtr& ring, long value) {
    return ExactPoly::constant(ring, Rational(value));
}

ExactPoly tbar(const RingPtr& ring, std::string_view name) {
    return var(ring, name) - var(ring, name, -1);
}

/// Ring homomorphism into `target` sending each variable to images[name].
/// Every variable occurring in `p` must be bound.
ExactPoly transplant(const ExactPoly& p, const RingPtr& target,
                     const std::map<std::string, ExactPoly>& images) {
    ExactPoly out = ExactPoly::zero(target);
    for (const auto& term : p.terms()) {
        ExactPoly m = ExactPoly::constant(target, term.coeff);
        for (std::size_t i = 0; i < term.exps.size(); ++i) {
            if (term.exps[i] == 0) continue;
            auto it = images.find(p.ring()->var(i).name);
            if (it == images.end())
                throw std::invalid_argument("transplant: unbound variable " +
                                            p.ring()->var(i).name);
            m *= it->second.pow(term.exps[i]);
        }
        out += m;
    }
    return out;
}

Mat mat_identity(const RingPtr& ring, std::size_t n) {
    Mat m(n, std::vector<ExactPoly>(n, ExactPoly::zero(ring)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = ExactPoly::constant(ring, 1);
    return m;
}

Mat mat_scale(const ExactPoly& c, const Mat& a) {
    Mat out = a;
    for (auto& row : out)
        for (auto& e : row) e *= c;
    return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
    Mat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
    return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    Mat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    const RingPtr& ring = a[0][0].ring();
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat out(n, std::vector<ExactPoly>(m, ExactPoly::zero(ring)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
    return out;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

std::string mat_to_string(const Mat& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (j) out += ", ";
            out += a[i][j].to_string();
        }
        out += "]";
    }
    return out + "]";
}

Mat mat_substitute(const Mat& a, const std::map<std::string, ExactPoly>& bindings) {
    Mat out = a;
    for (auto& row : out)
        for (auto& e : row) e = e.substitute(bindings);
    return out;
}

void require_zero_mat(DahaReport& report, const std::string& label, const Mat& m) {
    if (!mat_is_zero(m)) report.residuals.push_back(label + ": " + mat_to_string(m));
}

void require_zero(DahaReport& report, const std::string& label, const ExactPoly& p) {
    if (!p.is_zero()) report.residuals.push_back(label + ": " + p.to_string());
}

void require_equal(DahaReport& report, const std::string& label, const ExactPoly& a,
                   const ExactPoly& b) {
    require_zero(report, label, a - b);
}

DahaReport finish(DahaReport report, const Timer& timer) {
    report.pass = report.residuals.empty();
    report.runtime_ms = timer.ms();
    return report;
}

/// Verifies the spherical cubic at q = -1, t3 = t4 = 1 on a commuting matrix
/// triple: x*y*z + x^2 + y^2 + z^2 + tb1*tb2*x = (tb1^2 + tb2^2 + 4) * id.
void check_cubic_on_matrices(DahaReport& report, const ModuleAction& action) {
    const RingPtr& ring = action.ring;
    ExactPoly tb1 = tbar(ring, "t1"), tb2 = tbar(ring, "t2");
    Mat id = mat_identity(ring, action.basis.size());
    Mat lhs = mat_mul(action.matX, mat_mul(action.matY, action.matZ));
    lhs = mat_add(lhs, mat_mul(action.matX, action.matX));
    lhs = mat_add(lhs, mat_mul(action.matY, action.matY));
    lhs = mat_add(lhs, mat_mul(action.matZ, action.matZ));
    lhs = mat_add(lhs, mat_scale(tb1 * tb2, action.matX));
    Mat rhs = mat_scale(tb1 * tb1 + tb2 * tb2 + con(ring, 4), id);
    require_zero_mat(report, "spherical cubic", mat_sub(lhs, rhs));
}

void check_commutators(DahaReport& report, const ModuleAction& action) {
    auto comm = [](const Mat& a, const Mat& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); };
    require_zero_mat(report, "[matX, matY]", comm(action.matX, action.matY));
    require_zero_mat(report, "[matX, matZ]", comm(action.matX, action.matZ));
    require_zero_mat(report, "[matY, matZ]", comm(action.matY, action.matZ));
}

}  // namespace

RingPtr daha_ring() {
    static RingPtr ring = make_ring({{"q", true},
                                     {"t1", true},
                                     {"t2", true},
                                     {"t3", true},
                                     {"t4", true},
                                     {"X", true}});
    return ring;
}

PolyRepOperators polyrep_operators() {
    RingPtr R = daha_ring();
    ExactPoly X = var(R, "X");
    ExactPoly Xinv = var(R, "X", -1);
    ExactPoly q = var(R, "q");
    ExactPoly one = con(R, 1);
    ExactPoly tb1 = tbar(R, "t1"), tb2 = tbar(R, "t2");
    ExactPoly tb3 = tbar(R, "t3"), tb4 = tbar(R, "t4");
    ExactPoly t2v = var(R, "t2"), t3v = var(R, "t3");
    ExactPoly q2X2 = var(R, "q", 2) * X * X;
    ExactPoly sy_image = var(R, "q", -2) * Xinv;  // X -> q^-2 X^-1
    ExactPoly numer2 = var(R, "q", 2) * tb2 * X * X + q * tb1 * X;
    ExactPoly denom2 = one - q2X2;
    ExactPoly numer3 = tb3 + tb4 * X;
    ExactPoly denom3 = one - X * X;

    PolyRepOperators ops;
    ops.ring = R;
    ops.xhat = {"xhat", [X](const ExactPoly& f) { return X * f; }};
    ops.s = {"s", [Xinv](const ExactPoly& f) {
                 return f.substitute({{"X", Xinv}});
             }};
    ops.yhat = {"yhat", [R](const ExactPoly& f) {
                    return f.substitute({{"X", var(R, "q", -2) * var(R, "X")}});
                }};
    ops.T2 = {"T2", [=](const ExactPoly& f) {
                  ExactPoly syf = f.substitute({{"X", sy_image}});
                  return t2v * syf - numer2 * exact_div(f - syf, denom2, "X");
              }};
    ops.T3 = {"T3", [=](const ExactPoly& f) {
                  ExactPoly sf = f.substitute({{"X", Xinv}});
                  return t3v * sf + numer3 * exact_div(f - sf, denom3, "X");
              }};
    auto T2 = ops.T2.action, T3 = ops.T3.action;
    ops.T2_inv = {"T2^-1", [=](const ExactPoly& f) { return T2(f) - tb2 * f; }};
    ops.T3_inv = {"T3^-1", [=](const ExactPoly& f) { return T3(f) - tb3 * f; }};
    auto T2i = ops.T2_inv.action, T3i = ops.T3_inv.action;
    ops.T1 = {"T1", [=](const ExactPoly& f) { return q * T2i(X * f); }};
    ops.T4 = {"T4", [=](const ExactPoly& f) { return Xinv * T3i(f); }};
    auto T1 = ops.T1.action, T4 = ops.T4.action;
    ops.T1_inv = {"T1^-1", [=](const ExactPoly& f) { return T1(f) - tb1 * f; }};
    ops.T4_inv = {"T4^-1", [=](const ExactPoly& f) { return T4(f) - tb4 * f; }};
    return ops;
}

nlohmann::ordered_json daha_report_to_json(const DahaReport& report, bool with_runtime) {
    nlohmann::ordered_json j;
    j["check"] = report.check;
    j["status"] = report.pass ? "pass" : "fail";
    j["residuals"] = report.residuals;
    j["notes"] = report.notes;
    if (with_runtime) j["runtime_ms"] = report.runtime_ms;
    return j;
}

DahaReport verify_daha_relations(int window) {
    if (window < 1) throw std::invalid_argument("verify_daha_relations: window must be >= 1");
    Timer timer;
    DahaReport report;
    report.check = "hecke-relations:window=" + std::to_string(window);
    PolyRepOperators ops = polyrep_operators();
    RingPtr R = ops.ring;
    ExactPoly q = var(R, "q");
    const LaurentOperator* ts[4] = {&ops.T1, &ops.T2, &ops.T3, &ops.T4};
    const char* names[4] = {"t1", "t2", "t3", "t4"};
    for (int n = -window; n <= window; ++n) {
        ExactPoly f = var(R, "X", n);
        for (int i = 0; i < 4; ++i) {
            ExactPoly ti = var(R, names[i]);
            ExactPoly ti_inv = var(R, names[i], -1);
            ExactPoly g = (*ts[i])(f) + ti_inv * f;
            ExactPoly h = (*ts[i])(g) - ti * g;
            require_zero(report,
                         "quadratic relation T" + std::to_string(i + 1) + " on X^" +
                             std::to_string(n),
                         h);
        }
        ExactPoly prod = ops.T4(ops.T3(ops.T2(ops.T1(f))));
        require_zero(report, "product relation on X^" + std::to_string(n), prod - q * f);
    }
    return finish(std::move(report), timer);
}

DunklImages symmetric_dunkl_images(int epsilon) {
    if (epsilon != 1 && epsilon != -1)
        throw std::invalid_argument("symmetric_dunkl_images: epsilon must be +1 or -1");
    DunklImages out;
    out.epsilon = epsilon;
    RingPtr TR = make_ring({{"t1", true}, {"t2", true}, {"xh", true}, {"yh", true}});
    out.torus_ring = TR;
    ExactPoly xh = var(TR, "xh"), xhi = var(TR, "xh", -1);
    ExactPoly yh = var(TR, "yh"), yhi = var(TR, "yh", -1);
    ExactPoly eps = con(TR, epsilon);
    ExactPoly delta = xh - xhi;
    ExactPoly xT = xh + xhi;
    ExactPoly yT = yh + yhi;
    ExactPoly zT = eps * (xh * yh + xhi * yhi);
    ExactPoly t2v = var(TR, "t2");
    ExactPoly tb1 = tbar(TR, "t1"), tb2 = tbar(TR, "t2");

    out.x = {xT, 0};
    ExactPoly y_corr_t = -tb2 * (xh * yhi - xhi * yh) + eps * tb1 * (yh - yhi);
    out.y = {t2v * yT * delta + y_corr_t, 1};
    ExactPoly z_corr_t = eps * tb2 * (yh - yhi) + tb1 * (xh * yh - xhi * yhi);
    out.z = {t2v * zT * delta + z_corr_t, 1};

    RingPtr SR = make_ring(
        {{"t1", true}, {"t2", true}, {"xT", false}, {"yT", false}, {"zT", false}});
    out.skein_ring = SR;
    ExactPoly xs = var(SR, "xT"), ys = var(SR, "yT"), zs = var(SR, "zT");
    ExactPoly epss = con(SR, epsilon);
    ExactPoly tb1s = tbar(SR, "t1"), tb2s = tbar(SR, "t2");
    ExactPoly two = con(SR, 2);
    out.x_main = xs;
    out.y_main = var(SR, "t2") * ys;
    out.z_main = var(SR, "t2") * zs;
    out.y_corr = -tb2s * (xs * xs * ys - epss * xs * zs - two * ys) +
                 tb1s * (two * zs - epss * xs * ys);
    out.z_corr = tb2s * (two * zs - epss * xs * ys) + tb1s * (epss * xs * zs - two * ys);

    std::map<std::string, ExactPoly> to_torus = {
        {"t1", var(TR, "t1")}, {"t2", var(TR, "t2")}, {"xT", xT}, {"yT", yT}, {"zT", zT}};
    ExactPoly den = xT * xT - con(TR, 4);
    if (delta * delta != den)
        throw std::logic_error("symmetric_dunkl_images: delta^2 != xT^2 - 4");
    auto cross_check = [&](const LocalizedElement& lhs, const ExactPoly& main,
                           const ExactPoly& corr, const char* label) {
        ExactPoly rhs = transplant(main, TR, to_torus) * den + transplant(corr, TR, to_torus);
        ExactPoly scaled = lhs.num;
        for (int k = lhs.delta_power; k < 2; ++k) scaled *= delta;
        if (scaled != rhs)
            throw std::logic_error(std::string("symmetric_dunkl_images: displayed forms of the ") +
                                   label + " image disagree");
    };
    cross_check(out.x, out.x_main, ExactPoly::zero(SR), "x");
    cross_check(out.y, out.y_main, out.y_corr, "y");
    cross_check(out.z, out.z_main, out.z_corr, "z");

    out.notes.push_back(
        "the inverse-pair term in the z image is read as xh^-1*yh^-1; both displayed "
        "forms proven equal with delta^2 = xT^2 - 4");
    return out;
}

DahaReport verify_dunkl_cubic(int epsilon) {
    Timer timer;
    DahaReport report;
    report.check = std::string("dunkl-cubic:eps=") + (epsilon == 1 ? "+1" : "-1");
    DunklImages im = symmetric_dunkl_images(epsilon);
    report.notes = im.notes;
    RingPtr TR = im.torus_ring;
    ExactPoly delta = var(TR, "xh") - var(TR, "xh", -1);
    auto raise = [&](const LocalizedElement& e, int power) {
        ExactPoly num = e.num;
        for (int k = e.delta_power; k < power; ++k) num *= delta;
        return num;
    };
    auto add = [&](const LocalizedElement& a, const LocalizedElement& b) {
        int p = std::max(a.delta_power, b.delta_power);
        return LocalizedElement{raise(a, p) + raise(b, p), p};
    };
    auto mul = [](const LocalizedElement& a, const LocalizedElement& b) {
        return LocalizedElement{a.num * b.num, a.delta_power + b.delta_power};
    };
    auto scale = [&](const ExactPoly& c, const LocalizedElement& a) {
        return LocalizedElement{c * a.num, a.delta_power};
    };
    ExactPoly eps = con(TR, epsilon);
    ExactPoly tb1 = tbar(TR, "t1"), tb2 = tbar(TR, "t2");

    auto cubic_residual = [&](const LocalizedElement& x, const LocalizedElement& y,
                              const LocalizedElement& z, const ExactPoly& rhs) {
        LocalizedElement acc = scale(-eps, mul(x, mul(y, z)));
        acc = add(acc, mul(x, x));
        acc = add(acc, mul(y, y));
        acc = add(acc, mul(z, z));
        acc = add(acc, scale(-eps * tb1 * tb2, x));
        acc = add(acc, LocalizedElement{-rhs, 0});
        return acc.num;
    };

    ExactPoly rhs_full = tb1 * tb1 + tb2 * tb2 + con(TR, 4);
    require_zero(report, "cubic identity on the localized images",
                 cubic_residual(im.x, im.y, im.z, rhs_full));

    std::map<std::string, ExactPoly> unit_t = {{"t1", con(TR, 1)}, {"t2", con(TR, 1)}};
    LocalizedElement x1{im.x.num.substitute(unit_t), im.x.delta_power};
    LocalizedElement y1{im.y.num.substitute(unit_t), im.y.delta_power};
    LocalizedElement z1{im.z.num.substitute(unit_t), im.z.delta_power};
    ExactPoly xT = var(TR, "xh") + var(TR, "xh", -1);
    ExactPoly yT = var(TR, "yh") + var(TR, "yh", -1);
    ExactPoly zT = eps * (var(TR, "xh") * var(TR, "yh") + var(TR, "xh", -1) * var(TR, "yh", -1));
    require_equal(report, "x image at t1 = t2 = 1", x1.num, raise({xT, 0}, x1.delta_power));
    require_equal(report, "y image at t1 = t2 = 1", y1.num, raise({yT, 0}, y1.delta_power));
    require_equal(report, "z image at t1 = t2 = 1", z1.num, raise({zT, 0}, z1.delta_power));
    require_zero(report, "bare torus relation with right side 4",
                 -eps * xT * yT * zT + xT * xT + yT * yT + zT * zT - con(TR, 4));
    return finish(std::move(report), timer);
}

ModuleAction trefoil_action() {
    RingPtr R = make_ring({{"t1", true}, {"t2", true}, {"x", false}});
    ExactPoly x = var(R, "x");
    ExactPoly zero = ExactPoly::zero(R);
    ExactPoly one = con(R, 1);
    ExactPoly t2v = var(R, "t2"), t2i = var(R, "t2", -1);
    ExactPoly tb1 = tbar(R, "t1"), tb2 = tbar(R, "t2");
    auto S = [&](long n) { return big_s(n, x); };
    auto T = [&](long n) { return big_t(n, x); };
    ModuleAction act;
    act.ring = R;
    act.basis = {"u", "v"};
    act.matX = {{x, zero}, {zero, x}};
    act.matY = {{-(t2v + t2i), t2v * (S(4) - one) - tb2 * (S(4) + S(2)) + tb1 * (S(3) + S(1))},
                {zero, t2v * T(6) - tb2 * S(6) + tb1 * S(5)}};
    act.matZ = {{t2v * S(1) - tb1, -t2i * S(3) + tb2 * S(1) - tb1 * (S(2) + S(0))},
                {zero, -t2v * T(5) + tb2 * S(5) - tb1 * S(4)}};
    return act;
}

ModuleAction trefoil_classical_action() {
    RingPtr R = make_ring({{"q", true}, {"x", false}});
    ExactPoly x = var(R, "x");
    ExactPoly zero = ExactPoly::zero(R);
    auto qp = [&](int e) { return var(R, "q", e); };
    auto S = [&](long n) { return big_s(n, x); };
    auto T = [&](long n) { return big_t(n, x); };
    ModuleAction act;
    act.ring = R;
    act.basis = {"u", "v"};
    act.matX = {{x, zero}, {zero, x}};
    act.matY = {{-(qp(2) + qp(-2)), qp(6) * S(4) - qp(2)}, {zero, qp(6) * T(6)}};
    act.matZ = {{-qp(-3) * S(1), qp(5) * S(3)}, {zero, qp(5) * T(5)}};
    return act;
}

DahaReport verify_trefoil_annihilator() {
    Timer timer;
    DahaReport report;
    report.check = "trefoil-annihilator";
    ModuleAction act = trefoil_action();
    RingPtr R = act.ring;
    ExactPoly x = var(R, "x");
    ExactPoly t2v = var(R, "t2"), t2i = var(R, "t2", -1);
    ExactPoly tb1 = tbar(R, "t1"), tb2 = tbar(R, "t2");
    Mat id = mat_identity(R, 2);

    check_commutators(report, act);

    ExactPoly second_root = t2i * big_t(6, x) + tb1 * big_s(5, x) - tb2 * big_s(4, x);
    Mat factor1 = mat_add(act.matY, mat_scale(t2v + t2i, id));
    Mat factor2 = mat_sub(act.matY, mat_scale(second_root, id));
    require_zero_mat(report, "annihilator on the module", mat_mul(factor1, factor2));
    require_zero(report, "first factor on u (entry 0)", factor1[0][0]);
    require_zero(report, "first factor on u (entry 1)", factor1[1][0]);
    if (factor2[0][1].is_zero() && factor2[1][1].is_zero())
        report.residuals.push_back("second factor alone already annihilates v");

    RingPtr XY = make_ring({{"t1", true}, {"t2", true}, {"x", false}, {"y", false}});
    ExactPoly y4 = var(XY, "y"), x4 = var(XY, "x");
    std::map<std::string, ExactPoly> into_xy = {
        {"t1", var(XY, "t1")}, {"t2", var(XY, "t2")}, {"x", x4}};
    ExactPoly deformed = (y4 + var(XY, "t2") + var(XY, "t2", -1)) *
                         (y4 - transplant(second_root, XY, into_xy));
    ExactPoly specialized =
        deformed.substitute({{"t1", con(XY, 1)}, {"t2", con(XY, 1)}});
    ExactPoly classical_poly = (y4 + con(XY, 2)) * (y4 - big_t(6, x4));
    require_equal(report, "t1 = t2 = 1 annihilator specialization", specialized, classical_poly);

    ModuleAction cl = trefoil_classical_action();
    std::map<std::string, ExactPoly> q_m1 = {{"q", con(cl.ring, -1)}};
    Mat clY = mat_substitute(cl.matY, q_m1);
    Mat clZ = mat_substitute(cl.matZ, q_m1);
    std::map<std::string, ExactPoly> unit_t = {{"t1", con(R, 1)}, {"t2", con(R, 1)}};
    std::map<std::string, ExactPoly> into_r3 = {{"q", con(R, 1)}, {"x", x}};
    auto transplant_mat = [&](const Mat& m) {
        Mat out = m;
        for (auto& row : out)
            for (auto& e : row) e = transplant(e, R, into_r3);
        return out;
    };
    require_zero_mat(report, "matY at t = 1 against the formal-q action at q = -1",
                     mat_sub(mat_substitute(act.matY, unit_t), transplant_mat(clY)));
    require_zero_mat(report, "matZ at t = 1 against the formal-q action at q = -1",
                     mat_sub(mat_substitute(act.matZ, unit_t), transplant_mat(clZ)));

    ExactPoly xq = var(cl.ring, "x");
    Mat idq = mat_identity(cl.ring, 2);
    Mat classical_ann = mat_mul(mat_add(clY, mat_scale(con(cl.ring, 2), idq)),
                                mat_sub(clY, mat_scale(big_t(6, xq), idq)));
    require_zero_mat(report, "classical annihilator at q = -1", classical_ann);

    check_cubic_on_matrices(report, act);
    return finish(std::move(report), timer);
}

ModuleAction fig8_action() {
    RingPtr R = make_ring({{"t1", true}, {"t2", true}, {"x", false}});
    ExactPoly x = var(R, "x");
    ExactPoly zero = ExactPoly::zero(R);
    ExactPoly one = con(R, 1);
    ExactPoly two = con(R, 2);
    ExactPoly t2v = var(R, "t2"), t2i = var(R, "t2", -1);
    ExactPoly tb1 = tbar(R, "t1"), tb2 = tbar(R, "t2");
    auto S = [&](long n) { return big_s(n, x); };
    auto T = [&](long n) { return big_t(n, x); };
    ExactPoly ytail = -T(4) + T(2) + T(0);

    ExactPoly a = t2v * (S(2) + one) - tb1 * S(1);
    ExactPoly b = t2v * ytail - tb2 * S(2) + tb1 * T(3);
    ExactPoly c = -tb2 * (S(2) + one) + two * tb1 * S(1);
    ExactPoly d = -t2i * (S(2) + one) - tb1 * S(1);
    ExactPoly e = tb2 * (S(2) + one) - two * tb1 * S(1);
    ExactPoly f = t2i * ytail + tb2 * S(2) - tb1 * T(3);

    ModuleAction act;
    act.ring = R;
    act.basis = {"p", "u", "v"};
    act.matX = {{x, zero, zero}, {zero, x, zero}, {zero, zero, x}};
    act.matY = {{-(t2v + t2i), a, d}, {zero, b, e}, {zero, c, f}};
    act.matZ = {{t2v * S(1) - tb1, -t2v * S(3) + tb1 * (S(2) + one) - tb2 * S(1),
                 (t2v + t2i) * S(1)},
                {zero, t2v * (T(5) - T(3) - T(1)) + tb2 * T(3) + tb1 * (-T(4) + one),
                 t2v * (-T(3) + T(1)) - two * tb2 * S(1) + tb1 * (S(2) + one)},
                {zero, t2v * (T(3) - T(1)) + two * tb2 * S(1) - tb1 * (S(2) + one),
                 t2i * (T(3) - two * T(1)) - two * tb2 * S(1) + tb1 * S(2)}};
    return act;
}

std::array<ExactPoly, 6> fig8_constants() {
    ModuleAction act = fig8_action();
    return {act.matY[0][1], act.matY[1][1], act.matY[2][1],
            act.matY[0][2], act.matY[1][2], act.matY[2][2]};
}

DahaReport verify_fig8_annihilator() {
    Timer timer;
    DahaReport report;
    report.check = "fig8-annihilator";
    ModuleAction act = fig8_action();
    RingPtr R = act.ring;
    ExactPoly x = var(R, "x");
    ExactPoly t2v = var(R, "t2"), t2i = var(R, "t2", -1);
    Mat id = mat_identity(R, 3);

    check_commutators(report, act);

    auto [a, b, c, d, e, f] = fig8_constants();
    Mat y2 = mat_mul(act.matY, act.matY);
    Mat quad = mat_add(mat_sub(y2, mat_scale(b + f, act.matY)), mat_scale(b * f - c * e, id));
    Mat factor1 = mat_add(act.matY, mat_scale(t2v + t2i, id));
    require_zero_mat(report, "annihilator on the module", mat_mul(factor1, quad));

    RingPtr XY = make_ring({{"t1", true}, {"t2", true}, {"x", false}, {"y", false}});
    ExactPoly y4 = var(XY, "y"), x4 = var(XY, "x");
    std::map<std::string, ExactPoly> into_xy = {
        {"t1", var(XY, "t1")}, {"t2", var(XY, "t2")}, {"x", x4}};
    ExactPoly deformed = (y4 + var(XY, "t2") + var(XY, "t2", -1)) *
                         (y4 * y4 - transplant(b + f, XY, into_xy) * y4 +
                          transplant(b * f - c * e, XY, into_xy));
    ExactPoly specialized = deformed.substitute({{"t1", con(XY, 1)}, {"t2", con(XY, 1)}});
    ExactPoly double_root = y4 + big_t(4, x4) - big_t(2, x4) - big_t(0, x4);
    ExactPoly classical_poly = (y4 + con(XY, 2)) * double_root * double_root;
    require_equal(report, "t1 = t2 = 1 annihilator factorization", specialized, classical_poly);

    std::map<std::string, ExactPoly> unit_t = {{"t1", con(R, 1)}, {"t2", con(R, 1)}};
    Mat clY = mat_substitute(act.matY, unit_t);
    ExactPoly cl_root = big_t(4, x) - big_t(2, x) - big_t(0, x);
    Mat classical_ann = mat_mul(mat_add(clY, mat_scale(con(R, 2), id)),
                                mat_add(clY, mat_scale(cl_root, id)));
    require_zero_mat(report, "classical annihilator at t = 1", classical_ann);

    check_cubic_on_matrices(report, act);
    return finish(std::move(report), timer);
}

DahaReport goldman_crosscheck() {
    Timer timer;
    DahaReport report;
    report.check = "goldman-crosscheck";
    RingPtr R = make_ring({{"t1", true},
                           {"t2", true},
                           {"t3", true},
                           {"t4", true},
                           {"x", false},
                           {"y", false},
                           {"z", false}});
    ExactPoly x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
    ExactPoly tb1 = tbar(R, "t1"), tb2 = tbar(R, "t2");
    ExactPoly tb3 = tbar(R, "t3"), tb4 = tbar(R, "t4");
    GaussExt xS = GaussExt::real(-x), yS = GaussExt::real(-y), zS = GaussExt::real(-z);
    GaussExt a = GaussExt::imaginary(tb1), b = GaussExt::imaginary(tb2);
    GaussExt c = GaussExt::imaginary(tb3), d = GaussExt::imaginary(tb4);
    GaussExt four = GaussExt::real(con(R, 4));

    GaussExt lhs = xS * xS + yS * yS + zS * zS + xS * yS * zS - (a * b + c * d) * xS -
                   (a * d + b * c) * yS - (a * c + b * d) * zS;
    GaussExt rhs = -(a * a + b * b + c * c + d * d + a * b * c * d) + four;
    GaussExt diff = lhs - rhs;
    require_zero(report, "imaginary part of the substituted trace relation", diff.im);

    ExactPoly alpha = tb1 * tb2 + tb3 * tb4;
    ExactPoly beta = tb1 * tb4 + tb3 * tb2;
    ExactPoly gamma = tb2 * tb4 + tb3 * tb1;
    ExactPoly omega = -x * y * z + x * x + y * y + z * z - alpha * x - beta * y - gamma * z;
    ExactPoly rhs_daha = tb1 * tb1 + tb2 * tb2 + tb3 * tb3 + tb4 * tb4 -
                         tb1 * tb2 * tb3 * tb4 + con(R, 4);
    require_equal(report, "trace relation against the q = 1 spherical cubic", diff.re,
                  omega - rhs_daha);

    std::map<std::string, ExactPoly> unit_t = {{"t1", con(R, 1)},
                                               {"t2", con(R, 1)},
                                               {"t3", con(R, 1)},
                                               {"t4", con(R, 1)}};
    ExactPoly torus_form = -x * y * z + x * x + y * y + z * z - con(R, 4);
    require_equal(report, "all-parameters-one degeneration", (omega - rhs_daha).substitute(unit_t),
                  torus_form);
    return finish(std::move(report), timer);
}

std::vector<DahaReport> run_daha_check(const std::string& name, int window) {
    if (name == "relations") return {verify_daha_relations(window)};
    if (name == "dunkl") return {verify_dunkl_cubic(1), verify_dunkl_cubic(-1)};
    if (name == "trefoil") return {verify_trefoil_annihilator()};
    if (name == "fig8") return {verify_fig8_annihilator()};
    if (name == "goldman") return {goldman_crosscheck()};
    throw std::invalid_argument(
        "unknown check '" + name +
        "' (expected relations, dunkl, trefoil, fig8 or goldman)");
}

}  // namespace bhv
