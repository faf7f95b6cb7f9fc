#include "qpolylog/contour.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "qpolylog/series.hpp"

namespace qpl {

namespace {

const double kPi = std::numbers::pi;
const cplx kI(0, 1);

struct GaussRule {
    Eigen::VectorXd x, w;
};

// Golub-Welsch on the Legendre Jacobi matrix
const GaussRule& gauss16()
{
    static const GaussRule rule = [] {
        const int N = 16;
        Eigen::MatrixXd J = Eigen::MatrixXd::Zero(N, N);
        for (int k = 1; k < N; ++k) {
            double beta = k / std::sqrt(4.0 * k * k - 1.0);
            J(k, k - 1) = J(k - 1, k) = beta;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
        GaussRule r;
        r.x = es.eigenvalues();
        r.w = 2.0 * es.eigenvectors().row(0).transpose().array().square();
        return r;
    }();
    return rule;
}

// log sh(x), any branch; exp() of it is all that is used
cplx log_sh(cplx x)
{
    if (x.real() >= 0) {
        cplx e = std::exp(-2.0 * x);
        if (std::abs(1.0 - e) < 64 * DBL_EPSILON) throw PoleError("sh vanishes on the contour");
        return x + std::log(1.0 - e);
    }
    cplx e = std::exp(2.0 * x);
    if (std::abs(1.0 - e) < 64 * DBL_EPSILON) throw PoleError("sh vanishes on the contour");
    return cplx(0, kPi) - x + std::log(1.0 - e);
}

struct AxisDef {
    double T = 10;
    double h_in = 0.5, h_out = 1;
    std::function<cplx(cplx)> factor;  // plain factor, or its logarithm in log mode
};

struct Grid {
    std::vector<cplx> p;
    std::vector<double> w;
};

void add_panels(Grid& g, double lo, double hi, int count, double eps)
{
    if (count <= 0 || hi <= lo) return;
    const GaussRule& gr = gauss16();
    double h = (hi - lo) / count;
    for (int c = 0; c < count; ++c) {
        double mid = lo + (c + 0.5) * h;
        for (int j = 0; j < gr.x.size(); ++j) {
            g.p.emplace_back(mid + 0.5 * h * gr.x(j), eps);
            g.w.push_back(0.5 * h * gr.w(j));
        }
    }
}

Grid make_grid(const AxisDef& ax, double eps, int level)
{
    double X = std::min(4.0, ax.T);
    int nin = std::max(1, (int)std::ceil(2 * X / ax.h_in));
    int nout = (int)std::ceil((ax.T - X) / ax.h_out);
    Grid g;
    add_panels(g, -ax.T, -X, nout << level, eps);
    add_panels(g, -X, X, nin << level, eps);
    add_panels(g, X, ax.T, nout << level, eps);
    return g;
}

struct Level {
    cplx value;
    double abs_sum = 0;
    long long nodes = 0;
};

// product mode: leaf = prod f_k S_k^{-n_k}
// log mode:     leaf = exp(sum f_k - i sum S_k w_k) prod S_k^{-n_k}
struct Engine {
    const std::vector<Grid>* grids;
    std::vector<std::vector<cplx>> f;
    IVec n;
    const CVec* wexp = nullptr;
    Accumulator acc;
    double abs_sum = 0;
    long long count = 0;

    void run_product(size_t j, cplx S, cplx P)
    {
        const Grid& g = (*grids)[j];
        const bool leaf = j + 1 == grids->size();
        for (size_t t = 0; t < g.p.size(); ++t) {
            cplx S2 = S + g.p[t];
            cplx P2 = P * f[j][t];
            if (n[j] != 0) P2 *= ipow(S2, -n[j]);
            if (leaf) {
                acc.add(P2);
                abs_sum += std::abs(P2);
                ++count;
            } else {
                run_product(j + 1, S2, P2);
            }
        }
    }

    void run_log(size_t j, cplx S, cplx E, cplx P)
    {
        const Grid& g = (*grids)[j];
        const bool leaf = j + 1 == grids->size();
        for (size_t t = 0; t < g.p.size(); ++t) {
            cplx S2 = S + g.p[t];
            cplx E2 = E + f[j][t] - kI * S2 * (*wexp)[j];
            cplx P2 = P;
            if (n[j] != 0) P2 *= ipow(S2, -n[j]);
            if (leaf) {
                cplx v = std::exp(E2) * P2;
                acc.add(v);
                abs_sum += std::abs(v);
                ++count;
            } else {
                run_log(j + 1, S2, E2, P2);
            }
        }
    }
};

Level integrate_level(const std::vector<AxisDef>& axes, const IVec& n, const CVec* wexp, double eps, int level)
{
    std::vector<Grid> grids;
    Engine e;
    for (auto& ax : axes) {
        grids.push_back(make_grid(ax, eps, level));
        const Grid& g = grids.back();
        std::vector<cplx> fv(g.p.size());
        for (size_t t = 0; t < g.p.size(); ++t) {
            cplx v = ax.factor(g.p[t]);
            fv[t] = wexp ? v + std::log(g.w[t]) : v * g.w[t];
        }
        e.f.push_back(std::move(fv));
    }
    e.grids = &grids;
    e.n = n;
    e.wexp = wexp;
    if (wexp)
        e.run_log(0, 0.0, 0.0, 1.0);
    else
        e.run_product(0, 0.0, 1.0);
    Level L;
    L.value = e.acc.sum();
    L.abs_sum = e.abs_sum;
    L.nodes = e.count;
    return L;
}

EvalResult integrate(const std::vector<AxisDef>& axes, const IVec& n, const CVec* wexp, double eps,
                     const QuadratureSpec& spec)
{
    EvalResult r;
    r.backend = Backend::contour;
    Level prev = integrate_level(axes, n, wexp, eps, 0);
    r.diag.nodes = prev.nodes;
    for (int level = 1; level <= spec.max_refine; ++level) {
        Level cur = integrate_level(axes, n, wexp, eps, level);
        r.diag.nodes += cur.nodes;
        double delta = std::abs(cur.value - prev.value);
        double floor = 1e3 * DBL_EPSILON * cur.abs_sum;
        r.value = require_finite(cur.value, "quadrature");
        r.err_estimate = delta;
        r.diag.refinements = level;
        if (delta <= std::max(spec.tol, floor)) return r;
        prev = cur;
    }
    throw ConvergenceError("quadrature refinement did not converge (last delta " + std::to_string(r.err_estimate) +
                           ")");
}

double pick_T(const QuadratureSpec& spec, double rate)
{
    if (spec.T > 0) return spec.T;
    double T = std::log(1.0 / (spec.tol * 1e-2)) / rate;
    return std::clamp(T, 10.0, 200.0);
}

void check_eps(double eps, double limit)
{
    if (!(eps > 0 && eps < limit)) throw DomainError("contour shift must lie strictly between 0 and the lowest pole");
}

double pole_height(const MultiIndex& idx, const HbarValue& hbar)
{
    bool any_b = false;
    for (int v : idx.b) any_b = any_b || v > 0;
    double h = 1.0;
    if (any_b) h = std::min(h, hbar.value.real() / std::norm(hbar.value));
    return h;
}

void check_index(const MultiIndex& idx, const QuadratureSpec& spec)
{
    if (idx.depth() > spec.max_depth_m) throw DomainError("contour backend limited to depth <= max_depth_m");
    for (int k = 0; k < idx.depth(); ++k)
        if (idx.a[k] + idx.b[k] < 1) throw DomainError("contour backend needs a_i + b_i >= 1");
}

double frequency(const CVec& w)
{
    double f = 0;
    for (auto& v : w) f += std::abs(v.real());
    return std::max(1.0, f);
}

AxisDef axis_for(double T, double eps, double freq, const QuadratureSpec& spec)
{
    AxisDef ax;
    ax.T = T;
    ax.h_in = spec.panels > 0 ? 8.0 / spec.panels : std::min(eps, 3.0 / freq);
    ax.h_out = std::min(2.0, 3.0 / freq);
    return ax;
}

}  // namespace

double default_epsilon(const HbarValue& hbar)
{
    hbar.require_numeric();
    return 0.5 * std::min(1.0, hbar.value.real() / std::norm(hbar.value));
}

cplx kernel(const KernelParams& k, cplx p)
{
    cplx e = -kI * p * k.omega;
    if (k.a) e -= double(k.a) * log_sh(kPi * p);
    if (k.b) e -= double(k.b) * log_sh(kPi * k.hbar.value * p);
    return std::exp(e);
}

EvalResult quad_F(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, const QuadratureSpec& spec)
{
    check_index(idx, spec);
    hbar.require_numeric();
    const int m = idx.depth();
    if ((int)omega.size() != m) throw DomainError("omega has wrong length");
    for (auto& v : omega) require_finite(v, "omega");
    double eps = spec.epsilon > 0 ? spec.epsilon : 0.5 * pole_height(idx, hbar);
    check_eps(eps, pole_height(idx, hbar));
    auto strip = convergence_strip(idx, hbar);

    std::vector<AxisDef> axes;
    for (int k = 0; k < m; ++k) {
        double rate = strip[k] - std::abs(omega[k].imag());
        if (!(rate > 0)) throw DomainError("omega outside the convergence strip");
        AxisDef ax = axis_for(pick_T(spec, rate), eps, frequency({omega[k]}), spec);
        KernelParams kp{idx.a[k], idx.b[k], hbar, omega[k]};
        ax.factor = [kp](cplx p) { return kernel(kp, p); };
        axes.push_back(ax);
    }
    EvalResult r = integrate(axes, idx.n, nullptr, eps, spec);
    cplx pre = ipow_i(weight(idx) - m);
    r.value *= pre;
    return r;
}

EvalResult quad_I(const MultiIndex& idx, const CVec& w, const HbarValue& hbar, const QuadratureSpec& spec)
{
    check_index(idx, spec);
    hbar.require_numeric();
    const int m = idx.depth();
    if ((int)w.size() != m) throw DomainError("w has wrong length");
    for (auto& v : w) require_finite(v, "w");
    double eps = spec.epsilon > 0 ? spec.epsilon : 0.5 * pole_height(idx, hbar);
    check_eps(eps, pole_height(idx, hbar));
    auto strip = convergence_strip(idx, hbar);

    std::vector<AxisDef> axes;
    double freq = frequency(w);
    for (int j = 0; j < m; ++j) {
        cplx om = 0;
        for (int i = j; i < m; ++i) om += w[i];
        double rate = strip[j] - std::abs(om.imag());
        if (!(rate > 0)) throw DomainError("w outside the convergence strip (|Im(w_j+...+w_m)| too large)");
        AxisDef ax = axis_for(pick_T(spec, rate), eps, freq, spec);
        int a = idx.a[j], b = idx.b[j];
        cplx h = hbar.value;
        ax.factor = [a, b, h](cplx p) {
            cplx e = 0;
            if (a) e -= double(a) * log_sh(kPi * p);
            if (b) e -= double(b) * log_sh(kPi * h * p);
            return e;
        };
        axes.push_back(ax);
    }
    EvalResult r = integrate(axes, idx.n, &w, eps, spec);
    r.value *= ipow_i(weight(idx) - m);
    return r;
}

EvalResult quad_Li(const IVec& n, const CVec& w, const QuadratureSpec& spec)
{
    const int m = static_cast<int>(n.size());
    if (m == 0 || (int)w.size() != m) throw DomainError("quad_Li: bad lengths");
    const double margin = 1e-9;
    for (int j = 0; j < m; ++j) {
        if (n[j] < 1) throw DomainError("quad_Li needs n_i >= 1");
        if (!(w[j].real() < -margin)) throw DomainError("quad_Li needs Re w_i < 0");
        if (!(std::abs(w[j].imag()) < kPi - margin)) throw DomainError("quad_Li needs |Im w_i| < pi");
    }
    cplx om = 0;
    for (int j = m - 1; j >= 0; --j) {
        om += w[j];
        if (!(std::abs(om.imag()) < kPi - margin))
            throw DomainError("quad_Li needs |Im(w_j + ... + w_m)| < pi for every j");
    }
    MultiIndex idx(IVec(m, 1), IVec(m, 0), n);
    return quad_I(idx, w, HbarValue(1.0), spec);
}

EvalResult quad_zeta_hbar(const IVec& s, const HbarValue& hbar, const QuadratureSpec& spec)
{
    const int m = static_cast<int>(s.size());
    if (m == 0) throw DomainError("zeta_hbar needs depth >= 1");
    for (int v : s)
        if (v < 2) throw DomainError("zeta_hbar needs s_i >= 2");
    if (!hbar.is_real()) throw DomainError("zeta_hbar needs real hbar > 0");
    hbar.require_numeric();
    if (m > spec.max_depth_m) throw DomainError("contour backend limited to depth <= max_depth_m");

    MultiIndex idx(IVec(m, 1), IVec(m, 1), IVec(m, 0));
    double eps = spec.epsilon > 0 ? spec.epsilon : 0.5 * pole_height(idx, hbar);
    check_eps(eps, pole_height(idx, hbar));
    double rate = kPi * (1 + hbar.value.real());
    std::vector<AxisDef> axes;
    for (int k = 0; k < m; ++k) {
        AxisDef ax = axis_for(pick_T(spec, rate), eps, 1.0, spec);
        cplx h = hbar.value;
        ax.factor = [h](cplx p) { return std::exp(-log_sh(kPi * p) - log_sh(kPi * h * p)); };
        axes.push_back(ax);
    }
    // exponent convention: (p_1+...+p_k)^{s_k - 1}
    IVec nn(m);
    for (int k = 0; k < m; ++k) nn[k] = s[k] - 1;
    return integrate(axes, nn, nullptr, eps, spec);
}

EvalResult quad_bernoulli_circle(int a, int b, int n, cplx omega, const HbarValue& hbar, double radius, int nodes)
{
    if (a < 0 || b < 0) throw DomainError("a, b must be non-negative");
    require_finite(omega, "omega");
    double limit = std::min(1.0, 1.0 / std::abs(hbar.value));
    if (radius <= 0) radius = 0.5 * limit;
    if (!(radius < limit)) throw DomainError("circle radius must stay below the nearest nonzero pole");
    if (nodes < 8) throw DomainError("too few circle nodes");

    KernelParams kp{a, b, hbar, omega};
    auto trap = [&](int N) {
        Accumulator acc;
        for (int j = 0; j < N; ++j) {
            cplx p = std::polar(radius, 2 * kPi * j / N);
            // dp = i p d theta
            acc.add(kernel(kp, p) * ipow(p, -n) * kI * p);
        }
        return acc.sum() * (2 * kPi / N);
    };
    cplx coarse = trap(nodes / 2);
    cplx fine = trap(nodes);
    EvalResult r;
    r.backend = Backend::contour;
    r.value = require_finite(ipow_i(n - 1) * fine, "circle integral");
    r.err_estimate = std::abs(fine - coarse);
    r.diag.nodes = nodes + nodes / 2;
    return r;
}

std::vector<cplx> q_poly_numeric(int m)
{
    if (m < 0) throw DomainError("Q_m needs m >= 0");
    std::vector<cplx> c{1.0};
    for (int j = 0; j < m; ++j) {
        cplx root(0, kPi * (m - 1 - 2 * j));
        std::vector<cplx> nc(c.size() + 1, 0.0);
        for (size_t t = 0; t < c.size(); ++t) {
            nc[t + 1] += c[t];
            nc[t] -= root * c[t];
        }
        c = nc;
    }
    cplx denom = ipow(cplx(0, 2 * kPi), m);
    for (int t = 2; t <= m; ++t) denom *= t;
    for (auto& v : c) v /= denom;
    return c;
}

cplx poly_eval(const std::vector<cplx>& c, cplx x)
{
    cplx r = 0;
    for (size_t t = c.size(); t-- > 0;) r = r * x + c[t];
    return r;
}

std::vector<cplx> poly_derivative(const std::vector<cplx>& c)
{
    if (c.size() <= 1) return {0.0};
    std::vector<cplx> d(c.size() - 1);
    for (size_t t = 1; t < c.size(); ++t) d[t - 1] = c[t] * double(t);
    return d;
}

EvalResult depth1_closed_form(int a, int n, cplx omega)
{
    if (a < 1) throw DomainError("depth1_closed_form needs a >= 1");
    if (n < 0) throw DomainError("depth1_closed_form needs n >= 0");
    require_finite(omega, "omega");
    cplx z = std::exp(omega + cplx(0, kPi * a));
    std::vector<cplx> Q = q_poly_numeric(a - 1);
    Accumulator acc;
    double sign = 1;
    EvalResult r;
    r.backend = Backend::closed_form;
    for (int k = 0; k < a; ++k) {
        double c = binomial(n + k - 1, k);
        if (c != 0) {
            EvalResult li = classical_polylog(n + k, z);
            acc.add(c * sign * poly_eval(Q, omega) * li.value);
            r.err_estimate += std::abs(c * poly_eval(Q, omega)) * li.err_estimate;
            r.diag.terms += li.diag.terms;
        }
        Q = poly_derivative(Q);
        sign = -sign;
    }
    r.value = require_finite(acc.sum(), "closed form");
    r.diag.truncation = a - 1;
    return r;
}

EvalResult gen_series_depth1(cplx omega, cplx r, cplx s, cplx u, const HbarValue& hbar, const QuadratureSpec& spec)
{
    hbar.require_numeric();
    require_finite(omega, "omega");
    if (std::abs(r) > 0.5 || std::abs(s) > 0.5) throw DomainError("generating series needs |r|, |s| <= 0.5");
    MultiIndex idx = MultiIndex::one(1, 1, 1);
    double eps = spec.epsilon > 0 ? spec.epsilon : 0.5 * pole_height(idx, hbar);
    check_eps(eps, pole_height(idx, hbar));
    if (!(std::abs(u) < 0.8 * eps)) throw DomainError("generating series needs |u| well below the contour height");
    double rate = kPi * (1 + hbar.value.real()) - std::abs(omega.imag());
    if (!(rate > 0)) throw DomainError("omega outside the convergence strip");

    AxisDef ax = axis_for(pick_T(spec, rate), eps, frequency({omega}), spec);
    cplx h = hbar.value;
    ax.factor = [=](cplx p) {
        cplx l1 = log_sh(kPi * p), l2 = log_sh(kPi * h * p);
        cplx d1 = 1.0 - r * std::exp(-l1), d2 = 1.0 - s * std::exp(-l2);
        if (std::abs(d1) < 1e-3 || std::abs(d2) < 1e-3) throw PoleError("generating-series pole near the contour");
        return std::exp(-kI * p * omega - l1 - l2) / (d1 * d2 * (p - kI * u));
    };
    return integrate({ax}, IVec{0}, nullptr, eps, spec);
}

}  // namespace qpl
