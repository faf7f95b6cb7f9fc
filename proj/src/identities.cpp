#include "qpolylog/identities.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "qpolylog/exact.hpp"
#include "qpolylog/series.hpp"

namespace qpl {

namespace {

const double kPi = std::numbers::pi;
const cplx kI(0, 1);
const double kNaN = std::numeric_limits<double>::quiet_NaN();

double unif(std::mt19937_64& g)
{
    return (g() >> 11) * 0x1.0p-53;
}

CheckReport guarded(const std::string& name, nlohmann::json params, double tol,
                    const std::function<double(nlohmann::json&)>& body)
{
    try {
        double res = body(params);
        return CheckReport(name, params, res, tol);
    } catch (const Error& e) {
        params["error"] = e.what();
        return CheckReport(name, params, kNaN, tol);
    }
}

nlohmann::json jparams(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar)
{
    return {{"index", to_json(idx)}, {"omega", to_json(omega)}, {"hbar", to_json(hbar.value)}};
}

cplx F(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, const QuadratureSpec& spec)
{
    return quad_F(idx, omega, hbar, spec).value;
}

MultiIndex with_a(const MultiIndex& idx, int k, int delta)
{
    MultiIndex r = idx;
    r.a[k] += delta;
    return r;
}

MultiIndex with_b(const MultiIndex& idx, int k, int delta)
{
    MultiIndex r = idx;
    r.b[k] += delta;
    return r;
}

MultiIndex with_n(const MultiIndex& idx, int k, int delta)
{
    MultiIndex r = idx;
    r.n[k] += delta;
    return r;
}

// every choice of a_k-fold alpha tuples and b_k-fold beta tuples, as the shifted argument
void for_each_shift(const MultiIndex& idx, const CVec& omega, cplx hbar_shift, int r, int s,
                    const std::function<void(const CVec&)>& fn)
{
    const int m = idx.depth();
    // per slot: list of admissible total shifts (with multiplicity)
    std::vector<std::vector<cplx>> slot(m);
    for (int k = 0; k < m; ++k) {
        std::vector<cplx> sums{0.0};
        for (int t = 0; t < idx.a[k]; ++t) {
            std::vector<cplx> next;
            for (auto& v : sums)
                for (int j = 0; j < r; ++j) next.push_back(v + 2 * kPi * kI * ((1.0 - r) / 2 + j) / double(r));
            sums = next;
        }
        for (int t = 0; t < idx.b[k]; ++t) {
            std::vector<cplx> next;
            for (auto& v : sums)
                for (int j = 0; j < s; ++j)
                    next.push_back(v + 2 * kPi * kI * hbar_shift * ((1.0 - s) / 2 + j) / double(s));
            sums = next;
        }
        slot[k] = sums;
    }
    std::vector<size_t> pos(m, 0);
    while (true) {
        CVec w(m);
        for (int k = 0; k < m; ++k) w[k] = omega[k] + slot[k][pos[k]];
        fn(w);
        int k = m - 1;
        while (k >= 0 && ++pos[k] == slot[k].size()) pos[k--] = 0;
        if (k < 0) break;
    }
}

// multinomial expansion of prod_j (t_1 + ... + t_j)^{c_j}
std::map<IVec, double> expand_partial_sums(const IVec& c)
{
    const int m = static_cast<int>(c.size());
    std::map<IVec, double> poly{{IVec(m, 0), 1.0}};
    for (int j = 0; j < m; ++j)
        for (int rep = 0; rep < c[j]; ++rep) {
            std::map<IVec, double> next;
            for (auto& kv : poly)
                for (int i = 0; i <= j; ++i) {
                    IVec e = kv.first;
                    ++e[i];
                    next[e] += kv.second;
                }
            poly = next;
        }
    return poly;
}

// octant sum of prod x_j^{k_j} / (k_j (k_1+...+k_j)^{n_j}), the hbar -> 0 leading term
cplx leading_octant(const IVec& n, const CVec& x, int K)
{
    const int m = static_cast<int>(n.size());
    Accumulator acc;
    std::function<void(int, int, cplx)> rec = [&](int j, int S, cplx P) {
        if (j == m) {
            acc.add(P);
            return;
        }
        cplx xk = 1;
        for (int k = 1; k <= K; ++k) {
            xk *= x[j];
            rec(j + 1, S + k, P * xk / (double(k) * std::pow(double(S + k), n[j])));
        }
    };
    rec(0, 0, 1.0);
    return acc.sum();
}

}  // namespace

// ------------------------------------------------------------------ instances

CheckReport li_instance(const IVec& n, const CVec& w, double tol, const QuadratureSpec& spec)
{
    nlohmann::json P = {{"n", n}, {"w", to_json(w)}};
    return guarded("series_vs_contour", P, tol, [&](nlohmann::json& p) {
        const int m = static_cast<int>(n.size());
        CVec z(m);
        for (int j = 0; j < m; ++j) z[j] = std::exp(w[j]);
        z[m - 1] = -z[m - 1];
        cplx a = quad_Li(n, w, spec).value;
        cplx b = multiple_polylog(n, z).value;
        p["value"] = to_json(b);
        return std::abs(a - b);
    });
}

CheckReport difference_instance(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, int k,
                                bool hbar_shift, double tol, const QuadratureSpec& spec)
{
    nlohmann::json P = jparams(idx, omega, hbar);
    P["k"] = k + 1;
    const std::string name = hbar_shift ? "difference.i_pi_hbar" : "difference.i_pi";
    return guarded(name, P, tol, [&](nlohmann::json&) {
        cplx c = hbar_shift ? kI * kPi * hbar.value : kI * kPi;
        MultiIndex low = hbar_shift ? with_b(idx, k, -1) : with_a(idx, k, -1);
        CVec up = omega, dn = omega;
        up[k] += c;
        dn[k] -= c;
        cplx lhs = F(idx, up, hbar, spec) - F(idx, dn, hbar, spec);
        return std::abs(lhs - F(low, omega, hbar, spec));
    });
}

CheckReport differential_instance(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, int k, double step,
                                  double tol, const QuadratureSpec& spec)
{
    nlohmann::json P = jparams(idx, omega, hbar);
    P["k"] = k + 1;
    P["step"] = step;
    return guarded("differential", P, tol, [&](nlohmann::json& p) {
        auto f = [&](double d) {
            CVec w = omega;
            w[k] += d;
            return F(idx, w, hbar, spec);
        };
        auto five = [&](double h) { return (f(-2 * h) - 8.0 * f(-h) + 8.0 * f(h) - f(2 * h)) / (12 * h); };
        cplx d1 = five(step), d2 = five(step / 2);
        cplx deriv = (16.0 * d2 - d1) / 15.0;
        cplx rhs = F(with_n(idx, k, -1), omega, hbar, spec);
        if (k > 0) rhs -= F(with_n(idx, k - 1, -1), omega, hbar, spec);
        p["stencil_delta"] = std::abs(d1 - d2);
        return std::abs(deriv - rhs);
    });
}

cplx distribution_rhs(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, int r, int s,
                      const QuadratureSpec& spec)
{
    Accumulator acc;
    for_each_shift(idx, omega, hbar.value, r, s, [&](const CVec& w) { acc.add(F(idx, w, hbar, spec)); });
    return acc.sum();
}

CheckReport distribution_instance(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, int r, int s,
                                  double tol, const QuadratureSpec& spec)
{
    nlohmann::json P = jparams(idx, omega, hbar);
    P["r"] = r;
    P["s"] = s;
    return guarded("distribution", P, tol, [&](nlohmann::json& p) {
        if (r < 1 || s < 1 || std::gcd(r, s) != 1) throw DomainError("r, s must be coprime positive integers");
        const int m = idx.depth();
        CVec rw = omega;
        for (auto& v : rw) v *= double(r);
        cplx lhs = std::pow(double(r), m - weight(idx)) * F(idx, rw, HbarValue(hbar.value * double(r) / double(s)), spec);
        Accumulator acc;
        cplx prod = 1.0;
        for_each_shift(idx, omega, hbar.value, r, s, [&](const CVec& w) {
            cplx v = F(idx, w, hbar, spec);
            acc.add(v);
            prod *= v;
        });
        // the product form is recorded only
        p["product_form_residual"] = std::abs(lhs - prod);
        return std::abs(lhs - acc.sum());
    });
}

cplx h1_formula(const MultiIndex& idx, const CVec& omega)
{
    const int m = idx.depth();
    if ((int)omega.size() != m) throw DomainError("omega has wrong length");
    IVec A(m);
    int D = 0;
    CVec z(m);
    std::vector<std::vector<cplx>> dQ(m);  // i^beta Q^{(beta)}_{A-1}(omega_j)
    for (int j = 0; j < m; ++j) {
        A[j] = idx.a[j] + idx.b[j];
        if (A[j] < 1) throw DomainError("hbar = 1 formula needs a_j + b_j >= 1");
        D += A[j] - 1;
        z[j] = (A[j] % 2 ? -1.0 : 1.0) * std::exp(omega[j]);
        ExactPoly q = q_poly(A[j] - 1);
        cplx ip = 1;
        for (int beta = 0; beta < A[j]; ++beta) {
            dQ[j].push_back(ip * q.eval(omega[j], 1.0));
            q = q.derivative();
            ip *= kI;
        }
    }
    Accumulator acc;
    IVec c(m, 0);
    std::function<void(int, int)> rec = [&](int j, int used) {
        if (j == m) {
            double coef = 1;
            for (int t = 0; t < m; ++t) coef *= binomial(-idx.n[t], c[t]);
            if (coef == 0) return;
            cplx poly = 0;
            for (auto& kv : expand_partial_sums(c)) {
                cplx term = kv.second;
                bool zero = false;
                for (int t = 0; t < m && !zero; ++t) {
                    if (kv.first[t] >= A[t])
                        zero = true;
                    else
                        term *= dQ[t][kv.first[t]];
                }
                if (!zero) poly += term;
            }
            if (poly == cplx(0, 0)) return;
            IVec nn = idx.n;
            for (int t = 0; t < m; ++t) nn[t] += c[t];
            acc.add(ipow_i(-used) * coef * poly * octant_polylog(nn, z).value);
            return;
        }
        for (int v = 0; used + v <= D; ++v) {
            c[j] = v;
            rec(j + 1, used + v);
        }
        c[j] = 0;
    };
    rec(0, 0);
    return acc.sum();
}

cplx h1_product_term(const MultiIndex& idx, const CVec& omega)
{
    const int m = idx.depth();
    cplx prod = 1;
    CVec z(m);
    for (int j = 0; j < m; ++j) {
        int A = idx.a[j] + idx.b[j];
        prod *= q_poly(A - 1).eval(omega[j], 1.0);
        z[j] = (A % 2 ? -1.0 : 1.0) * std::exp(omega[j]);
    }
    return prod * octant_polylog(idx.n, z).value;
}

CheckReport h1_instance(const MultiIndex& idx, const CVec& omega, double tol, const QuadratureSpec& spec)
{
    nlohmann::json P = jparams(idx, omega, HbarValue(1.0));
    return guarded("h1", P, tol, [&](nlohmann::json& p) {
        cplx q = F(idx, omega, HbarValue(1.0), spec);
        p["product_term_residual"] = std::abs(q - h1_product_term(idx, omega));
        return std::abs(q - h1_formula(idx, omega));
    });
}

CheckReport rational_hbar_instance(const MultiIndex& idx, const CVec& omega, int r, int s, double tol,
                                   const QuadratureSpec& spec)
{
    HbarValue h(double(r) / double(s));
    nlohmann::json P = jparams(idx, omega, h);
    P["r"] = r;
    P["s"] = s;
    return guarded("rational_hbar", P, tol, [&](nlohmann::json&) {
        if (r < 1 || s < 1 || std::gcd(r, s) != 1) throw DomainError("r, s must be coprime positive integers");
        const int m = idx.depth();
        CVec rw = omega;
        for (auto& v : rw) v *= double(r);
        cplx lhs = std::pow(double(r), m - weight(idx)) * F(idx, rw, h, spec);
        Accumulator acc;
        for_each_shift(idx, omega, 1.0, r, s, [&](const CVec& w) { acc.add(h1_formula(idx, w)); });
        return std::abs(lhs - acc.sum());
    });
}

CheckReport conjugation_instance(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, double tol,
                                 const QuadratureSpec& spec)
{
    return guarded("symmetry.conjugation", jparams(idx, omega, hbar), tol, [&](nlohmann::json&) {
        int sign_exp = -idx.depth();
        for (int k = 0; k < idx.depth(); ++k) sign_exp += idx.a[k] + idx.b[k];
        CVec cw = omega;
        for (auto& v : cw) v = std::conj(v);
        cplx rhs = (sign_exp % 2 ? -1.0 : 1.0) * F(idx, cw, HbarValue(std::conj(hbar.value)), spec);
        return std::abs(std::conj(F(idx, omega, hbar, spec)) - rhs);
    });
}

CheckReport modular_instance(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, double tol,
                             const QuadratureSpec& spec)
{
    return guarded("symmetry.modular", jparams(idx, omega, hbar), tol, [&](nlohmann::json&) {
        MultiIndex sw(idx.b, idx.a, idx.n);
        CVec ow = omega;
        for (auto& v : ow) v /= hbar.value;
        cplx rhs = std::pow(hbar.value, double(weight(idx) - idx.depth())) * F(sw, ow, HbarValue(1.0 / hbar.value), spec);
        return std::abs(F(idx, omega, hbar, spec) - rhs);
    });
}

CheckReport negation_instance(const MultiIndex& idx, cplx omega, const HbarValue& hbar, double tol,
                              const QuadratureSpec& spec)
{
    return guarded("symmetry.negation", jparams(idx, {omega}, hbar), tol, [&](nlohmann::json& p) {
        if (idx.depth() != 1) throw DomainError("negation check is depth one");
        int a = idx.a[0], b = idx.b[0], n = idx.n[0];
        double sg = (a + b + n - 1) % 2 ? -1.0 : 1.0;
        cplx sum = F(idx, {omega}, hbar, spec) + sg * F(idx, {-omega}, hbar, spec);
        cplx B = bernoulli_exact(a, b, n).eval(omega, hbar.value);
        p["plus_B_residual"] = std::abs(sum - B);
        return std::abs(sum + B);
    });
}

CheckReport companion_instance(const IVec& n, const CVec& w, const HbarValue& hbar, double tol,
                               const QuadratureSpec& spec)
{
    nlohmann::json P = {{"n", n}, {"w", to_json(w)}, {"hbar", to_json(hbar.value)}};
    return guarded("companion", P, tol, [&](nlohmann::json& p) {
        cplx q = quad_I(MultiIndex::basic(n), w, hbar, spec).value;
        EvalResult c = companion_sum_I(n, w, hbar);
        if (!c.diag.warnings.empty()) p["warnings"] = c.diag.warnings;
        return std::abs(q - c.value);
    });
}

CheckReport shuffle_instance(int a1, int b1, int a2, int b2, cplx w1, cplx w2, const HbarValue& hbar, double tol,
                             const QuadratureSpec& spec)
{
    nlohmann::json P = {{"a", {a1, a2}}, {"b", {b1, b2}}, {"omega", to_json(CVec{w1, w2})}, {"hbar", to_json(hbar.value)}};
    return guarded("shuffle", P, tol, [&](nlohmann::json&) {
        cplx lhs = F(MultiIndex::one(a1, b1, 1), {w1}, hbar, spec) * F(MultiIndex::one(a2, b2, 1), {w2}, hbar, spec);
        cplx rhs = F(MultiIndex({a1, a2}, {b1, b2}, {1, 1}), {w1, w2}, hbar, spec) +
                   F(MultiIndex({a2, a1}, {b2, b1}, {1, 1}), {w2, w1}, hbar, spec);
        return std::abs(lhs - rhs);
    });
}

// ------------------------------------------------------------------ suites

Reports check_series_vs_contour(const SuiteOptions& o)
{
    std::mt19937_64 g(o.seed);
    Reports out;
    const double lim = kPi - 0.2;
    for (int i = 0; i < o.points; ++i) {
        const int m = 1 + i % 2;
        IVec n(m);
        CVec w(m);
        int rejected = 0;
        while (true) {
            for (int j = 0; j < m; ++j) {
                n[j] = 1 + static_cast<int>(g() % 3);
                w[j] = cplx(-3 + 2.5 * unif(g), lim * (2 * unif(g) - 1));
            }
            // the integral itself needs every tail sum w_j + ... + w_m inside the strip
            bool ok = true;
            cplx om = 0;
            for (int j = m - 1; j >= 0; --j) {
                om += w[j];
                ok = ok && std::abs(om.imag()) <= lim;
            }
            if (ok) break;
            ++rejected;
        }
        CheckReport r = li_instance(n, w, 1e-8, o.spec);
        r.params["point"] = i;
        r.params["rejected_draws"] = rejected;
        r.params["seed"] = o.seed;
        out.push_back(r);
    }
    // boundary stress on Im w
    for (double sgn : {1.0, -1.0}) out.push_back(li_instance({2}, {cplx(-1, sgn * (kPi - 0.1))}, 1e-6, o.spec));
    return out;
}

Reports check_depth1(const SuiteOptions& o)
{
    Reports out;
    std::vector<cplx> pts;
    for (int j = 0; j < 10; ++j) pts.emplace_back(-3 + 0.3 * j, 0.5 * ((j % 3) - 1));
    for (int a = 1; a <= 3; ++a)
        for (auto w : pts) {
            MultiIndex idx = MultiIndex::one(a, 0, 0);
            out.push_back(guarded("depth1.display", jparams(idx, {w}, 1.0), 1e-10, [&](nlohmann::json&) {
                cplx e = std::exp(w), disp;
                const cplx tpi(0, 2 * kPi);
                if (a == 1) disp = -e / (1.0 + e);
                if (a == 2) disp = (w / tpi) * e / (1.0 - e);
                if (a == 3) disp = (w * w + kPi * kPi) / (2.0 * tpi * tpi) * (-e / (1.0 + e));
                return std::abs(F(idx, {w}, 1.0, o.spec) - disp);
            }));
        }
    for (int a = 1; a <= 3; ++a)
        for (int n = 0; n <= 2; ++n)
            for (auto w : pts) {
                MultiIndex idx = MultiIndex::one(a, 0, n);
                out.push_back(guarded("depth1.closed_form", jparams(idx, {w}, 1.0), 1e-9, [&](nlohmann::json&) {
                    return std::abs(F(idx, {w}, 1.0, o.spec) - depth1_closed_form(a, n, w).value);
                }));
            }
    return out;
}

Reports check_difference(const SuiteOptions& o)
{
    Reports out;
    for (double h : {1.2, std::sqrt(2.0)}) {
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b)
                for (int n = 1; n <= 2; ++n) {
                    MultiIndex idx = MultiIndex::one(a, b, n);
                    out.push_back(difference_instance(idx, {-1.0}, h, 0, false, 1e-8, o.spec));
                    out.push_back(difference_instance(idx, {-1.0}, h, 0, true, 1e-8, o.spec));
                }
        for (const IVec& n : {IVec{1, 1}, IVec{2, 1}})
            for (int k = 0; k < 2; ++k) {
                out.push_back(difference_instance(MultiIndex::basic(n), {-2.0, -1.0}, h, k, false, 1e-8, o.spec));
                out.push_back(difference_instance(MultiIndex::basic(n), {-2.0, -1.0}, h, k, true, 1e-8, o.spec));
            }
    }
    return out;
}

Reports check_differential(const SuiteOptions& o)
{
    Reports out;
    const double h = 1e-3;
    const double tol = std::max(1e-6, 10 * std::pow(h, 4));
    out.push_back(differential_instance(MultiIndex::one(1, 1, 2), {-1.0}, 1.4, 0, h, tol, o.spec));
    out.push_back(differential_instance(MultiIndex::one(2, 1, 1), {cplx(-1, 0.3)}, 1.4, 0, h, tol, o.spec));
    for (int k = 0; k < 2; ++k)
        out.push_back(differential_instance(MultiIndex::basic({1, 1}), {-2.0, -1.0}, 1.4, k, h, tol, o.spec));
    return out;
}

Reports check_distribution(const SuiteOptions& o)
{
    std::vector<std::pair<int, int>> rs{{1, 1}, {2, 1}, {1, 2}, {3, 2}};
    if (o.r > 0) rs = {{o.r, std::max(1, o.s)}};
    Reports out;
    for (auto [r, s] : rs)
        for (int n = 1; n <= 2; ++n) {
            double tol = (r == 1 && s == 1) ? 1e-10 : 1e-6;
            out.push_back(distribution_instance(MultiIndex::one(1, 1, n), {-2.0}, 1.2, r, s, tol, o.spec));
        }
    return out;
}

Reports check_h1(const SuiteOptions& o)
{
    Reports out;
    out.push_back(h1_instance(MultiIndex::one(1, 1, 2), {-1.0}, 1e-8, o.spec));
    out.push_back(h1_instance(MultiIndex::one(2, 1, 1), {-1.0}, 1e-8, o.spec));
    out.push_back(h1_instance(MultiIndex::one(1, 1, 1), {cplx(-1.5, 0.4)}, 1e-8, o.spec));
    out.push_back(h1_instance(MultiIndex::basic({1, 1}), {-2.0, -1.0}, 1e-7, o.spec));
    out.push_back(h1_instance(MultiIndex::basic({2, 1}), {-2.0, -1.0}, 1e-7, o.spec));
    return out;
}

Reports check_rational_hbar(const SuiteOptions& o)
{
    std::vector<std::pair<int, int>> rs{{1, 1}, {2, 1}, {3, 2}};
    if (o.r > 0) rs = {{o.r, std::max(1, o.s)}};
    Reports out;
    for (auto [r, s] : rs)
        for (int n = 1; n <= 2; ++n)
            out.push_back(rational_hbar_instance(MultiIndex::one(1, 1, n), {-2.0}, r, s, 1e-6, o.spec));
    return out;
}

Reports check_symmetries(const SuiteOptions& o)
{
    Reports out;
    HbarValue hc(cplx(1.3, 0.4));
    out.push_back(conjugation_instance(MultiIndex::one(1, 1, 1), {cplx(-1, 0.3)}, hc, 1e-9, o.spec));
    out.push_back(conjugation_instance(MultiIndex::one(2, 1, 2), {cplx(-1, 0.3)}, hc, 1e-9, o.spec));
    out.push_back(conjugation_instance(MultiIndex::basic({1, 1}), {cplx(-2, 0.2), cplx(-1, -0.1)}, hc, 1e-8, o.spec));

    out.push_back(modular_instance(MultiIndex::one(1, 1, 1), {-1.0}, 2.0, 1e-8, o.spec));
    out.push_back(modular_instance(MultiIndex::one(2, 1, 2), {cplx(-1, 0.2)}, 2.0, 1e-8, o.spec));
    out.push_back(modular_instance(MultiIndex::basic({1, 1}), {-2.0, -1.0}, 2.0, 1e-8, o.spec));

    out.push_back(negation_instance(MultiIndex::one(1, 1, 1), -1.0, 1.3, 1e-8, o.spec));
    out.push_back(negation_instance(MultiIndex::one(1, 0, 1), -1.0, 1.3, 1e-8, o.spec));
    out.push_back(negation_instance(MultiIndex::one(2, 1, 2), cplx(-1, 0.3), 1.3, 1e-8, o.spec));

    MultiIndex idx = MultiIndex::one(1, 1, 1);
    out.push_back(guarded("symmetry.decay", jparams(idx, {-30.0}, 1.3), 1e-10, [&](nlohmann::json& p) {
        cplx v = F(idx, {-30.0}, 1.3, o.spec);
        p["value"] = to_json(v);
        return std::abs(v);
    }));
    return out;
}

Reports check_companion(const SuiteOptions& o)
{
    Reports out;
    const double golden = (1 + std::sqrt(5.0)) / 2;
    // 2.3 = 23/10 is itself a small-denominator rational, so sqrt 5 stands in for it
    for (double h : {std::sqrt(2.0), golden, std::sqrt(5.0)}) {
        out.push_back(companion_instance({1}, {-1.0}, h, 1e-7, o.spec));
        out.push_back(companion_instance({2}, {cplx(-1, 0.5)}, h, 1e-7, o.spec));
        out.push_back(companion_instance({1, 1}, {-2.0, -1.0}, h, 1e-6, o.spec));
    }
    out.push_back(guarded("companion.rational_warning", {{"n", {1}}, {"w", -1.0}, {"hbar", 2.3}}, 0.0,
                          [&](nlohmann::json& p) {
                              EvalResult c = companion_sum_I({1}, {-1.0}, 2.3);
                              p["warnings"] = c.diag.warnings;
                              return c.diag.warnings.empty() ? 1.0 : 0.0;
                          }));
    out.push_back(guarded("companion.far_left", {{"n", {1}}, {"w", -10.0}, {"hbar", std::sqrt(2.0)}}, 1e-3,
                          [&](nlohmann::json& p) {
                              HbarValue h(std::sqrt(2.0));
                              cplx c = companion_sum_I({1}, {-10.0}, h).value;
                              cplx q = quad_I(MultiIndex::basic({1}), {-10.0}, h, o.spec).value;
                              p["series"] = to_json(c);
                              p["quadrature"] = to_json(q);
                              return std::max(std::abs(c), std::abs(q));
                          }));
    // depth one as two explicit series:
    //   I(w) = sum (-e^w)^k / ([k]_q k^n) + hbar^{n-1} sum (-e^{w/hbar})^k / ([k]_{q'} k^n)
    for (int n = 1; n <= 2; ++n) {
        HbarValue h(std::sqrt(2.0));
        cplx w(-1.0, 0.0);
        nlohmann::json P = {{"n", n}, {"w", to_json(w)}, {"hbar", to_json(h.value)}};
        out.push_back(guarded("companion.two_series", P, 1e-7, [&](nlohmann::json& p) {
            cplx q = h.q(), qd = h.q_dual();
            Accumulator s1, s2;
            cplx x1 = -std::exp(w), x2 = -std::exp(w / h.value);
            cplx p1 = 1, p2 = 1;
            for (int k = 1; k <= 400; ++k) {
                p1 *= x1;
                p2 *= x2;
                s1.add(p1 / (q_bracket(k, q) * std::pow(double(k), n)));
                s2.add(p2 / (q_bracket(k, qd) * std::pow(double(k), n)));
            }
            cplx second = std::pow(h.value, double(n - 1)) * s2.sum();
            cplx I = quad_I(MultiIndex::basic({n}), {w}, h, o.spec).value;
            p["difference_form_residual"] = std::abs(I - (-s1.sum() + second));
            return std::abs(I - (s1.sum() + second));
        }));
    }
    return out;
}

Reports check_shuffle(const SuiteOptions& o)
{
    Reports out;
    HbarValue h(1.5);
    out.push_back(shuffle_instance(1, 1, 1, 1, -2.0, -1.0, h, 1e-7, o.spec));
    out.push_back(shuffle_instance(1, 1, 1, 1, -1.5, -1.5, h, 1e-7, o.spec));
    out.push_back(shuffle_instance(1, 1, 1, 1, cplx(-1, 0.3), cplx(-2, -0.2), h, 1e-7, o.spec));
    out.push_back(shuffle_instance(2, 1, 1, 1, -1.0, -2.0, h, 1e-7, o.spec));
    out.push_back(shuffle_instance(1, 2, 2, 1, cplx(-0.5, 0.1), -1.2, h, 1e-7, o.spec));

    // symmetric point: both depth-two terms coincide
    out.push_back(guarded("shuffle.symmetric", {{"omega", -1.5}, {"hbar", 1.5}}, 1e-7, [&](nlohmann::json&) {
        MultiIndex b1 = MultiIndex::basic({1});
        cplx f = F(b1, {-1.5}, h, o.spec);
        cplx t = F(MultiIndex::basic({1, 1}), {-1.5, -1.5}, h, o.spec);
        return std::abs(f * f - 2.0 * t);
    }));
    for (auto& r : check_a3({o.seed, o.spec, o.points, 0, 0, 2, 2, o.trials})) out.push_back(r);
    return out;
}

Reports check_a3(const SuiteOptions& o)
{
    Reports out;
    if (o.k > 0 && o.l > 0) {
        out.push_back(verify_a3(o.k, o.l, o.trials, o.seed));
        return out;
    }
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) out.push_back(verify_a3(k, l, o.trials, o.seed));
    return out;
}

Reports check_asymptotic(const SuiteOptions& o)
{
    Reports out;
    const std::vector<double> hs{0.2, 0.1, 0.05};
    auto ratio_report = [&](const std::string& name, nlohmann::json P, double tol,
                            const std::function<cplx(double)>& rho) {
        return guarded(name, P, tol, [&](nlohmann::json& p) {
            std::vector<double> dev;
            nlohmann::json rj = nlohmann::json::array();
            for (double h : hs) {
                cplx r = rho(h);
                rj.push_back(to_json(r));
                dev.push_back(std::abs(r - 1.0));
            }
            p["rho"] = rj;
            p["hbar"] = hs;
            bool mono = true;
            for (size_t j = 1; j < dev.size(); ++j) mono = mono && dev[j] < dev[j - 1];
            p["monotone"] = mono;
            return mono ? dev.back() : std::numeric_limits<double>::infinity();
        });
    };

    cplx w = -1.0;
    out.push_back(ratio_report("asymptotic.leading", {{"index", to_json(MultiIndex::one(1, 1, 1))}, {"omega", -1.0}}, 0.5,
                               [&](double h) {
                                   cplx f = F(MultiIndex::one(1, 1, 1), {w}, h, o.spec);
                                   return cplx(0, 2 * kPi * h) * f / classical_polylog(2, -std::exp(w)).value;
                               }));
    // F_{a,1,n} ~ (2 pi i hbar)^{-1} F_{a,0,n+1}
    out.push_back(ratio_report("asymptotic.scale", {{"index", to_json(MultiIndex::one(2, 1, 1))}, {"omega", -1.0}}, 0.5,
                               [&](double h) {
                                   cplx f = F(MultiIndex::one(2, 1, 1), {w}, h, o.spec);
                                   return cplx(0, 2 * kPi * h) * f / depth1_closed_form(2, 2, w).value;
                               }));
    // depth two: the leading sum carries 1/k_j on every axis, not only a shifted weight
    CVec w2{-2.0, -1.0};
    MultiIndex b2 = MultiIndex::basic({1, 1});
    out.push_back(ratio_report("asymptotic.depth2", {{"index", to_json(b2)}, {"omega", to_json(w2)}}, 1.0,
                               [&](double h) {
                                   cplx f = F(b2, w2, h, o.spec);
                                   cplx lead = leading_octant({1, 1}, {-std::exp(w2[0]), -std::exp(w2[1])}, 200);
                                   return std::pow(cplx(0, 2 * kPi * h), 2) * f / lead;
                               }));
    {
        // the shifted-weight guess Li_{n+1}(e^{w1-w2}, -e^{w2}) for comparison only
        cplx f = F(b2, w2, hs.back(), o.spec);
        cplx li = multiple_polylog({2, 2}, {std::exp(w2[0] - w2[1]), -std::exp(w2[1])}).value;
        out.back().params["shifted_weight_rho_smallest_hbar"] = to_json(std::pow(cplx(0, 2 * kPi * hs.back()), 2) * f / li);
    }
    return out;
}

Reports check_zeta_hbar(const SuiteOptions& o)
{
    Reports out;
    out.push_back(guarded("zeta_hbar.modular", {{"s", {3}}, {"hbar", 2.0}}, 1e-9, [&](nlohmann::json&) {
        cplx a = quad_zeta_hbar({3}, 2.0, o.spec).value;
        cplx b = std::pow(2.0, 2 - 1) * quad_zeta_hbar({3}, 0.5, o.spec).value;
        return std::abs(a - b);
    }));
    for (int n = 1; n <= 3; ++n)
        out.push_back(guarded("zeta_hbar.depth1", {{"s", {n + 1}}, {"hbar", 1.7}}, 1e-9, [&](nlohmann::json&) {
            cplx z = quad_zeta_hbar({n + 1}, 1.7, o.spec).value;
            cplx f = ipow_i(1 - n) * F(MultiIndex::one(1, 1, n), {0.0}, 1.7, o.spec);
            return std::abs(z - f);
        }));
    out.push_back(guarded("zeta_hbar.refinement", {{"s", {2, 2}}, {"hbar", 1.5}}, 1e-8, [&](nlohmann::json& p) {
        EvalResult r = quad_zeta_hbar({2, 2}, 1.5, o.spec);
        p["value"] = to_json(r.value);
        p["refinements"] = r.diag.refinements;
        return r.err_estimate;
    }));
    return out;
}

Reports check_generating(const SuiteOptions& o)
{
    Reports out;
    const cplx w = -1.0;
    const HbarValue h(1.3);
    auto Fn = [&](int a, int b, int n) { return F(MultiIndex::one(a, b, n), {w}, h, o.spec); };
    nlohmann::json P = {{"omega", -1.0}, {"hbar", 1.3}};
    out.push_back(guarded("generating.base", P, 1e-10, [&](nlohmann::json&) {
        return std::abs(gen_series_depth1(w, 0.0, 0.0, 0.0, h, o.spec).value - Fn(1, 1, 1));
    }));
    out.push_back(guarded("generating.u_coefficient", P, 1e-6, [&](nlohmann::json&) {
        const double d = 1e-3;
        cplx g1 = gen_series_depth1(w, 0.0, 0.0, d, h, o.spec).value;
        cplx g0 = gen_series_depth1(w, 0.0, 0.0, -d, h, o.spec).value;
        return std::abs((g1 - g0) / (2 * d) - Fn(1, 1, 2));
    }));
    out.push_back(guarded("generating.r_coefficient", P, 1e-6, [&](nlohmann::json&) {
        const double d = 1e-3;
        cplx g1 = gen_series_depth1(w, d, 0.0, 0.0, h, o.spec).value;
        cplx g0 = gen_series_depth1(w, -d, 0.0, 0.0, h, o.spec).value;
        return std::abs((g1 - g0) / (2 * d) - Fn(2, 1, 1));
    }));
    out.push_back(guarded("generating.partial_sums", P, 1e-8, [&](nlohmann::json& p) {
        const double u = 0.1;
        cplx g = gen_series_depth1(w, 0.0, 0.0, u, h, o.spec).value;
        Accumulator acc;
        nlohmann::json trail = nlohmann::json::array();
        for (int n = 1; n <= 14; ++n) {
            acc.add(Fn(1, 1, n) * std::pow(u, n - 1));
            trail.push_back(std::abs(acc.sum() - g));
        }
        p["partial_sum_errors"] = trail;
        return std::abs(acc.sum() - g);
    }));
    return out;
}

Reports check_i_variant(const SuiteOptions& o)
{
    Reports out;
    const HbarValue h(1.3);
    MultiIndex b2 = MultiIndex::basic({1, 1});
    out.push_back(guarded("i_variant.depth1", {{"omega", -1.0}}, 1e-10, [&](nlohmann::json&) {
        return std::abs(quad_I(MultiIndex::one(2, 1, 2), {-1.0}, h, o.spec).value -
                        F(MultiIndex::one(2, 1, 2), {-1.0}, h, o.spec));
    }));
    out.push_back(guarded("i_variant.forward", jparams(b2, {-2.0, -1.0}, h), 1e-9, [&](nlohmann::json&) {
        // F(omega_1, omega_2) = I(omega_1 - omega_2, omega_2)
        return std::abs(F(b2, {-2.0, -1.0}, h, o.spec) - quad_I(b2, {-1.0, -1.0}, h, o.spec).value);
    }));
    out.push_back(guarded("i_variant.inverse", jparams(b2, {-1.0, -0.5}, h), 1e-9, [&](nlohmann::json& p) {
        // I(z_1, z_2) = F(z_1 + z_2, z_2)
        cplx I = quad_I(b2, {-1.0, -0.5}, h, o.spec).value;
        p["swapped_form_residual"] = std::abs(quad_I(b2, {-1.5, -0.5}, h, o.spec).value - F(b2, {-1.0, -0.5}, h, o.spec));
        return std::abs(I - F(b2, {-1.5, -0.5}, h, o.spec));
    }));
    return out;
}

Reports check_contour_shift(const SuiteOptions& o)
{
    Reports out;
    struct Case {
        MultiIndex idx;
        CVec w;
        double h;
    };
    std::vector<Case> cases{{MultiIndex::one(1, 1, 1), {-1.0}, 1.3},
                            {MultiIndex::one(2, 1, 2), {cplx(-1, 0.5)}, 1.7},
                            {MultiIndex::basic({1, 1}), {-2.0, -1.0}, 1.3}};
    for (auto& c : cases)
        out.push_back(guarded("contour_shift", jparams(c.idx, c.w, c.h), 1e-9, [&](nlohmann::json& p) {
            QuadratureSpec s1 = o.spec, s2 = o.spec;
            double eps = default_epsilon(c.h);
            s1.epsilon = eps;
            s2.epsilon = eps / 2;
            EvalResult r1 = quad_F(c.idx, c.w, c.h, s1), r2 = quad_F(c.idx, c.w, c.h, s2);
            p["err_estimates"] = {r1.err_estimate, r2.err_estimate};
            return std::abs(r1.value - r2.value);
        }));
    return out;
}

}  // namespace qpl
