#include "qpolylog/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qpl {

namespace {

const double kPi = std::numbers::pi;

// B_2, B_4, ..., B_16
const double kB2k[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};

// zeta(-j)/k! for odd j >= 1 and k = j + n, via the functional equation,
// written so that nothing overflows: (-1)^{(j+1)/2} 2 j! zeta(j+1) / ((2 pi)^{j+1} k!)
double zeta_neg_over_fact(int j, int k)
{
    double r = 2.0 * zeta_int(j + 1);
    for (int t = 1; t <= j; ++t) r *= t / (2 * kPi * (k - j + t));
    for (int t = 1; t <= k - j; ++t) r /= t;
    r /= 2 * kPi;
    return ((j + 1) / 2) % 2 ? -r : r;
}

// Li_n(e^mu) for n >= 2 and |mu| < 2 pi
cplx polylog_log_series(int n, cplx mu)
{
    if (mu == cplx(0, 0)) return zeta_int(n);
    Accumulator acc;
    double harm = 0;
    for (int t = 1; t < n; ++t) harm += 1.0 / t;
    cplx mpow = 1.0;  // mu^k / k!
    for (int k = 0; k < n - 1; ++k) {
        acc.add(zeta_int(n - k) * mpow);
        mpow *= mu / double(k + 1);
    }
    acc.add(mpow * (harm - std::log(-mu)));
    mpow *= mu / double(n);
    acc.add(-0.5 * mpow);  // zeta(0) mu^n / n!
    cplx mk = std::pow(mu, n + 1);
    for (int j = 1; j < 200; j += 2) {
        int k = n + j;
        if (j > 1) mk *= mu * mu;
        cplx term = zeta_neg_over_fact(j, k) * mk;
        acc.add(term);
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc.sum()))) break;
    }
    return acc.sum();
}

double eulerian(int s, int k)
{
    // A(s,k), small s only
    std::vector<double> row(1, 1.0);
    for (int t = 1; t <= s; ++t) {
        std::vector<double> nr(t, 0.0);
        for (int j = 0; j < t; ++j) {
            double v = 0;
            if (j < (int)row.size()) v += (j + 1) * row[j];
            if (j >= 1 && j - 1 < (int)row.size()) v += (t - j) * row[j - 1];
            nr[j] = v;
        }
        row = nr;
    }
    return (k >= 0 && k < (int)row.size()) ? row[k] : 0.0;
}

int pick_K(double r, double C, double budget)
{
    if (r <= 0) return 1;
    if (!(r < 1)) throw DomainError("series ratio >= 1: divergent");
    double lr = std::log(r);
    double need = std::log(budget * (1 - r) / C) / lr - 1.0;
    int K = std::max(1, (int)std::ceil(need));
    return K;
}

struct Axis {
    std::vector<cplx> c;  // c[k-1] for k = 1..K
    cplx weight;
};

void octant_rec(const std::vector<Axis>& ax, const IVec& n, int j, cplx S, cplx P, Accumulator& acc)
{
    if (j == (int)ax.size()) {
        acc.add(P);
        return;
    }
    const Axis& A = ax[j];
    for (size_t k = 1; k <= A.c.size(); ++k) {
        cplx S2 = S + A.weight * double(k);
        cplx P2 = P * A.c[k - 1] * ipow(S2, -n[j]);
        octant_rec(ax, n, j + 1, S2, P2, acc);
    }
}

EvalResult octant_engine(const std::vector<Axis>& ax, const IVec& n, const SeriesParams& p, Backend b)
{
    long long total = 1;
    for (auto& A : ax) {
        total *= (long long)A.c.size();
        if (total > p.k_max) throw CapError("octant sum needs more than k_max terms");
    }
    Accumulator acc;
    octant_rec(ax, n, 0, 0.0, 1.0, acc);
    EvalResult r;
    r.value = require_finite(acc.sum(), "octant sum");
    r.backend = b;
    r.diag.terms = total;
    int K = 0;
    for (auto& A : ax) K = std::max(K, (int)A.c.size());
    r.diag.truncation = K;
    return r;
}

}  // namespace

TruncatedSeries::TruncatedSeries(Eigen::VectorXcd coeffs, std::string v) : c(std::move(coeffs)), var(std::move(v))
{
    if (c.size() == 0) c = Eigen::VectorXcd::Zero(1);
}

cplx TruncatedSeries::operator()(cplx x) const
{
    cplx r = 0;
    for (int k = degree(); k >= 0; --k) r = r * x + c(k);
    return r;
}

cplx EpsilonVector::value(int j) const
{
    return slots[j] == Eps::one ? cplx(1.0) : 1.0 / hbar.value;
}

cplx EpsilonVector::q_of(int j) const
{
    return slots[j] == Eps::one ? hbar.q() : hbar.q_dual();
}

std::vector<EpsilonVector> EpsilonVector::all(int m, HbarValue h)
{
    std::vector<EpsilonVector> out;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<Eps> s(m);
        for (int j = 0; j < m; ++j) s[j] = (mask >> j) & 1 ? Eps::inv_hbar : Eps::one;
        out.emplace_back(s, h);
    }
    return out;
}

double zeta_int(int s)
{
    if (s == 1) throw DomainError("zeta pole at s = 1");
    if (s == 0) return -0.5;
    if (s < 0) {
        int j = -s;
        if (j % 2 == 0) return 0.0;
        // zeta(-j) = -B_{j+1}/(j+1),  B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}
        double r = 2.0 * zeta_int(j + 1);
        for (int t = 1; t <= j + 1; ++t) r *= t / (2 * kPi);
        int k = (j + 1) / 2;
        double B = (k % 2 ? r : -r);
        return -B / (j + 1);
    }
    if (s >= 12) {
        double r = 0;
        for (int k = 80; k >= 1; --k) r += std::pow(double(k), -s);
        return r;
    }
    const int N = 16;
    double r = 0;
    for (int k = N - 1; k >= 1; --k) r += std::pow(double(k), -s);
    r += std::pow(double(N), 1 - s) / (s - 1) + 0.5 * std::pow(double(N), -s);
    double rising = s;  // s (s+1) ... (s+2j-2)
    double fact = 2;    // (2j)!
    for (int j = 1; j <= 8; ++j) {
        r += kB2k[j - 1] / fact * rising * std::pow(double(N), -s - 2 * j + 1);
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return r;
}

EvalResult classical_polylog(int n, cplx z, const SeriesParams& p)
{
    require_finite(z, "z");
    EvalResult r;
    r.backend = Backend::series;
    if (n <= 0) {
        if (z == cplx(1, 0)) throw DomainError("Li_n(z) with n <= 0 has a pole at z = 1");
        int s = -n;
        if (s == 0) {
            r.value = z / (1.0 - z);
        } else {
            cplx num = 0;
            for (int k = s - 1; k >= 0; --k) num = num * z + eulerian(s, k);
            r.value = z * num / ipow(1.0 - z, s + 1);
        }
        r.backend = Backend::closed_form;
        r.value = require_finite(r.value, "Li_n(z)");
        return r;
    }
    double az = std::abs(z);
    if (az > 1.0 || (az == 1.0 && n == 1))
        throw DomainError("Li_n(z) series diverges: need |z| < 1, or |z| <= 1 with n >= 2");
    if (az == 0.0) {
        r.value = 0;
        return r;
    }
    if (n == 1) {
        r.value = -std::log(1.0 - z);
        r.backend = Backend::closed_form;
        return r;
    }
    if (az > 0.75) {
        r.value = require_finite(polylog_log_series(n, std::log(z)), "Li_n(z)");
        r.err_estimate = 1e-15 * std::max(1.0, std::abs(r.value));
        r.diag.terms = 60;
        return r;
    }
    int K = pick_K(az, 1.0, p.tol);
    if (K > p.k_max) throw CapError("classical polylog needs more than k_max terms");
    Accumulator acc;
    cplx zk = 1;
    for (int k = 1; k <= K; ++k) {
        zk *= z;
        acc.add(zk / std::pow(double(k), n));
    }
    r.value = acc.sum();
    r.err_estimate = std::pow(az, K + 1) / (1 - az);
    r.diag.terms = K;
    r.diag.truncation = K;
    return r;
}

EvalResult octant_polylog(const IVec& n, const CVec& x, const SeriesParams& p)
{
    const int m = static_cast<int>(n.size());
    if (m == 0 || x.size() != n.size()) throw DomainError("octant_polylog: bad lengths");
    double rmax = 0;
    for (auto& v : x) rmax = std::max(rmax, std::abs(require_finite(v, "x")));
    if (!(rmax < 1)) throw DomainError("octant_polylog: need |x_i| < 1");

    int neg = 0;
    for (int v : n) neg += std::max(0, -v);

    // T_j(k) = x_{j+1} T_j(k-1) + x_j T_{j-1}(k-1) / k^{n_j}, x_{m+1} = 1
    std::vector<cplx> T(m + 1, 0.0);
    T[0] = 1.0;
    Accumulator acc;
    EvalResult r;
    r.backend = Backend::series;
    long long k = 0;
    double bound = 1;
    while (true) {
        ++k;
        std::vector<cplx> T2(m + 1);
        T2[0] = T[0] * x[0];
        for (int j = 1; j <= m; ++j) {
            cplx next = (j < m) ? x[j] : cplx(1.0);
            cplx inc = x[j - 1] * T[j - 1] * std::pow(double(k), -n[j - 1]);
            if (j == m) {
                acc.add(inc);
                T2[j] = 0;
            } else {
                T2[j] = next * T[j] + inc;
            }
        }
        T = T2;
        if (rmax == 0) {
            bound = 0;
            break;
        }
        bound = binomial((int)k, m - 1) * std::pow(rmax, (double)k + 1) / std::pow(1 - rmax, m) *
                std::pow(double(k + 1), neg);
        if (bound < p.tol) break;
        if (k * m > p.k_max) throw CapError("multiple polylog needs more than k_max terms");
    }
    r.value = require_finite(acc.sum(), "multiple polylog");
    r.err_estimate = bound;
    r.diag.terms = k * m;
    r.diag.truncation = (int)k;
    return r;
}

EvalResult multiple_polylog(const IVec& n, const CVec& z, const SeriesParams& p)
{
    const int m = static_cast<int>(n.size());
    if (m == 0 || z.size() != n.size()) throw DomainError("multiple_polylog: bad lengths");
    for (auto& v : z)
        if (!(std::abs(require_finite(v, "z")) < 1)) throw DomainError("multiple_polylog: need |z_i| < 1");
    CVec x(m);
    cplx prod = 1;
    for (int j = m - 1; j >= 0; --j) {
        prod *= z[j];
        x[j] = prod;
    }
    return octant_polylog(n, x, p);
}

CVec polylog_from_iterated_args(const IVec& n, const CVec& z_path)
{
    if (z_path.size() != n.size() + 1) throw DomainError("need m+1 iterated-integral arguments");
    CVec out;
    for (size_t i = 0; i < z_path.size(); ++i)
        if (z_path[i] == cplx(0, 0)) throw DomainError("iterated-integral argument is zero");
    for (size_t i = 0; i + 1 < z_path.size(); ++i) out.push_back(z_path[i + 1] / z_path[i]);
    return out;
}

cplx q_bracket(int k, cplx q)
{
    return ipow(q, k) - ipow(q, -k);
}

namespace {

// 1/[k]_q computed without cancellation when |q| != 1
cplx inv_bracket(int k, cplx q)
{
    if (std::abs(q) < 1) {
        cplx qk = ipow(q, k);
        return -qk / (1.0 - qk * qk);
    }
    if (std::abs(q) > 1) {
        cplx qk = ipow(q, -k);
        return qk / (1.0 - qk * qk);
    }
    cplx b = q_bracket(k, q);
    if (std::abs(b) == 0.0) throw PoleError("[k]_q vanishes");
    return 1.0 / b;
}

}  // namespace

EvalResult q_multiple_polylog(const IVec& a, const IVec& n, const CVec& z, cplx q, const SeriesParams& p)
{
    const int m = static_cast<int>(n.size());
    if (m == 0 || a.size() != n.size() || z.size() != n.size()) throw DomainError("q_multiple_polylog: bad lengths");
    double aq = std::abs(require_finite(q, "q"));
    if (!(aq > 0 && aq < 1)) throw DomainError("q_multiple_polylog: need 0 < |q| < 1");

    std::vector<double> r(m), C(m);
    for (int j = 0; j < m; ++j) {
        if (a[j] < 0) throw DomainError("a_i must be non-negative");
        r[j] = std::abs(z[j]) * std::pow(aq, a[j]);
        if (!(r[j] < 1)) throw DomainError("q_multiple_polylog: need |z_i| |q|^{a_i} < 1");
        C[j] = std::pow(1 - aq * aq, -a[j]);
    }
    int neg = 0;
    for (int v : n) neg += std::max(0, -v);

    std::vector<Axis> ax(m);
    for (int j = 0; j < m; ++j) {
        double others = 1;
        for (int i = 0; i < m; ++i)
            if (i != j) others *= C[i] / (1 - r[i]);
        int K = pick_K(r[j], C[j] * others, p.tol / m);
        if (neg) {
            while (C[j] * others * std::pow(r[j], K + 1) / (1 - r[j]) * std::pow(double(m * (K + 1)), neg) > p.tol / m)
                ++K;
        }
        if (K > p.k_max) throw CapError("q-polylog needs more than k_max terms");
        ax[j].weight = 1.0;
        ax[j].c.resize(K);
        cplx zk = 1;
        for (int k = 1; k <= K; ++k) {
            zk *= z[j];
            ax[j].c[k - 1] = zk * ipow(inv_bracket(k, q), a[j]);
        }
    }
    EvalResult res = octant_engine(ax, n, p, Backend::series);
    res.err_estimate = p.tol;
    return res;
}

EvalResult pochhammer_psi(int a, cplx x, cplx q, int N)
{
    require_finite(x, "x");
    double aq = std::abs(require_finite(q, "q"));
    if (a < 0) throw DomainError("Psi_a needs a >= 0");
    EvalResult r;
    r.backend = Backend::series;
    if (a == 0) {
        r.value = 1.0 + x;
        return r;
    }
    if (!(aq < 1)) throw DomainError("Psi_a needs |q| < 1");
    if (N <= 0) {
        N = 1;
        while (binomial(N + a - 1, a - 1) * std::pow(aq, 2 * N + a) * std::abs(x) / (1 - aq * aq) > 1e-17 && N < 100000)
            ++N;
    }
    cplx prod = 1.0;
    for (int j = 0; j < N; ++j) {
        cplx f = 1.0 + ipow(q, 2 * j + a) * x;
        if (std::abs(f) == 0.0) throw PoleError("Psi_a factor vanishes");
        int e = (int)std::lround(binomial(j + a - 1, a - 1));
        prod *= ipow(f, (a % 2 ? -e : e));
    }
    r.value = require_finite(prod, "Psi_a");
    double tail = 0;
    for (int j = N; j < N + 200; ++j) tail += binomial(j + a - 1, a - 1) * std::pow(aq, 2 * j + a) * std::abs(x);
    r.err_estimate = tail * std::abs(prod);
    r.diag.truncation = N;
    r.diag.terms = N;
    return r;
}

EvalResult companion_series(const EpsilonVector& eps, const IVec& a, const IVec& n, const CVec& w,
                            const SeriesParams& p)
{
    const int m = static_cast<int>(n.size());
    if (m == 0 || eps.size() != m || (int)a.size() != m || (int)w.size() != m)
        throw DomainError("companion_series: bad lengths");
    eps.hbar.require_numeric();
    for (auto& v : w) {
        require_finite(v, "w");
        if (!(v.real() < 0)) throw DomainError("companion series need Re(w_i) < 0");
    }
    std::vector<Axis> ax(m);
    cplx om = 0;
    std::vector<cplx> omega(m);
    for (int j = m - 1; j >= 0; --j) {
        om += w[j];
        omega[j] = om;
    }
    for (int j = 0; j < m; ++j) {
        cplx e = eps.value(j);
        cplx base = std::exp(e * omega[j]);
        double rj = std::abs(base);
        if (!(rj < 1)) throw DomainError("companion series diverges for these arguments");
        int K = pick_K(rj, 1.0, p.tol * 1e-2);
        if (K > p.k_max) throw CapError("companion series needs more than k_max terms");
        cplx qj = eps.q_of(j);
        ax[j].weight = e;
        ax[j].c.resize(K);
        cplx bk = 1;
        for (int k = 1; k <= K; ++k) {
            bk *= base;
            double sign = ((long long)a[j] * k) % 2 ? -1.0 : 1.0;
            ax[j].c[k - 1] = e * sign * bk * ipow(inv_bracket(k, qj), a[j]);
        }
    }
    EvalResult r = octant_engine(ax, n, p, Backend::companion);
    r.err_estimate = p.tol;
    return r;
}

EvalResult companion_sum_I(const IVec& n, const CVec& w, HbarValue hbar, const SeriesParams& p)
{
    const int m = static_cast<int>(n.size());
    hbar.require_numeric();
    EvalResult total;
    total.backend = Backend::companion;
    if (hbar.is_real()) {
        double h = hbar.value.real();
        for (int d = 1; d <= 12; ++d) {
            double num = std::round(h * d);
            if (std::abs(h - num / d) < 1e-6) {
                total.diag.warnings.push_back("hbar is within 1e-6 of a rational with denominator <= 12; "
                                              "companion poles nearly coincide");
                break;
            }
        }
    }
    Accumulator acc;
    for (auto& e : EpsilonVector::all(m, hbar)) {
        EvalResult r = companion_series(e, IVec(m, 1), n, w, p);
        acc.add(r.value);
        total.err_estimate += r.err_estimate;
        total.diag.terms += r.diag.terms;
        total.diag.truncation = std::max(total.diag.truncation, r.diag.truncation);
    }
    total.value = acc.sum();
    return total;
}

TruncatedSeries q_integral(int a, const TruncatedSeries& f, cplx q)
{
    if (a < 0) throw DomainError("q_integral needs a >= 0");
    if (!(std::abs(q) > 0 && std::abs(q) < 1)) throw DomainError("q_integral needs 0 < |q| < 1");
    TruncatedSeries g = f;
    if (a == 0) {
        g.c = -f.c;
        return g;
    }
    if (f.c(0) != cplx(0, 0)) throw DomainError("q_integral: nonzero constant term (divergent factor)");
    double sgn = (a - 1) % 2 ? -1.0 : 1.0;
    for (int k = 1; k <= f.degree(); ++k) {
        cplx qk = ipow(q, k);
        g.c(k) = f.c(k) * sgn * ipow(qk, a) / ipow(1.0 - qk * qk, a);
    }
    return g;
}

TruncatedSeries q_difference(const TruncatedSeries& f, cplx q)
{
    if (!(std::abs(q) > 0 && std::abs(q) < 1)) throw DomainError("q_difference needs 0 < |q| < 1");
    TruncatedSeries g = f;
    for (int k = 0; k <= f.degree(); ++k) g.c(k) = f.c(k) * q_bracket(k, q);
    return g;
}

TruncatedSeries polylog_series(int n, int N)
{
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(N + 1);
    for (int k = 1; k <= N; ++k) c(k) = std::pow(double(k), -n);
    return TruncatedSeries(c);
}

}  // namespace qpl
