#ifndef QPOLYLOG_SERIES_HPP
#define QPOLYLOG_SERIES_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qpolylog/core.hpp"

namespace qpl {

struct SeriesParams {
    double tol = 1e-12;
    long long k_max = 1000000;  // total number of summed terms
};

// Power series c_0 + c_1 x + ... + c_N x^N with complex coefficients.
struct TruncatedSeries {
    Eigen::VectorXcd c;
    std::string var = "x";

    TruncatedSeries() : c(Eigen::VectorXcd::Zero(1)) {}
    explicit TruncatedSeries(Eigen::VectorXcd coeffs, std::string v = "x");

    int degree() const { return static_cast<int>(c.size()) - 1; }
    cplx operator()(cplx x) const;
};

enum class Eps { one, inv_hbar };

struct EpsilonVector {
    std::vector<Eps> slots;
    HbarValue hbar;

    EpsilonVector(std::vector<Eps> s, HbarValue h) : slots(std::move(s)), hbar(h) {}
    int size() const { return static_cast<int>(slots.size()); }
    cplx value(int j) const;   // 1 or 1/hbar
    cplx q_of(int j) const;    // q or q_dual
    static std::vector<EpsilonVector> all(int m, HbarValue h);
};

double zeta_int(int s);  // Riemann zeta at an integer s != 1

EvalResult classical_polylog(int n, cplx z, const SeriesParams& p = {});

// Li_n(z) = sum over 0 < k_1 < ... < k_m of prod z_i^{k_i} / k_i^{n_i}
EvalResult multiple_polylog(const IVec& n, const CVec& z, const SeriesParams& p = {});

// sum over k_1..k_m > 0 of prod x_i^{k_i} / prod (k_1+...+k_i)^{n_i};
// equals multiple_polylog(n, (x_1/x_2, ..., x_{m-1}/x_m, x_m)) and
// converges for all |x_i| < 1.
EvalResult octant_polylog(const IVec& n, const CVec& x, const SeriesParams& p = {});

// (z_1, ..., z_{m+1}) -> (z_2/z_1, ..., z_{m+1}/z_m)
CVec polylog_from_iterated_args(const IVec& n, const CVec& z_path);

// [k]_q = q^k - q^-k
cplx q_bracket(int k, cplx q);

// octant sum of prod z_i^{k_i} / ([k_i]_q^{a_i} (k_1+...+k_i)^{n_i})
EvalResult q_multiple_polylog(const IVec& a, const IVec& n, const CVec& z, cplx q,
                              const SeriesParams& p = {});

// Psi_a(x;q) = prod_{j>=0} (1 + q^{2j+a} x)^{(-1)^a C(j+a-1, a-1)},  Psi_0 = 1 + x.
// N = number of factors; N <= 0 picks N from the tail bound.
EvalResult pochhammer_psi(int a, cplx x, cplx q, int N = 0);

// One companion series; w are the arguments of the I-variant.
EvalResult companion_series(const EpsilonVector& eps, const IVec& a, const IVec& n, const CVec& w,
                            const SeriesParams& p = {});

// Sum of all 2^m companion series with a = (1,...,1).
EvalResult companion_sum_I(const IVec& n, const CVec& w, HbarValue hbar, const SeriesParams& p = {});

// x^k -> (-1)^{a-1} q^{ak} / (1 - q^{2k})^a x^k. a = 0 gives -f.
TruncatedSeries q_integral(int a, const TruncatedSeries& f, cplx q);

// x^k -> (q^k - q^-k) x^k
TruncatedSeries q_difference(const TruncatedSeries& f, cplx q);

// sum_{k=1}^N x^k / k^n
TruncatedSeries polylog_series(int n, int N);

}  // namespace qpl

#endif
