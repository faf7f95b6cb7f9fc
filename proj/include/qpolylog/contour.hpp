#ifndef QPOLYLOG_CONTOUR_HPP
#define QPOLYLOG_CONTOUR_HPP

#include <vector>

#include "qpolylog/core.hpp"

namespace qpl {

// Quadrature along Im p = epsilon on every axis.  Non-positive epsilon / T
// mean "choose automatically".
struct QuadratureSpec {
    double epsilon = 0.0;
    double T = 0.0;
    int panels = 0;        // panels on the inner interval [-4, 4]; 0 = from epsilon
    int max_refine = 6;
    double tol = 1e-11;
    int max_depth_m = 3;
};

struct KernelParams {
    int a = 0, b = 0;
    HbarValue hbar{1.0};
    cplx omega;
};

// e^{-ip omega} / (sh^a(pi p) sh^b(pi hbar p))
cplx kernel(const KernelParams& k, cplx p);

double default_epsilon(const HbarValue& hbar);

// F^hbar_{a,b,n}(omega) = i^{|n|-m} int prod K(p_k; omega_k) dp_k / (p_1+...+p_k)^{n_k}
EvalResult quad_F(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, const QuadratureSpec& spec = {});

// Same integral with the exponentials e^{-i(p_1+...+p_k) w_k}; F(omega) = I(omega_1-omega_2, ..., omega_m).
EvalResult quad_I(const MultiIndex& idx, const CVec& w, const HbarValue& hbar, const QuadratureSpec& spec = {});

// Li_n(e^{w_1}, ..., e^{w_{m-1}}, -e^{w_m}) as a sh(pi p)-only integral.
// Needs |Im(w_j + ... + w_m)| < pi for every j, which is stronger than |Im w_j| < pi.
EvalResult quad_Li(const IVec& n, const CVec& w, const QuadratureSpec& spec = {});

// zeta_hbar(s) = int prod dp_k / (sh(pi p_k) sh(pi hbar p_k) (p_1+...+p_k)^{s_k-1}), no prefactor.
EvalResult quad_zeta_hbar(const IVec& s, const HbarValue& hbar, const QuadratureSpec& spec = {});

// i^{n-1} times the counterclockwise integral of K(p; omega) / p^n over |p| = radius.
// radius <= 0 picks half the distance to the nearest nonzero pole.
EvalResult quad_bernoulli_circle(int a, int b, int n, cplx omega, const HbarValue& hbar, double radius = 0.0,
                                 int nodes = 128);

// Coefficients (ascending) of Q_m(w) = prod_j (w - i pi (m-1-2j)) / ((2 pi i)^m m!)
std::vector<cplx> q_poly_numeric(int m);
cplx poly_eval(const std::vector<cplx>& c, cplx x);
std::vector<cplx> poly_derivative(const std::vector<cplx>& c);

// F_{a,0,n}(omega) = sum_{k=0}^{a-1} C(n+k-1, k) (-d/d omega)^k Q_{a-1}(omega) Li_{n+k}(e^{omega + i pi a})
EvalResult depth1_closed_form(int a, int n, cplx omega);

// int e^{-ip omega} / ((sh(pi p) - r)(sh(pi hbar p) - s)) dp / (p - iu)
//   = sum_{a,b,n >= 1} r^{a-1} s^{b-1} u^{n-1} F_{a,b,n}(omega)
EvalResult gen_series_depth1(cplx omega, cplx r, cplx s, cplx u, const HbarValue& hbar,
                             const QuadratureSpec& spec = {});

}  // namespace qpl

#endif
