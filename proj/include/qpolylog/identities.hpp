#ifndef QPOLYLOG_IDENTITIES_HPP
#define QPOLYLOG_IDENTITIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qpolylog/contour.hpp"
#include "qpolylog/core.hpp"

namespace qpl {

typedef std::vector<CheckReport> Reports;

struct SuiteOptions {
    std::uint64_t seed = 20240611;
    QuadratureSpec spec;
    int points = 20;        // random points for series_vs_contour
    int r = 0, s = 0;       // distribution / rational hbar; 0 = default list
    int k = 0, l = 0;       // a3; 0 = all pairs up to (3,3)
    int trials = 20;
};

// ---- single instances (all residuals absolute)

CheckReport li_instance(const IVec& n, const CVec& w, double tol, const QuadratureSpec& spec = {});

// Delta^{(omega_k)}_{c} F - F_{lowered}, c = i pi (lower a_k) or i pi hbar (lower b_k)
CheckReport difference_instance(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, int k,
                                bool hbar_shift, double tol, const QuadratureSpec& spec = {});

// d/d omega_k F - (F_{n - 1_k} - F_{n - 1_{k-1}}), 5-point stencil with one Richardson step
CheckReport differential_instance(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, int k, double step,
                                  double tol, const QuadratureSpec& spec = {});

// sum over alpha, beta of F^hbar at shifted points
cplx distribution_rhs(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, int r, int s,
                      const QuadratureSpec& spec = {});
CheckReport distribution_instance(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, int r, int s,
                                  double tol, const QuadratureSpec& spec = {});

// Value of F at hbar = 1 from residues: every pole is of order a_j + b_j, so besides the
// product term there are derivative corrections.  Returns the full sum.
cplx h1_formula(const MultiIndex& idx, const CVec& omega);
// The leading product prod Q_{A_j-1}(omega_j) Li_n(z) only.
cplx h1_product_term(const MultiIndex& idx, const CVec& omega);
CheckReport h1_instance(const MultiIndex& idx, const CVec& omega, double tol, const QuadratureSpec& spec = {});

CheckReport rational_hbar_instance(const MultiIndex& idx, const CVec& omega, int r, int s, double tol,
                                   const QuadratureSpec& spec = {});

CheckReport conjugation_instance(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, double tol,
                                 const QuadratureSpec& spec = {});
CheckReport modular_instance(const MultiIndex& idx, const CVec& omega, const HbarValue& hbar, double tol,
                             const QuadratureSpec& spec = {});
// F(omega) + (-1)^{a+b+n-1} F(-omega) + B_{a,b,n}(omega), depth one
CheckReport negation_instance(const MultiIndex& idx, cplx omega, const HbarValue& hbar, double tol,
                              const QuadratureSpec& spec = {});

CheckReport companion_instance(const IVec& n, const CVec& w, const HbarValue& hbar, double tol,
                               const QuadratureSpec& spec = {});

CheckReport shuffle_instance(int a1, int b1, int a2, int b2, cplx w1, cplx w2, const HbarValue& hbar, double tol,
                             const QuadratureSpec& spec = {});

// ---- suites

Reports check_series_vs_contour(const SuiteOptions& o = {});
Reports check_depth1(const SuiteOptions& o = {});
Reports check_difference(const SuiteOptions& o = {});
Reports check_differential(const SuiteOptions& o = {});
Reports check_distribution(const SuiteOptions& o = {});
Reports check_h1(const SuiteOptions& o = {});
Reports check_rational_hbar(const SuiteOptions& o = {});
Reports check_symmetries(const SuiteOptions& o = {});
Reports check_companion(const SuiteOptions& o = {});
Reports check_shuffle(const SuiteOptions& o = {});
Reports check_a3(const SuiteOptions& o = {});
Reports check_asymptotic(const SuiteOptions& o = {});
Reports check_q_calculus(const SuiteOptions& o = {});
Reports check_bernoulli(const SuiteOptions& o = {});
Reports check_zeta_hbar(const SuiteOptions& o = {});
Reports check_generating(const SuiteOptions& o = {});
Reports check_i_variant(const SuiteOptions& o = {});
Reports check_contour_shift(const SuiteOptions& o = {});

std::vector<std::string> identity_names();
// Runs one named suite; the reports come back sorted by (identity_name, params).
Reports run_identity(const std::string& name, const SuiteOptions& o = {});
void sort_reports(Reports& r);

// Frozen sign and index conventions with the calibration numbers behind them.
const char* conventions_text();

}  // namespace qpl

#endif
