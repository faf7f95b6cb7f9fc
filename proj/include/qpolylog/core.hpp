#ifndef QPOLYLOG_CORE_HPP
#define QPOLYLOG_CORE_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qpl {

typedef std::complex<double> cplx;
typedef std::vector<cplx> CVec;
typedef std::vector<int> IVec;

// Error taxonomy. Everything derives from Error so callers can catch once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : Error {
    using Error::Error;
};
struct PoleError : Error {
    using Error::Error;
};
struct CapError : Error {
    using Error::Error;
};
struct ConvergenceError : Error {
    using Error::Error;
};
struct UsageError : Error {
    using Error::Error;
};

// Index triple (a, b, n) of a quantum polylogarithm of depth m.
struct MultiIndex {
    IVec a, b, n;

    MultiIndex() = default;
    MultiIndex(IVec a_, IVec b_, IVec n_);

    int depth() const { return static_cast<int>(n.size()); }

    // single-slot convenience
    static MultiIndex one(int a, int b, int n) { return MultiIndex({a}, {b}, {n}); }
    // a = b = (1,...,1)
    static MultiIndex basic(const IVec& n);
};

int weight(const MultiIndex& idx);
MultiIndex concat(const MultiIndex& x, const MultiIndex& y);

// Re(hbar) > 0 is what the numeric backends accept; the wider domain
// C minus (-inf, 0] is only recorded.
struct HbarValue {
    cplx value;

    explicit HbarValue(cplx v);
    HbarValue(double v) : HbarValue(cplx(v, 0.0)) {}

    cplx q() const;       // exp(i pi hbar)
    cplx q_dual() const;  // exp(i pi / hbar)
    bool is_real() const { return value.imag() == 0.0; }
    void require_numeric() const;
};

std::vector<double> convergence_strip(const MultiIndex& idx, const HbarValue& hbar);
bool in_strip(const MultiIndex& idx, const HbarValue& hbar, const CVec& omega);

enum class Backend { series, contour, companion, closed_form, exact };
const char* backend_name(Backend b);

struct Diagnostics {
    long long nodes = 0;       // quadrature nodes (total over all axes and levels)
    long long terms = 0;       // summed series terms
    int truncation = 0;        // largest summation index / product length
    int refinements = 0;       // dyadic refinement levels actually used
    std::vector<std::string> warnings;
};

struct EvalResult {
    cplx value;
    double err_estimate = 0.0;
    Backend backend = Backend::series;
    Diagnostics diag;
};

struct CheckReport {
    std::string identity_name;
    nlohmann::json params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    CheckReport() = default;
    CheckReport(std::string name, nlohmann::json p, double res, double tol);
};

// Throws DomainError if z has a NaN/Inf component.
cplx require_finite(cplx z, const char* what);
double require_finite(double x, const char* what);

// Neumaier-compensated complex accumulator.
class Accumulator {
public:
    void add(cplx x);
    cplx sum() const { return cplx(sr_ + cr_, si_ + ci_); }
private:
    static void step(double& s, double& c, double x);
    double sr_ = 0, cr_ = 0, si_ = 0, ci_ = 0;
};

// Integer power with exact handling of negative exponents.
cplx ipow(cplx z, int k);
// i^k for any integer k
cplx ipow_i(int k);

// sh(x) = e^x - e^-x  (twice sinh)
inline cplx sh(cplx x) { return 2.0 * std::sinh(x); }

double binomial(int n, int k);

nlohmann::json to_json(cplx z);
nlohmann::json to_json(const CVec& v);
nlohmann::json to_json(const MultiIndex& idx);
nlohmann::json to_json(const EvalResult& r);
nlohmann::json to_json(const CheckReport& r);

// Canonical serialization: sorted keys, doubles as %.17g, no whitespace.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace qpl

#endif
