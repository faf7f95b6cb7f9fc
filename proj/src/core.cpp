#include "qpolylog/core.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace qpl {

MultiIndex::MultiIndex(IVec a_, IVec b_, IVec n_) : a(std::move(a_)), b(std::move(b_)), n(std::move(n_))
{
    if (n.empty())
        throw DomainError("multi-index must have depth >= 1");
    if (a.size() != n.size() || b.size() != n.size())
        throw DomainError("a, b, n must have the same length");
    for (size_t i = 0; i < n.size(); ++i)
        if (a[i] < 0 || b[i] < 0)
            throw DomainError("a_i and b_i must be non-negative");
}

MultiIndex MultiIndex::basic(const IVec& n)
{
    return MultiIndex(IVec(n.size(), 1), IVec(n.size(), 1), n);
}

int weight(const MultiIndex& idx)
{
    int w = 0;
    for (int x : idx.n) w += x;
    return w;
}

MultiIndex concat(const MultiIndex& x, const MultiIndex& y)
{
    IVec a = x.a, b = x.b, n = x.n;
    a.insert(a.end(), y.a.begin(), y.a.end());
    b.insert(b.end(), y.b.begin(), y.b.end());
    n.insert(n.end(), y.n.begin(), y.n.end());
    return MultiIndex(a, b, n);
}

HbarValue::HbarValue(cplx v) : value(v)
{
    require_finite(v, "hbar");
    if (v.imag() == 0.0 && v.real() <= 0.0)
        throw DomainError("hbar on the cut (-inf, 0]");
}

cplx HbarValue::q() const
{
    return std::exp(cplx(0, std::numbers::pi) * value);
}

cplx HbarValue::q_dual() const
{
    return std::exp(cplx(0, std::numbers::pi) / value);
}

void HbarValue::require_numeric() const
{
    if (!(value.real() > 0.0))
        throw DomainError("numeric backends need Re(hbar) > 0");
}

std::vector<double> convergence_strip(const MultiIndex& idx, const HbarValue& hbar)
{
    hbar.require_numeric();
    std::vector<double> s(idx.depth());
    for (int i = 0; i < idx.depth(); ++i)
        s[i] = std::numbers::pi * (idx.a[i] + idx.b[i] * hbar.value.real());
    return s;
}

bool in_strip(const MultiIndex& idx, const HbarValue& hbar, const CVec& omega)
{
    auto s = convergence_strip(idx, hbar);
    if (omega.size() != s.size()) return false;
    for (size_t i = 0; i < s.size(); ++i)
        if (!(std::abs(omega[i].imag()) < s[i])) return false;
    return true;
}

const char* backend_name(Backend b)
{
    switch (b) {
    case Backend::series: return "series";
    case Backend::contour: return "contour";
    case Backend::companion: return "companion";
    case Backend::closed_form: return "closed_form";
    case Backend::exact: return "exact";
    }
    return "?";
}

CheckReport::CheckReport(std::string name, nlohmann::json p, double res, double tol)
    : identity_name(std::move(name)), params(std::move(p)), residual(res), tolerance(tol),
      pass(std::isfinite(res) && res <= tol)
{
}

cplx require_finite(cplx z, const char* what)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError(std::string("non-finite value: ") + what);
    return z;
}

double require_finite(double x, const char* what)
{
    if (!std::isfinite(x))
        throw DomainError(std::string("non-finite value: ") + what);
    return x;
}

void Accumulator::step(double& s, double& c, double x)
{
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
        c += (s - t) + x;
    else
        c += (x - t) + s;
    s = t;
}

void Accumulator::add(cplx x)
{
    step(sr_, cr_, x.real());
    step(si_, ci_, x.imag());
}

cplx ipow(cplx z, int k)
{
    if (k < 0) return 1.0 / ipow(z, -k);
    cplx r = 1.0;
    while (k) {
        if (k & 1) r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

cplx ipow_i(int k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

double binomial(int n, int k)
{
    if (k < 0) return 0.0;
    // generalized: n may be negative
    double r = 1.0;
    for (int j = 0; j < k; ++j) r = r * (n - j) / (j + 1);
    return r;
}

nlohmann::json to_json(cplx z)
{
    return {{"re", z.real()}, {"im", z.imag()}};
}

nlohmann::json to_json(const CVec& v)
{
    nlohmann::json a = nlohmann::json::array();
    for (auto& z : v) a.push_back(to_json(z));
    return a;
}

nlohmann::json to_json(const MultiIndex& idx)
{
    return {{"a", idx.a}, {"b", idx.b}, {"n", idx.n}};
}

nlohmann::json to_json(const EvalResult& r)
{
    nlohmann::json d = {{"nodes", r.diag.nodes},
                        {"terms", r.diag.terms},
                        {"truncation", r.diag.truncation},
                        {"refinements", r.diag.refinements},
                        {"warnings", r.diag.warnings}};
    return {{"value", to_json(r.value)},
            {"err_estimate", r.err_estimate},
            {"backend", backend_name(r.backend)},
            {"diagnostics", d}};
}

nlohmann::json to_json(const CheckReport& r)
{
    return {{"identity", r.identity_name},
            {"params", r.params},
            {"residual", r.residual},
            {"tolerance", r.tolerance},
            {"pass", r.pass}};
}

namespace {

void dump_into(const nlohmann::json& j, std::string& out)
{
    using nlohmann::json;
    switch (j.type()) {
    case json::value_t::object: {
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: sorted keys
            if (!first) out += ',';
            first = false;
            out += json(it.key()).dump();
            out += ':';
            dump_into(it.value(), out);
        }
        out += '}';
        break;
    }
    case json::value_t::array: {
        out += '[';
        for (size_t i = 0; i < j.size(); ++i) {
            if (i) out += ',';
            dump_into(j[i], out);
        }
        out += ']';
        break;
    }
    case json::value_t::number_float: {
        double x = j.get<double>();
        if (!std::isfinite(x)) {
            out += "null";
            break;
        }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out += buf;
        break;
    }
    default:
        out += j.dump();
    }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& j)
{
    std::string s;
    dump_into(j, s);
    return s;
}

}  // namespace qpl
