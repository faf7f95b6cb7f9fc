#include "qpolylog/exact.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace qpl {

std::string to_string(const mpq_class& q)
{
    return q.get_str();
}

// ---------------------------------------------------------------- ExactScalar

ExactScalar::ExactScalar(const mpq_class& q, int s, int t)
{
    s = ((s % 4) + 4) % 4;
    mpq_class v = q;
    if (s >= 2) {
        v = -v;
        s -= 2;
    }
    add_term(s, t, v);
}

void ExactScalar::add_term(int s, int t, const mpq_class& q)
{
    if (q == 0) return;
    auto key = std::make_pair(s, t);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, q);
        return;
    }
    it->second += q;
    if (it->second == 0) terms_.erase(it);
}

ExactScalar ExactScalar::operator-() const
{
    ExactScalar r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o)
{
    for (auto& kv : o.terms_) add_term(kv.first.first, kv.first.second, kv.second);
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o)
{
    for (auto& kv : o.terms_) add_term(kv.first.first, kv.first.second, -kv.second);
    return *this;
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y)
{
    ExactScalar r;
    for (auto& u : x.terms_)
        for (auto& v : y.terms_) {
            int s = u.first.first + v.first.first;
            mpq_class q = u.second * v.second;
            if (s == 2) {
                s = 0;
                q = -q;
            }
            r.add_term(s, u.first.second + v.first.second, q);
        }
    return r;
}

ExactScalar ExactScalar::inverse() const
{
    if (!is_monomial()) throw DomainError("exact inverse only for single-term scalars");
    auto& kv = *terms_.begin();
    // (q i^s pi^t)^{-1} = q^{-1} i^{-s} pi^{-t}
    return ExactScalar(mpq_class(1) / kv.second, -kv.first.first, -kv.first.second);
}

ExactScalar ExactScalar::conj() const
{
    ExactScalar r = *this;
    for (auto& kv : r.terms_)
        if (kv.first.first == 1) kv.second = -kv.second;
    return r;
}

cplx ExactScalar::to_complex() const
{
    cplx r = 0;
    for (auto& kv : terms_) {
        double v = kv.second.get_d() * std::pow(std::numbers::pi, kv.first.second);
        r += kv.first.first ? cplx(0, v) : cplx(v, 0);
    }
    return r;
}

std::string ExactScalar::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& kv : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << kv.second.get_str() << ")";
        if (kv.first.first) os << "*i";
        if (kv.first.second == 1)
            os << "*pi";
        else if (kv.first.second)
            os << "*pi^" << kv.first.second;
    }
    return os.str();
}

// ---------------------------------------------------------------- ExactPoly

ExactPoly ExactPoly::monomial(int dw, int dh, const ExactScalar& c)
{
    if (dw < 0) throw DomainError("negative omega power");
    ExactPoly p;
    p.add(dw, dh, c);
    return p;
}

void ExactPoly::add(int dw, int dh, const ExactScalar& c)
{
    if (c.is_zero()) return;
    auto key = std::make_pair(dw, dh);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int ExactPoly::degree_omega() const
{
    int d = -1;
    for (auto& kv : terms_) d = std::max(d, kv.first.first);
    return d;
}

ExactPoly ExactPoly::operator-() const
{
    ExactPoly r;
    for (auto& kv : terms_) r.add(kv.first.first, kv.first.second, -kv.second);
    return r;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o)
{
    for (auto& kv : o.terms_) add(kv.first.first, kv.first.second, kv.second);
    return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o)
{
    for (auto& kv : o.terms_) add(kv.first.first, kv.first.second, -kv.second);
    return *this;
}

ExactPoly operator*(const ExactPoly& x, const ExactPoly& y)
{
    ExactPoly r;
    for (auto& u : x.terms_)
        for (auto& v : y.terms_)
            r.add(u.first.first + v.first.first, u.first.second + v.first.second, u.second * v.second);
    return r;
}

ExactPoly pow(const ExactPoly& x, int k)
{
    if (k < 0) throw DomainError("negative power of an exact polynomial");
    ExactPoly r(1);
    for (int j = 0; j < k; ++j) r = r * x;
    return r;
}

ExactPoly ExactPoly::derivative() const
{
    ExactPoly r;
    for (auto& kv : terms_)
        if (kv.first.first > 0) r.add(kv.first.first - 1, kv.first.second, kv.second * ExactScalar(kv.first.first));
    return r;
}

ExactPoly ExactPoly::compose_omega(const ExactPoly& c) const
{
    int d = degree_omega();
    std::vector<ExactPoly> powers(std::max(d + 1, 1));
    powers[0] = ExactPoly(1);
    for (int k = 1; k <= d; ++k) powers[k] = powers[k - 1] * c;
    ExactPoly r;
    for (auto& kv : terms_) r += monomial(0, kv.first.second, kv.second) * powers[kv.first.first];
    return r;
}

ExactPoly ExactPoly::h_to_one() const
{
    ExactPoly r;
    for (auto& kv : terms_) r.add(kv.first.first, 0, kv.second);
    return r;
}

ExactPoly ExactPoly::h_invert() const
{
    ExactPoly r;
    for (auto& kv : terms_) r.add(kv.first.first, -kv.first.second, kv.second);
    return r;
}

ExactPoly ExactPoly::omega_over_h() const
{
    ExactPoly r;
    for (auto& kv : terms_) r.add(kv.first.first, kv.first.second - kv.first.first, kv.second);
    return r;
}

ExactPoly ExactPoly::conj() const
{
    ExactPoly r;
    for (auto& kv : terms_) r.add(kv.first.first, kv.first.second, kv.second.conj());
    return r;
}

cplx ExactPoly::eval(cplx omega, cplx hbar) const
{
    cplx r = 0;
    for (auto& kv : terms_) {
        if (kv.first.second < 0 && hbar == cplx(0, 0)) throw DomainError("division by zero: h = 0");
        r += kv.second.to_complex() * ipow(omega, kv.first.first) * ipow(hbar, kv.first.second);
    }
    return r;
}

std::string ExactPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "[" << it->second.to_string() << "]";
        if (it->first.first == 1)
            os << "*w";
        else if (it->first.first)
            os << "*w^" << it->first.first;
        if (it->first.second == 1)
            os << "*h";
        else if (it->first.second)
            os << "*h^" << it->first.second;
    }
    return os.str();
}

cplx eval_exact(const ExactPoly& poly, cplx omega, cplx hbar)
{
    return poly.eval(omega, hbar);
}

// ---------------------------------------------------------------- Laurent

ExactPoly FormalLaurent::coeff(int j) const
{
    if (j < lo) return ExactPoly();
    if (j > hi()) throw DomainError("Laurent coefficient outside the known window");
    return c[j - lo];
}

FormalLaurent FormalLaurent::truncate(int new_hi) const
{
    FormalLaurent r = *this;
    if (new_hi < hi()) r.c.resize(std::max(0, new_hi - lo + 1));
    return r;
}

FormalLaurent operator*(const FormalLaurent& x, const FormalLaurent& y)
{
    FormalLaurent r;
    r.lo = x.lo + y.lo;
    int hi = std::min(x.hi() + y.lo, y.hi() + x.lo);
    r.c.assign(std::max(0, hi - r.lo + 1), ExactPoly());
    for (int i = x.lo; i <= x.hi(); ++i)
        for (int j = y.lo; j <= y.hi(); ++j)
            if (i + j <= hi) r.c[i + j - r.lo] += x.c[i - x.lo] * y.c[j - y.lo];
    return r;
}

namespace {

mpq_class factorial(int n)
{
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return mpq_class(f);
}

mpq_class binom_q(int n, int k)
{
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

FormalLaurent unit_laurent(int hi)
{
    FormalLaurent r;
    r.lo = 0;
    r.c.assign(std::max(1, hi + 1), ExactPoly());
    r.c[0] = ExactPoly(1);
    return r;
}

}  // namespace

FormalLaurent sh_inverse_laurent(ShScale scale, int a, int order)
{
    if (a < 1) throw DomainError("sh_inverse_laurent needs a >= 1");
    if (order < -a) throw DomainError("order below the leading power");
    // sh(x) = 2x S(x),  S(x) = sum x^{2k} / (2k+1)!
    const int D = order + a;
    std::vector<mpq_class> S(D + 1, 0), T(D + 1, 0);
    for (int j = 0; j <= D; j += 2) S[j] = mpq_class(1) / factorial(j + 1);
    T[0] = 1;
    for (int j = 1; j <= D; ++j) {
        mpq_class acc = 0;
        for (int i = 1; i <= j; ++i) acc -= S[i] * T[j - i];
        T[j] = acc;
    }
    std::vector<mpq_class> P(D + 1, 0);
    P[0] = 1;
    for (int r = 0; r < a; ++r) {
        std::vector<mpq_class> Q(D + 1, 0);
        for (int i = 0; i <= D; ++i)
            for (int j = 0; i + j <= D; ++j) Q[i + j] += P[i] * T[j];
        P = Q;
    }
    mpq_class two_a = mpq_class(mpz_class(1) << a);
    FormalLaurent L;
    L.lo = -a;
    L.c.resize(D + 1);
    for (int j = 0; j <= D; ++j) {
        int e = j - a;  // power of scale (and of p)
        ExactScalar s(P[j] / two_a, 0, e);
        L.c[j] = ExactPoly::monomial(0, scale == ShScale::pi_h ? e : 0, s);
    }
    return L;
}

ExactPoly q_poly(int m)
{
    if (m < 0) throw DomainError("Q_m needs m >= 0");
    ExactPoly r(1);
    for (int j = 0; j < m; ++j) r = r * (ExactPoly::omega() - ExactPoly(ExactScalar(mpq_class(m - 1 - 2 * j), 1, 1)));
    // (2 pi i)^m m!
    ExactScalar denom(mpq_class(mpz_class(1) << m) * factorial(m), m, m);
    return r * ExactPoly(denom.inverse());
}

ExactPoly bernoulli_exact(int a, int b, int n)
{
    if (a < 0 || b < 0) throw DomainError("a, b must be non-negative");
    if (a + b + n <= 0) return ExactPoly();
    const int K = n - 1;  // wanted power of p in E * A * B
    FormalLaurent A = a ? sh_inverse_laurent(ShScale::pi, a, K + b) : unit_laurent(K + b);
    FormalLaurent Bh = b ? sh_inverse_laurent(ShScale::pi_h, b, K + a) : unit_laurent(K + a);
    FormalLaurent E;
    E.lo = 0;
    int eh = K + a + b;
    E.c.resize(eh + 1);
    // e^{-ip omega} = sum (-i omega)^k p^k / k!
    for (int k = 0; k <= eh; ++k)
        E.c[k] = ExactPoly::monomial(k, 0, ExactScalar(mpq_class(1) / factorial(k), 3 * k, 0));
    FormalLaurent prod = (A * Bh) * E;
    ExactPoly res = prod.coeff(K);
    // i^{n-1} * 2 pi i = 2 pi i^n
    return res * ExactPoly(ExactScalar(mpq_class(2), n, 1));
}

mpq_class bernoulli_number(int n)
{
    if (n < 0) throw DomainError("Bernoulli number index must be >= 0");
    std::vector<mpq_class> B(n + 1);
    B[0] = 1;
    for (int m = 1; m <= n; ++m) {
        mpq_class acc = 0;
        for (int k = 0; k < m; ++k) acc += binom_q(m + 1, k) * B[k];
        B[m] = -acc / (m + 1);
    }
    return B[n];
}

std::vector<mpq_class> bernoulli_classical(int n)
{
    if (n < 0) throw DomainError("Bernoulli polynomial index must be >= 0");
    std::vector<mpq_class> c(n + 1);
    for (int j = 0; j <= n; ++j) c[j] = binom_q(n, n - j) * bernoulli_number(n - j);
    return c;
}

namespace {

void shuffle_rec(int k, int l, int i, int j, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (i == k && j == l) {
        out.push_back(cur);
        return;
    }
    if (i < k) {
        cur.push_back(i + 1);
        shuffle_rec(k, l, i + 1, j, cur, out);
        cur.pop_back();
    }
    if (j < l) {
        cur.push_back(k + j + 1);
        shuffle_rec(k, l, i, j + 1, cur, out);
        cur.pop_back();
    }
}

// 1 / prod_j (x_1 + ... + x_j); false if a partial sum vanishes
bool nested_inverse(const std::vector<mpq_class>& x, mpq_class& out)
{
    mpq_class s = 0, prod = 1;
    for (auto& v : x) {
        s += v;
        if (s == 0) return false;
        prod *= s;
    }
    out = mpq_class(1) / prod;
    return true;
}

}  // namespace

std::vector<std::vector<int>> shuffles(int k, int l)
{
    if (k < 1 || l < 1) throw DomainError("shuffles need k, l >= 1");
    if (k + l > 10) throw CapError("shuffles capped at k + l <= 10");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    shuffle_rec(k, l, 0, 0, cur, out);
    return out;
}

CheckReport verify_a3(int k, int l, int trials, std::uint64_t seed)
{
    if (k < 1 || l < 1 || k + l > 6) throw DomainError("verify_a3 needs k, l >= 1 and k + l <= 6");
    if (trials < 1) throw DomainError("verify_a3 needs trials >= 1");
    std::mt19937_64 rng(seed);
    // raw modulo keeps the stream identical across standard libraries
    auto draw = [&]() {
        long num = 0;
        while (num == 0) num = static_cast<long>(rng() % 201) - 100;
        long den = static_cast<long>(rng() % 100) + 1;
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    };
    auto sh = shuffles(k, l);
    double residual = 0;
    int resamples = 0;
    for (int t = 0; t < trials; ++t) {
        while (true) {
            std::vector<mpq_class> z(k + l);
            for (auto& v : z) v = draw();
            std::vector<mpq_class> x(z.begin(), z.begin() + k), y(z.begin() + k, z.end());
            mpq_class lx, ly;
            bool ok = nested_inverse(x, lx) && nested_inverse(y, ly);
            mpq_class rhs = 0;
            for (auto& perm : sh) {
                if (!ok) break;
                std::vector<mpq_class> w;
                for (int label : perm) w.push_back(z[label - 1]);
                mpq_class term;
                ok = nested_inverse(w, term);
                rhs += term;
            }
            if (!ok) {
                if (++resamples > 100000) throw DomainError("verify_a3: could not find a nondegenerate point");
                continue;
            }
            mpq_class diff = lx * ly - rhs;
            if (diff != 0) {
                residual = std::max(residual, std::max(std::abs(diff.get_d()), 1e-300));
            }
            break;
        }
    }
    nlohmann::json params = {{"k", k}, {"l", l}, {"trials", trials}, {"seed", seed}, {"resamples", resamples}};
    // exact equality: any nonzero difference is reported as at least 1e-300
    return CheckReport("a3", params, residual, std::numeric_limits<double>::denorm_min());
}

}  // namespace qpl
