#ifndef QPOLYLOG_EXACT_HPP
#define QPOLYLOG_EXACT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qpolylog/core.hpp"

namespace qpl {

// Finite sum of q * i^s * pi^t with q rational, s in {0,1}, t any integer.
// i^2 is folded into the sign, so (s,t) keys are unique.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long v) { if (v) terms_[{0, 0}] = v; }
    ExactScalar(const mpq_class& q, int s = 0, int t = 0);

    static ExactScalar i() { return ExactScalar(mpq_class(1), 1, 0); }
    static ExactScalar pi(int t = 1) { return ExactScalar(mpq_class(1), 0, t); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    const std::map<std::pair<int, int>, mpq_class>& terms() const { return terms_; }

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
    friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
    friend bool operator==(const ExactScalar& x, const ExactScalar& y) { return x.terms_ == y.terms_; }

    ExactScalar inverse() const;  // monomials only
    ExactScalar conj() const;     // i -> -i
    cplx to_complex() const;
    std::string to_string() const;

private:
    void add_term(int s, int t, const mpq_class& q);
    std::map<std::pair<int, int>, mpq_class> terms_;
};

// Polynomial in omega with Laurent powers of h (standing for hbar).
class ExactPoly {
public:
    typedef std::pair<int, int> Mono;  // (omega degree, h degree)

    ExactPoly() = default;
    ExactPoly(const ExactScalar& c) { add(0, 0, c); }
    ExactPoly(long v) : ExactPoly(ExactScalar(v)) {}

    static ExactPoly omega() { return monomial(1, 0, 1); }
    static ExactPoly h(int e = 1) { return monomial(0, e, 1); }
    static ExactPoly monomial(int dw, int dh, const ExactScalar& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, ExactScalar>& terms() const { return terms_; }
    int degree_omega() const;  // -1 for the zero polynomial

    ExactPoly operator-() const;
    ExactPoly& operator+=(const ExactPoly& o);
    ExactPoly& operator-=(const ExactPoly& o);
    friend ExactPoly operator+(ExactPoly x, const ExactPoly& y) { return x += y; }
    friend ExactPoly operator-(ExactPoly x, const ExactPoly& y) { return x -= y; }
    friend ExactPoly operator*(const ExactPoly& x, const ExactPoly& y);
    friend bool operator==(const ExactPoly& x, const ExactPoly& y) { return x.terms_ == y.terms_; }

    ExactPoly derivative() const;                  // d/d omega
    ExactPoly compose_omega(const ExactPoly& c) const;  // omega -> c (c may contain omega)
    ExactPoly shift(const ExactPoly& c) const { return compose_omega(omega() + c); }
    ExactPoly h_to_one() const;
    ExactPoly h_invert() const;                    // h -> 1/h
    ExactPoly omega_over_h() const;                // omega -> omega / h
    ExactPoly conj() const;                        // conjugate coefficients, h treated as real
    cplx eval(cplx omega, cplx hbar) const;
    std::string to_string() const;

private:
    void add(int dw, int dh, const ExactScalar& c);
    std::map<Mono, ExactScalar> terms_;
};

ExactPoly pow(const ExactPoly& x, int k);

// Laurent series sum_{j=lo}^{hi} c_j p^j, exact up to and including p^hi.
struct FormalLaurent {
    int lo = 0;
    std::vector<ExactPoly> c;  // c[j - lo]

    int hi() const { return lo + static_cast<int>(c.size()) - 1; }
    ExactPoly coeff(int j) const;
    FormalLaurent truncate(int new_hi) const;
};

FormalLaurent operator*(const FormalLaurent& x, const FormalLaurent& y);

enum class ShScale { pi, pi_h };

// sh^{-a}(scale * p) for p^{-a} .. p^{order}
FormalLaurent sh_inverse_laurent(ShScale scale, int a, int order);

// Q_m(omega) = prod_{j<m} (omega - i pi (m-1-2j)) / ((2 pi i)^m m!)
ExactPoly q_poly(int m);

// i^{n-1} 2 pi i Res_{p=0} e^{-ip omega} sh^{-a}(pi p) sh^{-b}(pi h p) p^{-n}
ExactPoly bernoulli_exact(int a, int b, int n);

// classical Bernoulli polynomial B_n(x), ascending rational coefficients
std::vector<mpq_class> bernoulli_classical(int n);
mpq_class bernoulli_number(int n);  // B_1 = -1/2

// all (k,l)-shuffles; entry [pos] is the original label (1..k+l) placed at pos
std::vector<std::vector<int>> shuffles(int k, int l);

// partial-fraction identity at random rational points, exact arithmetic
CheckReport verify_a3(int k, int l, int trials, std::uint64_t seed = 20240611);

cplx eval_exact(const ExactPoly& poly, cplx omega, cplx hbar);

std::string to_string(const mpq_class& q);

}  // namespace qpl

#endif
