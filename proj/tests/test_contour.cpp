#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpolylog/contour.hpp"
#include "qpolylog/exact.hpp"
#include "qpolylog/series.hpp"

using namespace qpl;

namespace {
const double pi = std::numbers::pi;
const cplx I(0, 1);
}

TEST_CASE("contour height")
{
    CHECK(default_epsilon(1.0) == doctest::Approx(0.5));
    CHECK(default_epsilon(2.0) == doctest::Approx(0.25));
    CHECK(default_epsilon(0.5) == doctest::Approx(0.5));
    CHECK(default_epsilon(HbarValue(cplx(1, 1))) == doctest::Approx(0.25));
}

TEST_CASE("kernel")
{
    KernelParams k{1, 1, 2.0, cplx(-1, 0)};
    cplx p(0.3, 0.2);
    cplx want = std::exp(-I * p * cplx(-1, 0)) / (sh(pi * p) * sh(2.0 * pi * p));
    CHECK(std::abs(kernel(k, p) - want) < 1e-14 * std::abs(want));
}

TEST_CASE("depth one, b = 0: elementary values")
{
    cplx e = std::exp(-1.0);
    EvalResult r = quad_F(MultiIndex::one(1, 0, 0), {-1.0}, 1.0);
    CHECK(std::abs(r.value + e / (1.0 + e)) < 1e-12);
    CHECK(std::abs(r.value + 0.26894142137) < 1e-11);
    CHECK(r.backend == Backend::contour);
    CHECK(r.diag.nodes > 0);
    CHECK(r.err_estimate < 1e-10);

    cplx f201 = quad_F(MultiIndex::one(2, 0, 1), {-1.0}, 1.0).value;
    CHECK(std::abs(f201 - cplx(0, 0.13805568200333)) < 1e-12);
    // F_{1,0,n}(omega) = Li_n(-e^omega)
    cplx w(-0.7, 0.9);
    CHECK(std::abs(quad_F(MultiIndex::one(1, 0, 2), {w}, 1.0).value - classical_polylog(2, -std::exp(w)).value) <
          1e-11);
}

TEST_CASE("closed form against quadrature")
{
    for (int a = 1; a <= 3; ++a)
        for (int n = 0; n <= 2; ++n) {
            cplx w(-1.3, 0.4);
            cplx q = quad_F(MultiIndex::one(a, 0, n), {w}, 1.0).value;
            CHECK(std::abs(q - depth1_closed_form(a, n, w).value) < 1e-10);
        }
}

TEST_CASE("F does not depend on hbar when b = 0")
{
    cplx w(-1.0, 0.3);
    cplx x = quad_F(MultiIndex::one(2, 0, 1), {w}, 1.0).value;
    cplx y = quad_F(MultiIndex::one(2, 0, 1), {w}, 2.7).value;
    CHECK(std::abs(x - y) < 1e-11);
}

TEST_CASE("Li integral against the nested series")
{
    CVec w{cplx(-2, 1), cplx(-1, -2)};
    cplx z1 = std::exp(w[0]), z2 = -std::exp(w[1]);
    CHECK(std::abs(quad_Li({2, 1}, w).value - multiple_polylog({2, 1}, {z1, z2}).value) < 1e-12);
    CHECK_THROWS_AS(quad_Li({1}, {cplx(0.5, 0)}), DomainError);
    CHECK_THROWS_AS(quad_Li({1}, {cplx(-1, 3.2)}), DomainError);
    // cumulative strip: each |Im w| < pi but the sum leaves it
    CHECK_THROWS_AS(quad_Li({1, 1}, {cplx(-1, 2.0), cplx(-1, 2.0)}), DomainError);
}

TEST_CASE("I-variant against companion series")
{
    HbarValue h(std::sqrt(2.0));
    cplx q = quad_I(MultiIndex::basic({1, 1}), {-2.0, -1.0}, h).value;
    CHECK(std::abs(q + 0.00415795795029463) < 1e-10);
    cplx q1 = quad_I(MultiIndex::basic({1}), {-1.0}, h).value;
    CHECK(std::abs(q1 - companion_sum_I({1}, {-1.0}, h).value) < 1e-10);
}

TEST_CASE("strip and pole errors")
{
    CHECK_THROWS_AS(quad_F(MultiIndex::one(1, 1, 1), {cplx(0, 20)}, 1.0), DomainError);
    CHECK_THROWS_AS(quad_F(MultiIndex::one(1, 1, 1), {-1.0}, HbarValue(cplx(-1, 0))), DomainError);
    QuadratureSpec bad;
    bad.epsilon = 1.0;  // on the pole p = i of sh(pi p)
    CHECK_THROWS_AS(quad_F(MultiIndex::one(1, 1, 1), {-1.0}, 1.0, bad), DomainError);
    CHECK_THROWS_AS(kernel(KernelParams{1, 1, 1.0, -1.0}, 0.0), PoleError);
    CHECK_THROWS_AS(kernel(KernelParams{1, 0, 1.0, -1.0}, cplx(0, 1)), PoleError);
}

TEST_CASE("refinement cap")
{
    QuadratureSpec s;
    s.max_refine = 0;  // nothing to compare the first level against
    CHECK_THROWS_AS(quad_F(MultiIndex::one(1, 1, 1), {cplx(-1, 0.5)}, 1.3, s), ConvergenceError);
}

TEST_CASE("numeric Q polynomials match the exact ones")
{
    for (int m = 0; m <= 6; ++m) {
        auto c = q_poly_numeric(m);
        cplx w(0.4, -0.3);
        CHECK(std::abs(poly_eval(c, w) - q_poly(m).eval(w, 1.0)) < 1e-14);
        auto d = poly_derivative(c);
        CHECK(std::abs(poly_eval(d, w) - q_poly(m).derivative().eval(w, 1.0)) < 1e-14);
    }
}

TEST_CASE("residue by circle quadrature")
{
    cplx w(0.3, 0.2);
    cplx circ = quad_bernoulli_circle(1, 1, 2, w, 1.4).value;
    CHECK(std::abs(circ - bernoulli_exact(1, 1, 2).eval(w, 1.4)) < 1e-12);
    CHECK_THROWS_AS(quad_bernoulli_circle(1, 1, 2, w, 1.4, 0.9), DomainError);
}

TEST_CASE("zeta_hbar and the generating series")
{
    cplx z = quad_zeta_hbar({2}, 1.7).value;
    CHECK(std::abs(z - quad_F(MultiIndex::one(1, 1, 1), {0.0}, 1.7).value) < 1e-10);
    cplx g = gen_series_depth1(-1.0, 0.0, 0.0, 0.0, 1.3).value;
    CHECK(std::abs(g - quad_F(MultiIndex::one(1, 1, 1), {-1.0}, 1.3).value) < 1e-10);
    CHECK_THROWS_AS(gen_series_depth1(-1.0, 0.0, 0.0, 0.5, 1.3), DomainError);
    CHECK_THROWS_AS(gen_series_depth1(-1.0, 0.7, 0.0, 0.0, 1.3), DomainError);
}

TEST_CASE("fast decay to the left")
{
    cplx v = quad_F(MultiIndex::one(1, 1, 1), {-30.0}, 1.3).value;
    CHECK(std::abs(v) < 1e-10);
}
