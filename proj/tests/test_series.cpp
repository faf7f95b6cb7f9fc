#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpolylog/series.hpp"

using namespace qpl;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("riemann zeta at integers")
{
    CHECK(zeta_int(2) == doctest::Approx(pi * pi / 6).epsilon(1e-15));
    CHECK(zeta_int(3) == doctest::Approx(1.2020569031595942).epsilon(1e-15));
    CHECK(zeta_int(0) == doctest::Approx(-0.5));
    CHECK(zeta_int(-1) == doctest::Approx(-1.0 / 12));
    CHECK(zeta_int(-2) == 0.0);
    CHECK(zeta_int(20) == doctest::Approx(1.0000009539620338).epsilon(1e-15));
}

TEST_CASE("classical polylog reference values")
{
    // mpmath.polylog
    CHECK(std::abs(classical_polylog(2, 0.9).value - 1.29971472300496) < 1e-13);
    CHECK(std::abs(classical_polylog(3, 0.5).value - 0.5372131936080402) < 1e-14);
    CHECK(std::abs(classical_polylog(2, -1.0).value + pi * pi / 12) < 1e-12);
    CHECK(std::abs(classical_polylog(1, 0.3).value + std::log(0.7)) < 1e-15);
    cplx z(0.3, 0.4);
    CHECK(std::abs(classical_polylog(-1, z).value - z / ((1.0 - z) * (1.0 - z))) < 1e-14);
    CHECK(std::abs(classical_polylog(0, z).value - z / (1.0 - z)) < 1e-14);
    CHECK(classical_polylog(3, 0.0).value == cplx(0, 0));
}

TEST_CASE("polylog on the unit circle and near one")
{
    CHECK(std::abs(classical_polylog(2, 1.0).value - pi * pi / 6) < 1e-10);
    cplx z = std::exp(cplx(0, pi / 3));
    // Re Li_2(e^{i t}) = pi^2/6 - t(2 pi - t)/4
    double t = pi / 3;
    CHECK(std::abs(classical_polylog(2, z).value.real() - (pi * pi / 6 - t * (2 * pi - t) / 4)) < 1e-10);
    CHECK(std::abs(classical_polylog(2, 0.999).value - 1.6370226052761177) < 1e-12);
}

TEST_CASE("multiple polylog reference values")
{
    CHECK(std::abs(multiple_polylog({1, 1}, {0.3, 0.4}).value - 0.0347270885637191) < 1e-14);
    // depth one reduces to the classical function
    CHECK(std::abs(multiple_polylog({2}, {0.7}).value - classical_polylog(2, 0.7).value) < 1e-14);
}

TEST_CASE("stuffle product checks the nested sum independently")
{
    // Li_a(x) Li_b(y) = Li_{a,b}(x, y) + Li_{b,a}(y, x) + Li_{a+b}(xy)
    cplx x(0.3, 0.1), y(-0.4, 0.2);
    cplx lhs = classical_polylog(2, x).value * classical_polylog(3, y).value;
    cplx rhs = multiple_polylog({2, 3}, {x, y}).value + multiple_polylog({3, 2}, {y, x}).value +
               classical_polylog(5, x * y).value;
    CHECK(std::abs(lhs - rhs) < 1e-13);
}

TEST_CASE("octant and simplex forms agree")
{
    CVec x{cplx(0.3, 0.2), cplx(-0.5, 0.1)};
    CVec z{x[0] / x[1], x[1]};
    CHECK(std::abs(octant_polylog({2, 1}, x).value - multiple_polylog({2, 1}, z).value) < 1e-13);
    CVec path{1.0, 2.0, 0.5};
    CVec r = polylog_from_iterated_args({1, 1}, path);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - 2.0) < 1e-15);
    CHECK(std::abs(r[1] - 0.25) < 1e-15);
}

TEST_CASE("q bracket and q-polylog")
{
    cplx q(0.4, 0.1);
    CHECK(std::abs(q_bracket(2, q) - (q * q - 1.0 / (q * q))) < 1e-14);
    CHECK(std::abs(q_multiple_polylog({1, 1}, {1, 1}, {0.2, 0.3}, 0.4).value - 0.00749438406620) < 1e-13);
    // q -> 1/q flips every bracket, hence Li_{a,n} by (-1)^{|a|}
    CHECK(std::abs(q_bracket(3, 1.0 / q) + q_bracket(3, q)) < 1e-13);
    CHECK_THROWS_AS(q_multiple_polylog({1}, {1}, {0.2}, 1.5), DomainError);
}

TEST_CASE("pochhammer psi")
{
    CHECK(std::abs(pochhammer_psi(0, 0.3, 0.5).value - 1.3) < 1e-15);
    // Psi_1 = 1 / prod (1 + q^{2j+1} x)
    cplx q = 0.5, x = 0.2, prod = 1.0;
    for (int j = 0; j < 60; ++j) prod *= 1.0 + std::pow(q, 2 * j + 1) * x;
    CHECK(std::abs(pochhammer_psi(1, x, q).value - 1.0 / prod) < 1e-14);
}

TEST_CASE("truncated series and q-calculus operators")
{
    TruncatedSeries li = polylog_series(2, 5);
    CHECK(li.degree() == 5);
    CHECK(std::abs(li.c[3] - 1.0 / 9) < 1e-16);
    CHECK(std::abs(li(0.1) - (0.1 + 0.01 / 4 + 0.001 / 9 + 1e-4 / 16 + 1e-5 / 25)) < 1e-16);

    cplx q(0.5, 0.2);
    TruncatedSeries minus = q_integral(0, li, q);
    CHECK((minus.c + li.c).cwiseAbs().maxCoeff() < 1e-16);
    TruncatedSeries d = q_difference(q_integral(1, li, q), q);
    CHECK((d.c + li.c).cwiseAbs().maxCoeff() < 1e-14);
    TruncatedSeries one = q_integral(1, li, q);
    CHECK(std::abs(one.c[2] + li.c[2] / q_bracket(2, q)) < 1e-14);
}

TEST_CASE("companion series enumerate all sign choices")
{
    auto eps = EpsilonVector::all(2, std::sqrt(2.0));
    CHECK(eps.size() == 4);
    Accumulator acc;
    for (auto& e : eps) acc.add(companion_series(e, {1, 1}, {1, 1}, {-2.0, -1.0}).value);
    EvalResult sum = companion_sum_I({1, 1}, {-2.0, -1.0}, std::sqrt(2.0));
    CHECK(std::abs(acc.sum() - sum.value) < 1e-14);
    CHECK(std::abs(sum.value + 0.00415795795029463) < 1e-12);
}

TEST_CASE("companion warns near small-denominator rationals")
{
    EvalResult r = companion_sum_I({1}, {-1.0}, 1.5);
    CHECK_FALSE(r.diag.warnings.empty());
    EvalResult s = companion_sum_I({1}, {-1.0}, std::sqrt(2.0));
    CHECK(s.diag.warnings.empty());
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(multiple_polylog({1}, {1.5}), DomainError);
    CHECK_THROWS_AS(octant_polylog({1, 1}, {0.5, 1.2}), DomainError);
    CHECK_THROWS_AS(classical_polylog(2, cplx(NAN, 0)), DomainError);
}
