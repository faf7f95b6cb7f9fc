#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "qpolylog/contour.hpp"
#include "qpolylog/identities.hpp"
#include "qpolylog/series.hpp"

using namespace qpl;

TEST_CASE("hbar = 1 formula reduces to the closed form when b = 0")
{
    cplx w(-1.2, 0.3);
    for (int a = 1; a <= 3; ++a)
        for (int n = 0; n <= 2; ++n)
            CHECK(std::abs(h1_formula(MultiIndex::one(a, 0, n), {w}) - depth1_closed_form(a, n, w).value) < 1e-12);
}

TEST_CASE("hbar = 1 formula: the bare product term is not enough")
{
    MultiIndex idx = MultiIndex::one(1, 1, 2);
    cplx full = h1_formula(idx, {-1.0});
    cplx bare = h1_product_term(idx, {-1.0});
    CHECK(std::abs(full - bare) > 1e-3);
    // for a + b = 1 there is nothing to correct
    MultiIndex one = MultiIndex::one(1, 0, 2);
    CHECK(std::abs(h1_formula(one, {-1.0}) - h1_product_term(one, {-1.0})) < 1e-15);
}

TEST_CASE("distribution with r = s = 1 is the identity")
{
    MultiIndex idx = MultiIndex::one(1, 1, 1);
    cplx a = distribution_rhs(idx, {-2.0}, 1.2, 1, 1);
    cplx b = quad_F(idx, {-2.0}, 1.2).value;
    CHECK(std::abs(a - b) < 1e-13);
}

TEST_CASE("single instances")
{
    CHECK(li_instance({2}, {cplx(-1, 0.5)}, 1e-9).pass);
    CHECK(difference_instance(MultiIndex::one(2, 1, 1), {-1.0}, 1.2, 0, false, 1e-8).pass);
    CHECK(difference_instance(MultiIndex::one(1, 2, 1), {-1.0}, 1.2, 0, true, 1e-8).pass);
    CHECK(negation_instance(MultiIndex::one(1, 1, 2), cplx(-0.8, 0.1), 1.4, 1e-8).pass);
    CHECK(modular_instance(MultiIndex::one(1, 2, 1), {-1.0}, 1.6, 1e-8).pass);
    CHECK(companion_instance({1}, {-1.0}, std::sqrt(2.0), 1e-7).pass);
    CHECK(h1_instance(MultiIndex::one(2, 1, 1), {-1.0}, 1e-8).pass);
}

TEST_CASE("instances report domain problems instead of throwing")
{
    // rational hbar needs coprime r, s
    CheckReport r = rational_hbar_instance(MultiIndex::one(1, 1, 1), {-2.0}, 2, 4, 1e-6);
    CHECK_FALSE(r.pass);
    CHECK(r.params.contains("error"));
    CheckReport d = li_instance({1}, {cplx(0.5, 0)}, 1e-8);
    CHECK_FALSE(d.pass);
    CHECK(std::isnan(d.residual));
}

TEST_CASE("a wrong sign makes the negation check fail")
{
    // the report records the residual of the +B variant too; it must be large
    CheckReport r = negation_instance(MultiIndex::one(1, 1, 1), -1.0, 1.3, 1e-8);
    CHECK(r.pass);
    CHECK(r.params["plus_B_residual"].get<double>() > 1e-2);
}

TEST_CASE("registry")
{
    auto names = identity_names();
    CHECK(names.size() == 18);
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK_THROWS_AS(run_identity("pentagon"), UsageError);
    Reports r = run_identity("a3");
    CHECK(r.size() == 9);
    for (auto& x : r) CHECK(x.residual == 0.0);
}

TEST_CASE("report order does not depend on input order")
{
    Reports a = run_identity("bernoulli");
    Reports b = a;
    std::reverse(b.begin(), b.end());
    sort_reports(b);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].identity_name == b[i].identity_name);
        CHECK(canonical_dump(a[i].params) == canonical_dump(b[i].params));
    }
}

TEST_CASE("the seed drives the random grid")
{
    SuiteOptions o;
    o.points = 2;
    Reports a = check_series_vs_contour(o);
    Reports b = check_series_vs_contour(o);
    o.seed = 7;
    Reports c = check_series_vs_contour(o);
    CHECK(canonical_dump(a[0].params) == canonical_dump(b[0].params));
    CHECK(canonical_dump(a[0].params) != canonical_dump(c[0].params));
}

TEST_CASE("conventions text matches the document")
{
    std::ifstream in(CONVENTIONS_PATH);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == std::string(conventions_text()));
}
