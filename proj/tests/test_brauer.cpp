#include "doctest.h"

#include "pbr/brauer.hpp"
#include "random_objects.hpp"

using namespace pbr;
using namespace pbr::testing;

namespace {

WittF w1(const Series& a) { return WittF(a); }
WittF w2(const Series& a0, const Series& a1) { return WittF(a0, a1); }

} // namespace

TEST_CASE("level-1 symbols")
{
    const FieldContext& k = ratfunc(2);
    Series x = series_theta(k), t = series_t(k), one = series_constant(Residue::one(k));
    BrauerRep c = symbol_class(w1(x * tpow(k, -2)), t);
    CHECK(c.level() == 1);
    CHECK(c.form().beta().identical(x * tpow(k, -2)));
    CHECK(c.form().A.is_exact_zero());

    CHECK(is_zero(symbol_class(w1(x * tpow(k, -5)), one)).status == ZeroStatus::Zero);
    CHECK(is_zero(symbol_class(w1(x * tpow(k, -5)), (x + t) * (x + t))).status == ZeroStatus::Zero);
    CHECK_THROWS_AS(symbol_class(w1(x), series_zero(k)), Error);
}

TEST_CASE("zero tests")
{
    const FieldContext& k = ratfunc(2);
    Series x = series_theta(k), t = series_t(k), one = series_constant(Residue::one(k));
    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i)
        CHECK(is_zero(BrauerRep::from_form(d_F(random_series(k, rng, -6, 4)))).status == ZeroStatus::Zero);
    CHECK(is_zero(symbol_class(w1(x * tpow(k, -2)), t)).status == ZeroStatus::NonZero);
    CHECK(is_zero(symbol_class(w1(one / (x + one)), x)).status == ZeroStatus::Unknown);
    CHECK(is_zero(symbol_class(w1(x), x)).status == ZeroStatus::Zero);
}

TEST_CASE("V and R1")
{
    const FieldContext& k = ratfunc(2);
    Series x = series_theta(k), t = series_t(k), zero = series_zero(k);
    Series a = x * tpow(k, -2);
    BrauerRep top = map_R1(symbol_class(w2(a, zero), t));
    CHECK(top.form().beta().identical(a));

    BrauerRep v = map_V(symbol_class(w1(a), t));
    CHECK(v.level() == 2);
    CHECK(map_R1(v).form().is_zero());
    CHECK(is_zero(map_R1(v)).status == ZeroStatus::Zero);
    CHECK(period(v) == 2);

    BrauerRep v0 = map_V(BrauerRep::from_form(Form1::zero(k)));
    CHECK(v0.symbols().empty());
    CHECK(is_zero(v0).status == ZeroStatus::Zero);
}

TEST_CASE("period and index of level-1 classes")
{
    const FieldContext& k = ratfunc(2);
    Series x = series_theta(k), t = series_t(k);
    IndexReport r = index_report(symbol_class(w1(x * tpow(k, -2)), t));
    CHECK(r.per == 2);
    CHECK(r.ind == 2);
    CHECK(r.normal_form->type == "II");
    CHECK(r.splitting->status == "Verified");
    CHECK(r.splitting->descriptors.front().kind == "totally-ramified");
    CHECK(r.m == 1);
    CHECK(r.separable_degree == 1);
    CHECK(r.inseparable_degree == 2);
    REQUIRE(r.valuation);
    CHECK(r.valuation->e * r.valuation->d == r.valuation->n);
    CHECK(r.valuation->e * r.valuation->e_prime * r.valuation->f * r.valuation->f == r.valuation->n * r.valuation->n);

    IndexReport u = index_report(symbol_class(w1(series_constant(Residue::one(k))), x));
    CHECK(u.per == 2);
    CHECK(u.ind == 2);
    CHECK(u.normal_form->type == "unramified");
    CHECK(u.m == 0);
    CHECK(u.separable_degree == 2);
    CHECK(u.valuation->f == 2);

    IndexReport z = index_report(BrauerRep::from_form(d_F(x * tpow(k, -3))));
    CHECK(z.per == 1);
    CHECK(z.ind == 1);
}

TEST_CASE("level-2 class with mixed residue degrees")
{
    const FieldContext& k = ratfunc(2);
    Series x = series_theta(k), t = series_t(k), one = series_constant(Residue::one(k));
    // R1 = dlog t is tame and nonzero, the second component is wild
    BrauerRep c = symbol_class(w2(one, x * tpow(k, -2)), t);
    IndexReport r = index_report(c);
    CHECK(r.per == 4);
    CHECK(r.ind == 4);
    CHECK(r.m == 1);
    CHECK(r.separable_degree == 2);
    CHECK(r.inseparable_degree == 2);
}

TEST_CASE("R1 after V vanishes on random symbols")
{
    for (int p : {2, 3}) {
        const FieldContext& k = ratfunc(p);
        std::mt19937 rng(100 + p);
        for (int i = 0; i < 30; ++i) {
            BrauerRep x = symbol_class(w1(random_series(k, rng, -5, 2)), random_unit_or_monomial(k, rng));
            CHECK(is_zero(map_R1(map_V(x))).status == ZeroStatus::Zero);
        }
    }
}

TEST_CASE("bi-additivity and the p-th power slot")
{
    for (int p : {2, 3, 5}) {
        const FieldContext& k = ratfunc(p);
        std::mt19937 rng(200 + p);
        for (int i = 0; i < 20; ++i) {
            Series a1 = random_series(k, rng, -5, 2), a2 = random_series(k, rng, -5, 2);
            Series b = random_unit_or_monomial(k, rng);
            BrauerRep diff = symbol_class(w1(a1 + a2), b) - symbol_class(w1(a1), b) - symbol_class(w1(a2), b);
            CHECK(is_zero(diff).status == ZeroStatus::Zero);
            CHECK(is_zero(symbol_class(w1(a1), b.pow(p))).status == ZeroStatus::Zero);
            // multiplicativity in b
            Series c = random_unit_or_monomial(k, rng);
            BrauerRep mult = symbol_class(w1(a1), b * c) - symbol_class(w1(a1), b) - symbol_class(w1(a1), c);
            CHECK(is_zero(mult).status == ZeroStatus::Zero);
        }
    }
}

TEST_CASE("period divides index")
{
    const FieldContext& k = ratfunc(3);
    std::mt19937 rng(31);
    for (int i = 0; i < 20; ++i) {
        IndexReport r = index_report(BrauerRep::from_form(random_form(k, rng, 5)));
        if (r.per && r.ind)
            CHECK(*r.ind % *r.per == 0);
        if (r.valuation) {
            const auto& v = *r.valuation;
            CHECK(v.e * v.d == v.n);
            CHECK(v.e * v.e_prime * v.f * v.f == v.n * v.n);
        }
    }
}
