#include "doctest.h"

#include "pbr/swan.hpp"
#include "random_objects.hpp"

#include <random>

using namespace pbr;
using namespace pbr::testing;

namespace {

struct Vars {
    Series x, t, one;
};

Vars vars(const FieldContext& k)
{
    return {series_theta(k), series_t(k), series_constant(Residue::one(k))};
}

} // namespace

TEST_CASE("pole order")
{
    const FieldContext& k = ratfunc(2);
    auto [x, t, one] = vars(k);
    CHECK(pole_order(Form1::dt(x * tpow(k, -3))) == 2);
    CHECK(pole_order(Form1::dlog_t(x * tpow(k, -3))) == 3);
    CHECK(pole_order(Form1::dtheta(tpow(k, -4))) == 4);
    CHECK(pole_order(Form1::dt(one)) == 0);
}

TEST_CASE("conductor of p-divisible level")
{
    const FieldContext& k = ratfunc(2);
    auto [x, t, one] = vars(k);
    Form1 w = Form1::dlog_t(x * tpow(k, -2));
    SwanReport r = swan_conductor(w);
    CHECK(r.sw == 2);
    CHECK(r.leading.kind == GradedSymbol::Kind::WildDivisibleByP);
    CHECK(*r.leading.value == Residue::theta(k));
    CHECK(r.zero_status == ZeroStatus::NonZero);

    SymbolPresentation nf = normal_form(w);
    CHECK(nf.type == "II");
    CHECK(nf.exponent == 2);
    CHECK(nf.a_string() == "x*t^-2");
    CHECK(nf.b_string() == "t");
    CHECK_FALSE(nf.remainder.has_value());
    CHECK(nf.certificate_status == CertStatus::Valid);
}

TEST_CASE("conductor of prime-to-p level")
{
    const FieldContext& k = ratfunc(2);
    auto [x, t, one] = vars(k);
    Form1 w = Form1::dlog_t(x * tpow(k, -3));
    SwanReport r = swan_conductor(w);
    CHECK(r.sw == 3);
    CHECK(r.leading.kind == GradedSymbol::Kind::WildPrimeToP);
    CHECK(*r.leading.value == Residue::one(k));

    SymbolPresentation nf = normal_form(w);
    CHECK(nf.type == "III");
    CHECK(nf.a_string() == "x*t^-3");
    CHECK(nf.b_string() == "x");
    CHECK(nf.certificate_status == CertStatus::Valid);
    SplitCertificate sc = split_certificate(nf);
    CHECK(sc.status == "Verified");
    CHECK(sc.degree == 2);
    CHECK(sc.descriptors.front().equation == "z^2 = x");
}

TEST_CASE("boundaries are zero")
{
    for (int p : {2, 3, 5}) {
        const FieldContext& k = ratfunc(p);
        Form1 u = Form1::dtheta(tpow(k, -1));
        SwanReport r = swan_conductor(f_minus_i(u));
        CHECK(r.sw == 0);
        CHECK(r.zero_status == ZeroStatus::Zero);
        CHECK(cert_verify(f_minus_i(u), r.reduced, r.certificate) == CertStatus::Valid);
        CHECK(r.reduced.is_zero());

        Series v = series_theta(k) * tpow(k, -7) + tpow(k, 3);
        SwanReport e = swan_conductor(d_F(v));
        CHECK(e.sw == 0);
        CHECK(e.zero_status == ZeroStatus::Zero);
        CHECK(normal_form(d_F(v)).type == "zero");
    }
}

TEST_CASE("tame symbol dlog t")
{
    for (int p : {2, 3, 7}) {
        const FieldContext& k = ratfunc(p);
        Form1 w = Form1::dlog_t(series_constant(Residue::one(k)));
        SwanReport r = swan_conductor(w);
        CHECK(r.sw == 0);
        CHECK(r.zero_status == ZeroStatus::NonZero);
        SymbolPresentation nf = normal_form(w);
        CHECK(nf.type == "I");
        CHECK(nf.a_string() == "1");
        CHECK(nf.b_string() == "t");
        SplitCertificate sc = split_certificate(nf);
        CHECK(sc.status == "Verified");
        CHECK(sc.descriptors.front().equation == "y^" + std::to_string(p) + " = t");
    }
}

TEST_CASE("tame residue in P(k) vanishes")
{
    const FieldContext& k = ratfunc(3);
    Residue x = Residue::theta(k);
    // x^3 - x lies in P(k)
    Form1 w = Form1::dlog_t(series_constant(x.pow(3) - x));
    SwanReport r = swan_conductor(w);
    CHECK(r.zero_status == ZeroStatus::Zero);
    CHECK(r.leading.value->is_zero());
}

TEST_CASE("unramified classes over F_q(x)")
{
    const FieldContext& k = ratfunc(2);
    Residue x = Residue::theta(k), one = Residue::one(k);
    // dlog x: Tr(1) != 0
    SwanReport a = swan_conductor(Form1::dlog_theta(series_constant(one)));
    CHECK(a.zero_status == ZeroStatus::NonZero);
    // x dlog x = dx is exact
    SwanReport b = swan_conductor(Form1::dlog_theta(series_constant(x)));
    CHECK(b.zero_status == ZeroStatus::Zero);
    // 1/(x+1) dlog x is not decided
    SwanReport c = swan_conductor(Form1::dlog_theta(series_constant(one / (x + one))));
    CHECK(c.zero_status == ZeroStatus::Unknown);
    CHECK(normal_form(Form1::dlog_theta(series_constant(one / (x + one)))).type == "unramified");
}

TEST_CASE("finite residue field")
{
    const FieldContext& k = FieldContext::get(2, 2, ResidueKind::Finite, 1);
    Residue g = Residue::from_fq(k, Fq(k.fq(), 2));
    Form1 w = Form1::dlog_t(series_constant(g));
    SwanReport r = swan_conductor(w);
    CHECK(r.zero_status == (g.as_fq().trace() == 0 ? ZeroStatus::Zero : ZeroStatus::NonZero));
    // over a perfect field every wild level reduces
    CHECK(swan_conductor(Form1::dlog_t(series_constant(g) * tpow(k, -3))).sw == 0);
    CHECK(swan_conductor(Form1::dlog_t(series_constant(g) * tpow(k, -4))).sw == 0);
}

TEST_CASE("truncated local residue field")
{
    const FieldContext& k = FieldContext::get(3, 1, ResidueKind::TruncatedLocal, 12);
    Residue one = Residue::one(k);
    SwanReport r = swan_conductor(Form1::dlog_theta(series_constant(one)));
    CHECK(r.zero_status == ZeroStatus::NonZero);
    SwanReport z = swan_conductor(Form1::dtheta(series_constant(one)));
    CHECK(z.zero_status == ZeroStatus::Zero);
}

TEST_CASE("graded symbol agrees with the conductor's leading term")
{
    const FieldContext& k = ratfunc(3);
    Form1 w = Form1::dlog_t(series_theta(k) * tpow(k, -4)) + Form1::dtheta(tpow(k, -4));
    GradedSymbol g = graded_symbol(w, 4);
    CHECK(g.kind == GradedSymbol::Kind::WildPrimeToP);
    // a + b'/j = 1 + 1/4
    CHECK(*g.value == Residue::one(k) + Residue::from_int(k, 4).inverse());
    CHECK(*swan_conductor(w).leading.value == *g.value);
    CHECK_FALSE(graded_symbol(w, 5).is_nonzero());
}

TEST_CASE("insufficient precision is reported")
{
    const FieldContext& k = ratfunc(5);
    Series s = tpow(k, -2).truncated(3);
    CHECK_THROWS_AS(swan_conductor(Form1::dt(s)), Error);
}

TEST_CASE("conductor is a class invariant")
{
    for (int p : {2, 3}) {
        const FieldContext& k = ratfunc(p);
        std::mt19937 rng(17 + p);
        for (int it = 0; it < 40; ++it) {
            Form1 w = random_form(k, rng, 6);
            SwanReport r0 = swan_conductor(w);
            CHECK(cert_verify(w, r0.reduced, r0.certificate) == CertStatus::Valid);

            Form1 moved = w + d_F(random_series(k, rng, -8, 3)) +
                          f_minus_i(Form1{random_series(k, rng, -2, 2), random_series(k, rng, -3, 1)});
            SwanReport r1 = swan_conductor(moved);
            CHECK(r1.sw == r0.sw);
            if (r0.zero_status != ZeroStatus::Unknown && r1.zero_status != ZeroStatus::Unknown)
                CHECK(r1.zero_status == r0.zero_status);

            SymbolPresentation nf = normal_form(w);
            CHECK(nf.certificate_status == CertStatus::Valid);
            if (r0.sw > 0) {
                INFO(w.to_string());
                std::string rest = nf.remainder.has_value() ? nf.remainder->to_string() : "";
                INFO(rest);
                CHECK_FALSE(nf.remainder.has_value());
                CHECK(nf.exponent == r0.sw);
                CHECK(split_certificate(nf).status == "Verified");
            }
        }
    }
}
