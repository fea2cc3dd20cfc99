#include "doctest.h"

#include "pbr/surface_local.hpp"

#include <algorithm>

using namespace pbr;

namespace {

struct Ring {
    const FqField& F;
    BivarPoly mono(long c, int i, int j) const { return BivarPoly::monomial(Fq::from_int(F, c), i, j); }
};

BivariateClass cls(int p) { return BivariateClass{p, 1, {}, {}, 16, 32}; }

bool has(const LocusReport& r, Divisor d) { return std::find(r.locus.begin(), r.locus.end(), d) != r.locus.end(); }

} // namespace

TEST_CASE("bivariate polynomials")
{
    Ring R{FqField::get(3, 1)};
    BivarPoly u = R.mono(1, 0, 0) + R.mono(1, 1, 0);
    CHECK((u * u).to_string() == "1+2*pi+pi^2");
    BivarPoly g = R.mono(2, 1, 1) * u;
    auto s = g.unit_monomial_split();
    REQUIRE(s);
    CHECK(s->a == 1);
    CHECK(s->b == 1);
    CHECK_FALSE((R.mono(1, 1, 0) + R.mono(1, 0, 1)).unit_monomial_split());
    CHECK(R.mono(2, 1, -2).pow(-1).to_string() == "2*pi^-1*t^2");
}

TEST_CASE("ramification locus")
{
    Ring R{FqField::get(3, 1)};
    BivariateClass a = cls(3);
    a.add_symbol(R.mono(1, 1, -2), R.mono(1, 0, 1));
    LocusReport la = ramification_locus(a);
    CHECK(has(la, Divisor::T));
    CHECK_FALSE(has(la, Divisor::Pi));
    CHECK(la.along.at(Divisor::T).sw == 2);

    BivariateClass b = cls(3);
    b.add_symbol(R.mono(1, 0, 0), R.mono(1, 1, 1));
    LocusReport lb = ramification_locus(b);
    CHECK(has(lb, Divisor::T));
    CHECK(has(lb, Divisor::Pi));

    CHECK(ramification_locus(cls(3)).locus.empty());
}

TEST_CASE("residue along a divisor")
{
    Ring R{FqField::get(3, 1)};
    BivariateClass a = cls(3);
    a.add_symbol(R.mono(1, 1, -2), R.mono(1, 0, 1));
    Form1 along_t = delta1_residue(a, Divisor::T);
    CHECK(along_t.to_string() == "pi*t^-2*dlog(t)");
    CHECK(swan_conductor(delta1_residue(a, Divisor::Pi)).zero_status == ZeroStatus::Zero);
    CHECK(delta1_residue(cls(3), Divisor::T).is_zero());
}

TEST_CASE("reduction to a pi-symbol")
{
    Ring R{FqField::get(3, 1)};
    BivariateClass a = cls(3);
    a.add_symbol(R.mono(1, 1, -2), R.mono(1, 0, 1));
    PiSymbolReport r = reduce_to_pi_symbol(a);
    CHECK(r.sw == 2);
    CHECK(r.h_string == "2*pi*t^-2");
    CHECK_FALSE(r.obstruction.has_value());
    CHECK(r.certificate_status == CertStatus::Valid);

    // [1/t, t) is exact
    BivariateClass z = cls(3);
    z.add_symbol(R.mono(1, 0, -1), R.mono(1, 0, 1));
    PiSymbolReport rz = reduce_to_pi_symbol(z);
    CHECK(rz.h_string == "0");
    CHECK_FALSE(rz.obstruction.has_value());

    BivariateClass o = cls(3);
    o.add_symbol(R.mono(1, 0, 0), R.mono(1, 0, 1));
    PiSymbolReport ro = reduce_to_pi_symbol(o);
    REQUIRE(ro.obstruction.has_value());
    CHECK(ro.obstruction->to_string() == "1");
    CHECK(ro.certificate_status == CertStatus::Valid);
}

TEST_CASE("reduction preconditions")
{
    Ring R{FqField::get(3, 1)};
    BivariateClass wild = cls(3);
    wild.add_symbol(R.mono(1, 1, -4), R.mono(1, 0, 1));
    CHECK_THROWS_AS(reduce_to_pi_symbol(wild), Error);
    try {
        reduce_to_pi_symbol(wild);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Precondition);
    }

    BivariateClass vertical = cls(3);
    vertical.add_symbol(R.mono(1, -1, 1), R.mono(1, 1, 0));
    CHECK_THROWS_AS(reduce_to_pi_symbol(vertical), Error);
}

TEST_CASE("conductor agrees across residue models")
{
    // c x^i t^-j dlog t and c x^i t^-j dx over F_p(x) versus F_p((s))
    for (int p : {2, 3}) {
        const FieldContext& kr = FieldContext::get(p, 1, ResidueKind::RationalFunction, 1);
        const FieldContext& kl = FieldContext::get(p, 1, ResidueKind::TruncatedLocal, 20);
        for (int i = 0; i < 4; ++i)
            for (int j = 1; j < 8; ++j)
                for (int which = 0; which < 2; ++which) {
                    auto build = [&](const FieldContext& k) {
                        Series c = series_monomial(Residue::theta(k).pow(i), -j);
                        return which == 0 ? Form1::dlog_t(c) : Form1::dtheta(c);
                    };
                    SwanReport a = swan_conductor(build(kr));
                    SwanReport b = swan_conductor(build(kl));
                    CHECK(a.sw == b.sw);
                }
    }
}
