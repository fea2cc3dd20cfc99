#include "doctest.h"

#include "pbr/fq.hpp"
#include "pbr/laurent.hpp"
#include "pbr/ratfunc.hpp"

#include <cmath>
#include <random>

using namespace pbr;

TEST_CASE("prime fields behave like integers mod p")
{
    for (int p : {2, 3, 5, 7}) {
        const FqField& F = FqField::get(p, 1);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                CHECK(Fq::from_int(F, a) + Fq::from_int(F, b) == Fq::from_int(F, a + b));
                CHECK(Fq::from_int(F, a) * Fq::from_int(F, b) == Fq::from_int(F, a * b));
            }
        CHECK(Fq::from_int(F, -1) == Fq::from_int(F, p - 1));
    }
}

TEST_CASE("extension field axioms and Frobenius")
{
    for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 8}}) {
        const FqField& F = FqField::get(p, n);
        CHECK(F.q() == static_cast<FqField::Value>(std::pow(p, n) + 0.5));
        std::mt19937 rng(p * 100 + n);
        std::uniform_int_distribution<FqField::Value> pick(0, F.q() - 1);
        for (int it = 0; it < 200; ++it) {
            Fq a(F, pick(rng)), b(F, pick(rng)), c(F, pick(rng));
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
            CHECK(a.pth_root().frobenius() == a);
            CHECK(a.pow(static_cast<long long>(F.q())) == a);
            if (!a.is_zero())
                CHECK(a * a.inverse() == Fq::one(F));
        }
        // trace is F_p-linear and surjective
        int with_trace_one = 0;
        for (FqField::Value v = 0; v < F.q(); ++v)
            with_trace_one += Fq(F, v).trace() == 1;
        CHECK(with_trace_one == static_cast<int>(F.q() / p));
        CHECK(Fq(F, F.trace_one()).trace() == 1);
    }
}

TEST_CASE("generator is primitive")
{
    const FqField& F = FqField::get(3, 2);
    Fq g(F, F.generator());
    int order = 1;
    for (Fq x = g; !(x == Fq::one(F)); x *= g)
        ++order;
    CHECK(order == 8);
}

TEST_CASE("element printing")
{
    const FqField& F4 = FqField::get(2, 2);
    CHECK(Fq(F4, 0).to_string() == "0");
    CHECK(Fq(F4, 1).to_string() == "1");
    CHECK(Fq(F4, 2).to_string() == "w");
    CHECK(Fq(F4, 3).to_string() == "1+w");
    const FqField& F9 = FqField::get(3, 2);
    CHECK(Fq(F9, 2 + 2 * 3).to_string() == "2+2*w");
}

TEST_CASE("polynomial division and gcd")
{
    const FqField& F = FqField::get(3, 1);
    auto P = [&](std::vector<FqField::Value> c) { return FqPoly(F, c); };
    FqPoly a = P({1, 0, 1});    // 1 + x^2
    FqPoly b = P({2, 1});       // x - 1
    FqPoly q(F), r(F);
    (a * b + P({1})).divmod(b, q, r);
    CHECK(q == a);
    CHECK(r == P({1}));
    CHECK(gcd(a * b, b * b) == b.monic());
    CHECK(P({0, 0, 0, 1}).derivative().is_zero());
    CHECK(P({1, 1}).frobenius() == P({1, 1}).pow(3));
}

TEST_CASE("rational functions stay reduced")
{
    const FqField& F = FqField::get(2, 1);
    RatFunc x = RatFunc::variable(F);
    RatFunc one = RatFunc::constant(Fq::one(F));
    RatFunc f = (x * x + x) / (x + one);
    CHECK(f == x);
    RatFunc g = one / (x + one);
    CHECK(g.to_string("x") == "1/(1+x)");
    CHECK((g * (x + one)) == one);
    // quotient rule in characteristic 3
    const FqField& F3 = FqField::get(3, 1);
    RatFunc y = RatFunc::variable(F3);
    RatFunc inv = RatFunc::constant(Fq::one(F3)) / y;
    CHECK(inv.derivative() == RatFunc::constant(Fq::from_int(F3, 2)) / (y * y));
}

TEST_CASE("Laurent series arithmetic and precision")
{
    const FqField& F = FqField::get(2, 1);
    using S = LaurentSeries<Fq>;
    Fq one = Fq::one(F), zero = Fq::zero(F);
    S t = S::monomial(one, 1, 40);
    S tinv = S::monomial(one, -1, 40);
    S f = t + t * t;
    CHECK((f * tinv).compare(S::constant(one, 40) + t) == Equality3::Equal);

    S u = S::constant(one, 40) - t;
    S g = u.inverse();
    CHECK(g.horizon() == 40);
    for (int k = 0; k < 40; ++k)
        CHECK(g.coeff(k) == one);
    CHECK((g * u).compare(S::constant(one, 40)) == Equality3::Indistinguishable);
    CHECK_THROWS_AS(g.coeff(40), Error);

    S h = S::monomial(one, -3, 40) + S::monomial(one, 2, 40);
    CHECK(h.valuation() == -3);

    // horizon rule: (N1,N2) with valuations (v1,v2) -> min(N1+v2, N2+v1)
    S a = (t.shifted(1) + t.shifted(3)).truncated(10);  // v=2, N=10
    S b = (tinv + t).truncated(5);                      // v=-1, N=5
    CHECK((a * b).horizon() == std::min(10 - 1, 5 + 2));

    S z = S::zero_to_precision(zero, 7, 40);
    CHECK(z.is_zero());
    CHECK_FALSE(z.is_exact_zero());
    CHECK(z.compare(S(zero, 40)) == Equality3::Indistinguishable);
    CHECK(t.compare(S(zero, 40)) == Equality3::Distinct);
    CHECK((t + S::constant(one, 40)).frobenius().compare(t * t + S::constant(one, 40)) == Equality3::Equal);
    CHECK(h.to_string("t") == "t^-3+t^2");
    CHECK(g.truncated(3).to_string("t") == "1+t+t^2+O(t^3)");
}

TEST_CASE("ultrametric inequality on random series")
{
    const FqField& F = FqField::get(3, 1);
    using S = LaurentSeries<Fq>;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(0, 2), v(-5, 5);
    for (int it = 0; it < 200; ++it) {
        auto rnd = [&] {
            S s(Fq::zero(F), 40);
            int start = v(rng);
            s = s + S::monomial(Fq::from_int(F, 1 + c(rng) % 2), start, 40);
            for (int k = 1; k < 6; ++k)
                s = s + S::monomial(Fq::from_int(F, c(rng)), start + k, 40);
            return s;
        };
        S a = rnd(), b = rnd();
        S sum = a + b;
        if (!sum.is_zero())
            CHECK(sum.valuation() >= std::min(a.valuation(), b.valuation()));
        if (a.valuation() != b.valuation())
            CHECK(sum.valuation() == std::min(a.valuation(), b.valuation()));
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
    }
}
