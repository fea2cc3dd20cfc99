#include "pbr/ratfunc.hpp"

#include "pbr/error.hpp"

namespace pbr {

RatFunc::RatFunc(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den))
{
    require(!den_.is_zero(), ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = FqPoly::constant(Fq::one(num_.field()));
        return;
    }
    FqPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Fq lead = den_.leading();
    if (!lead.is_one()) {
        Fq li = lead.inverse();
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

RatFunc RatFunc::from_poly(FqPoly p)
{
    FqPoly one = FqPoly::constant(Fq::one(p.field()));
    return RatFunc(std::move(p), std::move(one), Reduced{});
}

RatFunc RatFunc::operator+(const RatFunc& o) const
{
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    if (den_ == o.den_)
        return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const
{
    if (is_zero() || o.is_zero())
        return RatFunc(field());
    if (is_polynomial() && o.is_polynomial())
        return from_poly(num_ * o.num_);
    // Cross-cancel first to keep degrees down.
    FqPoly g1 = gcd(num_, o.den_);
    FqPoly g2 = gcd(o.num_, den_);
    FqPoly n = (num_ / g1) * (o.num_ / g2);
    FqPoly d = (den_ / g2) * (o.den_ / g1);
    Fq lead = d.leading();
    if (!lead.is_one()) {
        n = n.scaled(lead.inverse());
        d = d.scaled(lead.inverse());
    }
    return RatFunc(std::move(n), std::move(d), Reduced{});
}

RatFunc RatFunc::inverse() const
{
    require(!is_zero(), ErrorCode::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::scaled(const Fq& c) const
{
    if (c.is_zero())
        return RatFunc(field());
    return RatFunc(num_.scaled(c), den_, Reduced{});
}

RatFunc RatFunc::frobenius() const { return RatFunc(num_.frobenius(), den_.frobenius(), Reduced{}); }

RatFunc RatFunc::derivative() const
{
    if (is_polynomial())
        return from_poly(num_.derivative());
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RatFunc::to_string(const std::string& var) const
{
    if (is_polynomial())
        return num_.to_string(var);
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    if (!num_.is_single_term())
        n = "(" + n + ")";
    if (!den_.is_single_term())
        d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace pbr
