#pragma once

#include "pbr/fq.hpp"

#include <string>

namespace pbr {

// Element of F_q(x) in lowest terms with monic denominator.
class RatFunc {
public:
    explicit RatFunc(const FqField& f) : num_(f), den_(FqPoly::constant(Fq::one(f))) {}
    RatFunc(FqPoly num, FqPoly den);
    static RatFunc from_poly(FqPoly p);
    static RatFunc constant(const Fq& c) { return from_poly(FqPoly::constant(c)); }
    static RatFunc variable(const FqField& f) { return from_poly(FqPoly::monomial(Fq::one(f), 1)); }

    const FqField& field() const { return num_.field(); }
    const FqPoly& num() const noexcept { return num_; }
    const FqPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc scaled(const Fq& c) const;
    RatFunc frobenius() const;
    RatFunc derivative() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string to_string(const std::string& var) const;
    bool is_single_term() const { return is_polynomial() && num_.is_single_term(); }

private:
    struct Reduced {};
    RatFunc(FqPoly num, FqPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    FqPoly num_;
    FqPoly den_;
};

} // namespace pbr
