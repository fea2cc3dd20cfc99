#pragma once

#include "pbr/error.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace pbr {

// Polynomial over F_p in (a0, a1, b0, b1); coefficients in [1, p).
struct WittPoly {
    std::vector<std::pair<std::array<int, 4>, int>> terms;
    std::string to_string() const;
};

// Second components of Witt addition and multiplication for W_2 in characteristic p:
// (a0,a1) + (b0,b1) = (a0+b0, sum1), (a0,a1) * (b0,b1) = (a0 b0, prod1).
struct StructurePolys {
    int p;
    WittPoly sum1;
    WittPoly prod1;
};

// Built once per p by expanding the ghost identities over Z; cached.
const StructurePolys& structure_polynomials(int p);

namespace detail {

template <class C>
C power(const C& x, int e)
{
    C r = x.one_like();
    for (int i = 0; i < e; ++i)
        r = r * x;
    return r;
}

template <class C>
C eval_witt_poly(const WittPoly& poly, const C& a0, const C& a1, const C& b0, const C& b1)
{
    C acc = a0.zero_like();
    const C* vars[4] = {&a0, &a1, &b0, &b1};
    for (const auto& [e, c] : poly.terms) {
        C term = a0.one_like().times_int(c);
        for (int v = 0; v < 4; ++v)
            if (e[static_cast<std::size_t>(v)] > 0)
                term = term * power(*vars[v], e[static_cast<std::size_t>(v)]);
        acc = acc + term;
    }
    return acc;
}

} // namespace detail

// Witt vector of length 1 or 2 over a commutative ring C of characteristic p.
template <class C>
class WittVec {
public:
    explicit WittVec(C a0) { c_.push_back(std::move(a0)); }
    WittVec(C a0, C a1)
    {
        require(a0.same_context(a1), ErrorCode::ContextMismatch, "Witt components from different rings");
        c_.push_back(std::move(a0));
        c_.push_back(std::move(a1));
    }

    int length() const noexcept { return static_cast<int>(c_.size()); }
    const C& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
    int characteristic() const { return c_[0].characteristic(); }

    WittVec operator+(const WittVec& o) const
    {
        check(o);
        if (length() == 1)
            return WittVec(c_[0] + o.c_[0]);
        const auto& sp = structure_polynomials(characteristic());
        return WittVec(c_[0] + o.c_[0], detail::eval_witt_poly(sp.sum1, c_[0], c_[1], o.c_[0], o.c_[1]));
    }

    WittVec operator*(const WittVec& o) const
    {
        check(o);
        if (length() == 1)
            return WittVec(c_[0] * o.c_[0]);
        const auto& sp = structure_polynomials(characteristic());
        return WittVec(c_[0] * o.c_[0], detail::eval_witt_poly(sp.prod1, c_[0], c_[1], o.c_[0], o.c_[1]));
    }

    // -(a0,a1) = (-a0, -a1 - E(a0,-a0)) where E is the carry of sum1.
    WittVec operator-() const
    {
        if (length() == 1)
            return WittVec(-c_[0]);
        const auto& sp = structure_polynomials(characteristic());
        C z = c_[0].zero_like();
        C carry = detail::eval_witt_poly(sp.sum1, c_[0], z, -c_[0], z);
        return WittVec(-c_[0], -c_[1] - carry);
    }

    WittVec operator-(const WittVec& o) const { return *this + (-o); }

    bool is_zero() const
    {
        for (const auto& c : c_)
            if (!c.is_zero())
                return false;
        return true;
    }

    bool operator==(const WittVec& o) const
    {
        if (length() != o.length())
            return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i]))
                return false;
        return true;
    }

    WittVec componentwise_frobenius() const
    {
        if (length() == 1)
            return WittVec(c_[0].frobenius());
        return WittVec(c_[0].frobenius(), c_[1].frobenius());
    }

    template <class Printer>
    std::string to_string(Printer&& print) const
    {
        if (length() == 1)
            return print(c_[0]);
        return "(" + print(c_[0]) + ", " + print(c_[1]) + ")";
    }

private:
    void check(const WittVec& o) const
    {
        require(length() == o.length(), ErrorCode::Precondition, "Witt vectors of different lengths");
        require(c_[0].same_context(o.c_[0]), ErrorCode::ContextMismatch, "Witt vectors over different rings");
    }
    std::vector<C> c_;
};

// V(a) = (0, a).
template <class C>
WittVec<C> witt_V(const WittVec<C>& u)
{
    require(u.length() == 1, ErrorCode::Precondition, "V takes a vector of length 1");
    return WittVec<C>(u[0].zero_like(), u[0]);
}

// R(a0, a1) = a0.
template <class C>
WittVec<C> witt_R(const WittVec<C>& u)
{
    require(u.length() == 2, ErrorCode::Precondition, "R takes a vector of length 2");
    return WittVec<C>(u[0]);
}

// F(a0, a1) = a0^p as a vector of length 1.
template <class C>
WittVec<C> witt_F(const WittVec<C>& u)
{
    require(u.length() == 2, ErrorCode::Precondition, "F takes a vector of length 2");
    return WittVec<C>(u[0].frobenius());
}

// P(u) = (u0^p, u1^p) - u.
template <class C>
WittVec<C> witt_P(const WittVec<C>& u)
{
    return u.componentwise_frobenius() - u;
}

} // namespace pbr
