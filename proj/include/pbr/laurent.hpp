#pragma once

#include "pbr/error.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace pbr {

enum class Equality3 { Equal, Distinct, Indistinguishable };

inline const char* to_string(Equality3 e)
{
    switch (e) {
    case Equality3::Equal:
        return "Equal";
    case Equality3::Distinct:
        return "Distinct";
    default:
        return "Indistinguishable";
    }
}

// Truncated Laurent series sum c_k t^k over a coefficient ring C of characteristic p.
//
// A series is either exact (a Laurent polynomial, horizon() == kExact) or known modulo
// t^horizon(). Coefficients are stored on [start, start + size) with both ends nonzero;
// everything else below the horizon is zero. The zero-to-precision element O(t^N) is
// distinct from the exact zero.
//
// C must provide: zero_like(), one_like(), is_zero(), + - * and unary -, inverse(),
// frobenius(), times_int(k), same_context(), characteristic(), to_string(), is_single_term().
//
// default_prec() is the relative precision used when an exact operand has an infinite
// expansion (inversion of a non-monomial); it propagates as the minimum.
template <class C>
class LaurentSeries {
public:
    static constexpr int kExact = std::numeric_limits<int>::max();

    LaurentSeries(C zero, int default_prec) : zero_(std::move(zero)), prec_(default_prec)
    {
        require(default_prec > 0, ErrorCode::Precondition, "series precision must be positive");
    }

    LaurentSeries(C zero, int start, std::vector<C> coeffs, int horizon, int default_prec)
        : zero_(std::move(zero)), start_(start), c_(std::move(coeffs)), horizon_(horizon), prec_(default_prec)
    {
        normalize();
    }

    static LaurentSeries monomial(const C& c, int k, int default_prec)
    {
        return LaurentSeries(c.zero_like(), k, {c}, kExact, default_prec);
    }
    static LaurentSeries constant(const C& c, int default_prec) { return monomial(c, 0, default_prec); }
    static LaurentSeries zero_to_precision(C zero, int horizon, int default_prec)
    {
        return LaurentSeries(std::move(zero), 0, {}, horizon, default_prec);
    }

    const C& zero_coeff() const noexcept { return zero_; }
    // Ring interface shared with the coefficient types.
    LaurentSeries zero_like() const { return LaurentSeries(zero_, prec_); }
    LaurentSeries one_like() const { return constant(zero_.one_like(), prec_); }
    bool same_context(const LaurentSeries& o) const { return zero_.same_context(o.zero_); }
    int characteristic() const { return zero_.characteristic(); }
    bool operator==(const LaurentSeries& o) const { return identical(o); }
    int default_prec() const noexcept { return prec_; }
    int horizon() const noexcept { return horizon_; }
    bool is_exact() const noexcept { return horizon_ == kExact; }
    // True when no nonzero coefficient is known (exact zero or O(t^N)).
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_exact_zero() const noexcept { return c_.empty() && is_exact(); }
    // Valuation of a nonzero series; for O(t^N) returns N, for exact zero kExact.
    int valuation() const noexcept { return c_.empty() ? horizon_ : start_; }
    // Exponent range of the stored (nonzero-bounded) coefficients.
    int low() const noexcept { return start_; }
    int high() const noexcept { return start_ + static_cast<int>(c_.size()) - 1; }
    std::size_t term_count() const noexcept { return c_.size(); }

    C coeff(int k) const
    {
        if (k >= horizon_)
            fail(ErrorCode::PrecisionExhausted,
                 "coefficient of t^" + std::to_string(k) + " lies beyond the precision horizon " +
                     std::to_string(horizon_));
        if (c_.empty() || k < start_ || k > high())
            return zero_;
        return c_[static_cast<std::size_t>(k - start_)];
    }
    // Coefficient, treating anything at or above the horizon as zero.
    C coeff_or_zero(int k) const { return k >= horizon_ ? zero_ : coeff(k); }

    LaurentSeries operator+(const LaurentSeries& o) const
    {
        check_context(o);
        int h = std::min(horizon_, o.horizon_);
        int p = std::min(prec_, o.prec_);
        if (c_.empty() && o.c_.empty())
            return LaurentSeries(zero_, 0, {}, h, p);
        int lo = c_.empty() ? o.start_ : (o.c_.empty() ? start_ : std::min(start_, o.start_));
        int hi = c_.empty() ? o.high() : (o.c_.empty() ? high() : std::max(high(), o.high()));
        if (h != kExact)
            hi = std::min(hi, h - 1);
        if (hi < lo)
            return LaurentSeries(zero_, 0, {}, h, p);
        std::vector<C> r(static_cast<std::size_t>(hi - lo + 1), zero_);
        for (int k = lo; k <= hi; ++k) {
            C& slot = r[static_cast<std::size_t>(k - lo)];
            if (!c_.empty() && k >= start_ && k <= high())
                slot = c_[static_cast<std::size_t>(k - start_)];
            if (!o.c_.empty() && k >= o.start_ && k <= o.high())
                slot = slot + o.c_[static_cast<std::size_t>(k - o.start_)];
        }
        return LaurentSeries(zero_, lo, std::move(r), h, p);
    }

    LaurentSeries operator-() const
    {
        std::vector<C> r;
        r.reserve(c_.size());
        for (const auto& c : c_)
            r.push_back(-c);
        return LaurentSeries(zero_, start_, std::move(r), horizon_, prec_);
    }

    LaurentSeries operator-(const LaurentSeries& o) const { return *this + (-o); }

    LaurentSeries operator*(const LaurentSeries& o) const
    {
        check_context(o);
        int p = std::min(prec_, o.prec_);
        if (is_exact_zero() || o.is_exact_zero())
            return LaurentSeries(zero_, p);
        long long h1 = horizon_ == kExact ? kExact : static_cast<long long>(horizon_) + o.valuation();
        long long h2 = o.horizon_ == kExact ? kExact : static_cast<long long>(o.horizon_) + valuation();
        if (horizon_ != kExact && o.horizon_ == kExact && o.c_.empty())
            h1 = kExact;
        long long hl = std::min(h1, h2);
        int h = hl >= kExact ? kExact : static_cast<int>(hl);
        if (c_.empty() || o.c_.empty())
            return LaurentSeries(zero_, 0, {}, h, p);
        int lo = start_ + o.start_;
        int hi = high() + o.high();
        if (h != kExact)
            hi = std::min(hi, h - 1);
        if (hi < lo)
            return LaurentSeries(zero_, 0, {}, h, p);
        std::vector<C> r(static_cast<std::size_t>(hi - lo + 1), zero_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero())
                continue;
            int ki = start_ + static_cast<int>(i);
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                int k = ki + o.start_ + static_cast<int>(j);
                if (k > hi)
                    break;
                if (o.c_[j].is_zero())
                    continue;
                C& slot = r[static_cast<std::size_t>(k - lo)];
                slot = slot + c_[i] * o.c_[j];
            }
        }
        return LaurentSeries(zero_, lo, std::move(r), h, p);
    }

    LaurentSeries scaled(const C& c) const
    {
        std::vector<C> r;
        r.reserve(c_.size());
        for (const auto& x : c_)
            r.push_back(x * c);
        if (c.is_zero())
            return LaurentSeries(zero_, 0, {}, horizon_ == kExact ? kExact : horizon_, prec_);
        return LaurentSeries(zero_, start_, std::move(r), horizon_, prec_);
    }

    LaurentSeries times_int(long long k) const { return scaled(zero_.one_like().times_int(k)); }

    // Multiply by t^k.
    LaurentSeries shifted(int k) const
    {
        int h = horizon_ == kExact ? kExact : horizon_ + k;
        return LaurentSeries(zero_, start_ + k, c_, h, prec_);
    }

    LaurentSeries truncated(int h) const
    {
        if (h >= horizon_)
            return *this;
        std::vector<C> r;
        for (std::size_t i = 0; i < c_.size() && start_ + static_cast<int>(i) < h; ++i)
            r.push_back(c_[i]);
        return LaurentSeries(zero_, start_, std::move(r), h, prec_);
    }

    LaurentSeries with_default_prec(int prec) const
    {
        LaurentSeries r = *this;
        r.prec_ = prec;
        return r;
    }

    bool is_monomial() const noexcept { return is_exact() && c_.size() == 1; }

    // Leading exponent v and unit u with f = t^v u.
    std::pair<int, LaurentSeries> unit_part() const
    {
        require(!c_.empty(), ErrorCode::DivisionByZero, "unit part of a series that is zero to precision");
        return {start_, shifted(-start_)};
    }

    LaurentSeries inverse() const
    {
        require(!c_.empty(), ErrorCode::DivisionByZero,
                is_exact() ? "inverse of zero series" : "inverse of a series that is zero to precision");
        int v = start_;
        C lead_inv = c_[0].inverse();
        if (is_monomial())
            return LaurentSeries(zero_, -v, {lead_inv}, kExact, prec_);
        int rel = is_exact() ? prec_ : horizon_ - v;
        // g_0 = u_0^{-1}, g_k = -u_0^{-1} sum_{i=1..k} u_i g_{k-i}
        std::vector<C> g(static_cast<std::size_t>(rel), zero_);
        g[0] = lead_inv;
        for (int k = 1; k < rel; ++k) {
            C acc = zero_;
            int imax = std::min<int>(k, static_cast<int>(c_.size()) - 1);
            for (int i = 1; i <= imax; ++i)
                if (!c_[static_cast<std::size_t>(i)].is_zero())
                    acc = acc + c_[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(k - i)];
            g[static_cast<std::size_t>(k)] = -(lead_inv * acc);
        }
        return LaurentSeries(zero_, -v, std::move(g), -v + rel, prec_);
    }

    LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inverse(); }

    LaurentSeries pow(int e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        LaurentSeries result = constant(zero_.one_like(), prec_);
        LaurentSeries base = *this;
        while (e > 0) {
            if (e & 1)
                result = result * base;
            e >>= 1;
            if (e)
                base = base * base;
        }
        return result;
    }

    // f^p = sum c_k^p t^{pk}.
    LaurentSeries frobenius() const
    {
        int p = zero_.characteristic();
        if (c_.empty()) {
            int h = horizon_ == kExact ? kExact : horizon_ * p;
            return LaurentSeries(zero_, 0, {}, h, prec_);
        }
        std::vector<C> r((c_.size() - 1) * static_cast<std::size_t>(p) + 1, zero_);
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i * static_cast<std::size_t>(p)] = c_[i].frobenius();
        int h = horizon_ == kExact ? kExact : horizon_ * p;
        return LaurentSeries(zero_, start_ * p, std::move(r), h, prec_);
    }

    // d/dt, termwise.
    LaurentSeries derivative() const
    {
        std::vector<C> r;
        r.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            r.push_back(c_[i].times_int(start_ + static_cast<long long>(i)));
        int h = horizon_ == kExact ? kExact : horizon_ - 1;
        return LaurentSeries(zero_, start_ - 1, std::move(r), h, prec_);
    }

    // Apply a coefficient map that fixes zero (additive maps, derivations).
    template <class Fn>
    LaurentSeries map_coeffs(Fn&& fn) const
    {
        std::vector<C> r;
        r.reserve(c_.size());
        for (const auto& c : c_)
            r.push_back(fn(c));
        return LaurentSeries(zero_, start_, std::move(r), horizon_, prec_);
    }

    // Three-valued comparison: Distinct if a known coefficient differs, Equal if the
    // difference is the exact zero, Indistinguishable otherwise.
    Equality3 compare(const LaurentSeries& o) const
    {
        LaurentSeries d = *this - o;
        if (!d.c_.empty())
            return Equality3::Distinct;
        return d.is_exact() ? Equality3::Equal : Equality3::Indistinguishable;
    }

    // Structural identity, including the horizon.
    bool identical(const LaurentSeries& o) const
    {
        if (horizon_ != o.horizon_ || c_.size() != o.c_.size())
            return false;
        if (!c_.empty() && start_ != o.start_)
            return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i]))
                return false;
        return true;
    }

    // Terms in increasing exponent order, e.g. "x*t^-2+(1+x)*t+O(t^40)".
    std::string to_string(const std::string& var) const
    {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero())
                continue;
            int k = start_ + static_cast<int>(i);
            std::string term;
            std::string cs = c_[i].to_string();
            bool one = c_[i] == zero_.one_like();
            if (k == 0) {
                term = cs;
            } else {
                std::string mono = var + (k == 1 ? "" : "^" + std::to_string(k));
                if (one)
                    term = mono;
                else if (c_[i].is_single_term())
                    term = cs + "*" + mono;
                else
                    term = "(" + cs + ")*" + mono;
            }
            if (!out.empty())
                out += "+";
            out += term;
        }
        if (!is_exact()) {
            if (!out.empty())
                out += "+";
            out += "O(" + var + "^" + std::to_string(horizon_) + ")";
        }
        return out.empty() ? "0" : out;
    }

    const std::vector<C>& raw() const noexcept { return c_; }

private:
    void check_context(const LaurentSeries& o) const
    {
        require(zero_.same_context(o.zero_), ErrorCode::ContextMismatch,
                "series over different coefficient contexts");
    }

    void normalize()
    {
        if (horizon_ != kExact && !c_.empty()) {
            int keep = horizon_ - start_;
            if (keep <= 0)
                c_.clear();
            else if (static_cast<int>(c_.size()) > keep)
                c_.resize(static_cast<std::size_t>(keep), zero_);
        }
        std::size_t first = 0;
        while (first < c_.size() && c_[first].is_zero())
            ++first;
        if (first == c_.size()) {
            c_.clear();
            start_ = 0;
            return;
        }
        std::size_t last = c_.size();
        while (last > first && c_[last - 1].is_zero())
            --last;
        if (first > 0 || last < c_.size())
            c_ = std::vector<C>(c_.begin() + static_cast<std::ptrdiff_t>(first),
                                c_.begin() + static_cast<std::ptrdiff_t>(last));
        start_ += static_cast<int>(first);
    }

    C zero_;
    int start_ = 0;
    std::vector<C> c_;
    int horizon_ = kExact;
    int prec_;
};

} // namespace pbr
