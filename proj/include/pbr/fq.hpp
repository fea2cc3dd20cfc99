#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pbr {

// F_q = F_p[w]/(m(w)) for a fixed monic primitive modulus m of degree n.
// Elements are stored as integers sum d_i p^i, where d_i is the coefficient of w^i.
// Instances are interned: get() returns the same object for the same (p, n) for the
// lifetime of the process, so elements can hold a plain pointer to their field.
class FqField {
public:
    using Value = std::uint32_t;

    static const FqField& get(int p, int n);

    int p() const noexcept { return p_; }
    int n() const noexcept { return n_; }
    Value q() const noexcept { return q_; }
    // Coefficients m_0..m_n of the modulus, m_n = 1.
    const std::vector<int>& modulus() const noexcept { return modulus_; }
    std::string modulus_string() const;

    Value add(Value a, Value b) const;
    Value sub(Value a, Value b) const;
    Value neg(Value a) const;
    Value mul(Value a, Value b) const;
    Value inv(Value a) const;
    Value pow(Value a, long long e) const;
    Value frobenius(Value a) const { return frob_[a]; }
    Value pth_root(Value a) const { return frob_inv_[a]; }
    // Absolute trace to F_p, returned in [0, p).
    int trace(Value a) const { return trace_[a]; }
    Value from_int(long long c) const;
    Value generator() const noexcept { return generator_; }
    int digit(Value a, int i) const;
    Value from_digits(const std::vector<int>& digits) const;
    // Smallest element with absolute trace 1.
    Value trace_one() const noexcept { return trace_one_; }

private:
    FqField(int p, int n);

    int p_;
    int n_;
    Value q_;
    std::vector<int> modulus_;
    std::vector<Value> pow_p_;
    Value generator_ = 0;
    Value trace_one_ = 0;
    std::vector<Value> exp_; // exp_[k] = g^k for a primitive element g
    std::vector<int> log_;   // log_[0] unused
    std::vector<Value> frob_;
    std::vector<Value> frob_inv_;
    std::vector<int> trace_;
    std::vector<std::uint16_t> add_table_; // filled for small q
};

class Fq {
public:
    Fq() = default;
    Fq(const FqField& field, FqField::Value v) : f_(&field), v_(v) {}
    static Fq zero(const FqField& f) { return Fq(f, 0); }
    static Fq one(const FqField& f) { return Fq(f, 1); }
    static Fq from_int(const FqField& f, long long c) { return Fq(f, f.from_int(c)); }

    const FqField& field() const { return *f_; }
    FqField::Value value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    Fq operator+(const Fq& o) const { return Fq(*f_, f_->add(v_, o.v_)); }
    Fq operator-(const Fq& o) const { return Fq(*f_, f_->sub(v_, o.v_)); }
    Fq operator-() const { return Fq(*f_, f_->neg(v_)); }
    Fq operator*(const Fq& o) const { return Fq(*f_, f_->mul(v_, o.v_)); }
    Fq operator/(const Fq& o) const;
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }
    Fq inverse() const;
    Fq pow(long long e) const { return Fq(*f_, f_->pow(v_, e)); }
    Fq frobenius() const { return Fq(*f_, f_->frobenius(v_)); }
    Fq pth_root() const { return Fq(*f_, f_->pth_root(v_)); }
    int trace() const { return f_->trace(v_); }

    // Coefficient-ring interface shared with the other residue types.
    Fq zero_like() const { return Fq(*f_, 0); }
    Fq one_like() const { return Fq(*f_, 1); }
    Fq times_int(long long k) const { return *this * Fq(*f_, f_->from_int(k)); }
    bool same_context(const Fq& o) const noexcept { return f_ == o.f_; }
    int characteristic() const { return f_->p(); }

    bool operator==(const Fq& o) const noexcept { return v_ == o.v_; }
    bool operator!=(const Fq& o) const noexcept { return v_ != o.v_; }
    bool operator<(const Fq& o) const noexcept { return v_ < o.v_; }

    // "2", "w", "1+2*w^2"; the single-term forms need no parentheses.
    std::string to_string() const;
    bool is_single_term() const;

private:
    const FqField* f_ = nullptr;
    FqField::Value v_ = 0;
};

// Dense univariate polynomial over F_q, coefficients low to high, no trailing zeros.
class FqPoly {
public:
    explicit FqPoly(const FqField& f) : f_(&f) {}
    FqPoly(const FqField& f, std::vector<FqField::Value> coeffs);
    static FqPoly constant(const Fq& c);
    static FqPoly monomial(const Fq& c, int degree);

    const FqField& field() const { return *f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    Fq coeff(int i) const;
    Fq leading() const { return coeff(degree()); }
    const std::vector<FqField::Value>& raw() const noexcept { return c_; }
    // Lowest exponent with a nonzero coefficient; -1 for zero.
    int low_degree() const;

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator-() const;
    FqPoly operator*(const FqPoly& o) const;
    FqPoly scaled(const Fq& c) const;
    FqPoly shifted(int k) const; // multiply by x^k, k >= 0
    // Quotient and remainder; divisor nonzero.
    void divmod(const FqPoly& d, FqPoly& q, FqPoly& r) const;
    FqPoly operator/(const FqPoly& d) const; // exact division expected
    FqPoly operator%(const FqPoly& d) const;
    FqPoly monic() const;
    FqPoly derivative() const;
    FqPoly pow(int e) const;
    // Coefficientwise Frobenius composed with x -> x^p, i.e. f^p.
    FqPoly frobenius() const;
    // Sub-polynomial of exponents congruent to r mod p, compressed: sum c_{pk+r} x^k.
    FqPoly residue_class(int r) const;
    // Coefficientwise p-th root (so residue_class(r).pth_coeff_root()^p recovers the class).
    FqPoly coeff_pth_root() const;
    Fq eval(const Fq& x) const;

    bool operator==(const FqPoly& o) const { return c_ == o.c_; }
    bool operator!=(const FqPoly& o) const { return c_ != o.c_; }

    std::string to_string(const std::string& var) const;
    bool is_single_term() const;

    friend FqPoly gcd(FqPoly a, FqPoly b);

private:
    void trim();
    const FqField* f_;
    std::vector<FqField::Value> c_;
};

} // namespace pbr
