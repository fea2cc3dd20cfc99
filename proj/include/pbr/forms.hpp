#pragma once

#include "pbr/series.hpp"

#include <string>
#include <variant>
#include <vector>

namespace pbr {

// A dtheta + B dt over F = k((t)). For residue fields of p-rank 0, A is the exact zero.
struct Form1 {
    Series A;
    Series B;

    static Form1 zero(const FieldContext& ctx, int prec = kDefaultPrecision);
    // a dtheta, a dt, a dlog(theta), a dlog(t)
    static Form1 dtheta(const Series& a);
    static Form1 dt(const Series& a);
    static Form1 dlog_theta(const Series& a);
    static Form1 dlog_t(const Series& a);

    const FieldContext& context() const { return context_of(B); }
    Form1 operator+(const Form1& o) const { return {A + o.A, B + o.B}; }
    Form1 operator-(const Form1& o) const { return {A - o.A, B - o.B}; }
    Form1 operator-() const { return {-A, -B}; }
    Form1 times(const Series& f) const { return {A * f, B * f}; }
    Form1 truncated(int h) const { return {A.truncated(h), B.truncated(h - 1)}; }

    // No known nonzero coefficient.
    bool is_zero() const { return A.is_zero() && B.is_zero(); }
    bool is_exact_zero() const { return A.is_exact_zero() && B.is_exact_zero(); }
    // Coefficient of t^k in t*B.
    Series beta() const { return B.shifted(1); }
    // Smallest horizon among A and t*B.
    int horizon() const;

    // "A*d(x) + beta*dlog(t)" style rendering.
    std::string to_string() const;
};

Form1 d_F(const Series& f);
Form1 dlog_F(const Series& u);
// F(A dtheta + B dt) = A^p theta^{p-1} dtheta + B^p t^{p-1} dt
Form1 frobenius_form(const Form1& w);
Form1 f_minus_i(const Form1& w);

struct ExactMove {
    Series v; // removes d(v)
};
struct FrobMove {
    Form1 u; // removes (F - I)(u)
};
using Move = std::variant<ExactMove, FrobMove>;
using Certificate = std::vector<Move>;

// The form a move removes.
Form1 move_image(const Move& m);
// w - d(v) or w - (F-I)(u).
Form1 apply_move(const Form1& w, const Move& m);

enum class CertStatus { Valid, Invalid, Indeterminate };
const char* to_string(CertStatus s);

constexpr int kConfidenceFloor = 1;

// Recomputes w_in - w_out - sum d(v) - sum (F-I)(u).
CertStatus cert_verify(const Form1& w_in, const Form1& w_out, const Certificate& cert, int floor = kConfidenceFloor);

} // namespace pbr
