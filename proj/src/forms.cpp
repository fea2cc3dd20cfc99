#include "pbr/forms.hpp"

#include <algorithm>

namespace pbr {

namespace {

Series exact_zero_like(const Series& s) { return Series(s.zero_coeff(), s.default_prec()); }

std::string paren(const std::string& s, bool single)
{
    return single ? s : "(" + s + ")";
}

bool single_term(const Series& s) { return s.is_exact() && s.term_count() <= 1 && (s.term_count() == 0 || s.coeff(s.low()).is_single_term()); }

int min_inner_precision(const Series& s)
{
    int m = Series::kExact;
    if (s.is_zero())
        return m;
    for (int k = s.low(); k <= s.high(); ++k)
        m = std::min(m, s.coeff(k).precision());
    return m;
}

} // namespace

Form1 Form1::zero(const FieldContext& ctx, int prec) { return {series_zero(ctx, prec), series_zero(ctx, prec)}; }

Form1 Form1::dtheta(const Series& a) { return {a, exact_zero_like(a)}; }

Form1 Form1::dt(const Series& a) { return {exact_zero_like(a), a}; }

Form1 Form1::dlog_theta(const Series& a)
{
    const FieldContext& ctx = context_of(a);
    Series inv = series_constant(Residue::theta(ctx).inverse(), a.default_prec());
    return {a * inv, exact_zero_like(a)};
}

Form1 Form1::dlog_t(const Series& a) { return {exact_zero_like(a), a.shifted(-1)}; }

int Form1::horizon() const
{
    int h = A.horizon();
    if (!B.is_exact())
        h = std::min(h, B.horizon() + 1);
    return h;
}

std::string Form1::to_string() const
{
    const FieldContext& ctx = context();
    std::string out;
    if (!A.is_exact_zero() && !(A.is_zero() && ctx.p_rank() == 0)) {
        std::string a = A.to_string("t");
        out = paren(a, single_term(A)) + "*d" + ctx.label();
    }
    Series b = beta();
    if (!b.is_exact_zero()) {
        if (!out.empty())
            out += " + ";
        out += paren(b.to_string("t"), single_term(b)) + "*dlog(t)";
    }
    return out.empty() ? "0" : out;
}

Form1 d_F(const Series& f)
{
    const FieldContext& ctx = context_of(f);
    Series a = ctx.p_rank() == 0 ? exact_zero_like(f) : d_theta(f);
    return {a, d_t(f)};
}

Form1 dlog_F(const Series& u)
{
    require(!u.is_zero(), ErrorCode::DivisionByZero, "dlog of zero");
    Series inv = u.inverse();
    Form1 d = d_F(u);
    return {d.A * inv, d.B * inv};
}

Form1 frobenius_form(const Form1& w)
{
    const FieldContext& ctx = context_of(w.B);
    int p = ctx.p();
    Series a = exact_zero_like(w.B);
    if (ctx.p_rank() == 1 && !w.A.is_exact_zero())
        a = w.A.frobenius() * series_constant(Residue::theta(ctx).pow(p - 1), w.A.default_prec());
    return {a, w.B.frobenius().shifted(p - 1)};
}

Form1 f_minus_i(const Form1& w) { return frobenius_form(w) - w; }

Form1 move_image(const Move& m)
{
    if (const auto* e = std::get_if<ExactMove>(&m))
        return d_F(e->v);
    return f_minus_i(std::get<FrobMove>(m).u);
}

Form1 apply_move(const Form1& w, const Move& m) { return w - move_image(m); }

const char* to_string(CertStatus s)
{
    switch (s) {
    case CertStatus::Valid:
        return "Valid";
    case CertStatus::Invalid:
        return "Invalid";
    default:
        return "Indeterminate";
    }
}

CertStatus cert_verify(const Form1& w_in, const Form1& w_out, const Certificate& cert, int floor)
{
    Form1 diff = w_in - w_out;
    for (const auto& m : cert)
        diff = diff - move_image(m);
    if (!diff.is_zero())
        return CertStatus::Invalid;
    if (diff.is_exact_zero())
        return CertStatus::Valid;
    int inner = std::min({min_inner_precision(w_in.A), min_inner_precision(w_in.B), min_inner_precision(w_out.A),
                          min_inner_precision(w_out.B)});
    if (diff.horizon() >= floor && inner >= 0)
        return CertStatus::Valid;
    return CertStatus::Indeterminate;
}

} // namespace pbr
