#include "evaluate.hpp"

namespace pbr::cli {

long Session::q() const
{
    long r = 1;
    for (int i = 0; i < n; ++i)
        r *= p;
    return r;
}

const FieldContext& Session::field() const
{
    return FieldContext::get(p, n, residue, residue == ResidueKind::TruncatedLocal ? prec : 1);
}

std::string Session::theta_name() const
{
    switch (residue) {
    case ResidueKind::RationalFunction:
        return "x";
    case ResidueKind::TruncatedLocal:
        return "s";
    default:
        return "";
    }
}

namespace {

[[noreturn]] void unknown_variable(const Elem& e, const std::string& where)
{
    throw ParseError(e.pos, "unknown variable '" + e.name + "' at position " + std::to_string(e.pos) + " for " + where);
}

Fq generator(const Session& s, const Elem& e)
{
    if (s.n == 1)
        unknown_variable(e, "F_" + std::to_string(s.p) + " (w names the generator of F_q for q > p)");
    const FqField& F = FqField::get(s.p, s.n);
    return Fq(F, static_cast<FqField::Value>(s.p));
}

} // namespace

Series eval_series(const ElemPtr& e, const Session& s)
{
    const FieldContext& k = s.field();
    switch (e->kind) {
    case Elem::Kind::Int:
        return series_constant(Residue::from_int(k, e->value), s.prec);
    case Elem::Kind::Var:
        if (e->name == "t")
            return series_t(k, s.prec);
        if (!s.theta_name().empty() && e->name == s.theta_name())
            return series_theta(k, s.prec);
        if (e->name == "w")
            return series_constant(Residue::from_fq(k, generator(s, *e)), s.prec);
        unknown_variable(*e, std::string("residue kind ") + to_string(s.residue));
    case Elem::Kind::Add:
        return eval_series(e->lhs, s) + eval_series(e->rhs, s);
    case Elem::Kind::Sub:
        return eval_series(e->lhs, s) - eval_series(e->rhs, s);
    case Elem::Kind::Mul:
        return eval_series(e->lhs, s) * eval_series(e->rhs, s);
    case Elem::Kind::Div: {
        Series d = eval_series(e->rhs, s);
        require(!d.is_zero(), ErrorCode::DivisionByZero, "division by zero at position " + std::to_string(e->pos));
        return eval_series(e->lhs, s) * d.inverse();
    }
    case Elem::Kind::Neg:
        return -eval_series(e->lhs, s);
    case Elem::Kind::Pow: {
        Series b = eval_series(e->lhs, s);
        require(e->value >= 0 || !b.is_zero(), ErrorCode::DivisionByZero, "negative power of zero");
        return b.pow(static_cast<int>(e->value));
    }
    }
    fail(ErrorCode::Parse, "malformed expression");
}

namespace {

Form1 term_form(const Term& t, const Session& s)
{
    Form1 w = Form1::zero(s.field(), s.prec);
    switch (t.kind) {
    case Term::Kind::Exact:
        w = d_F(eval_series(t.arg, s));
        break;
    case Term::Kind::Dlog: {
        Series b = eval_series(t.arg, s);
        require(!b.is_zero(), ErrorCode::DivisionByZero, "dlog of zero");
        w = t.coef ? symbol_form(eval_series(t.coef, s), b) : dlog_F(b);
        break;
    }
    case Term::Kind::Sym: {
        Series b = eval_series(t.arg, s);
        require(!b.is_zero(), ErrorCode::DivisionByZero, "symbol with zero second slot");
        w = symbol_form(eval_series(t.witt.a0, s), b);
        break;
    }
    }
    return t.negated ? -w : w;
}

} // namespace

BrauerRep eval_class(const Expr& e, const Session& s)
{
    bool two = false;
    for (const auto& t : e.terms)
        two = two || (t.kind == Term::Kind::Sym && t.witt.two);
    if (!two) {
        Form1 w = Form1::zero(s.field(), s.prec);
        for (const auto& t : e.terms)
            w = w + term_form(t, s);
        return BrauerRep::from_form(w);
    }
    std::vector<WittSymbol> symbols;
    Form1 low = Form1::zero(s.field(), s.prec);
    bool has_low = false;
    for (const auto& t : e.terms) {
        if (t.kind == Term::Kind::Sym && t.witt.two) {
            WittF a(eval_series(t.witt.a0, s), eval_series(t.witt.a1, s));
            Series b = eval_series(t.arg, s);
            symbols.push_back({t.negated ? -a : a, b});
        } else {
            low = low + term_form(t, s);
            has_low = true;
        }
    }
    BrauerRep out = BrauerRep::from_symbols(s.field(), std::move(symbols), s.prec);
    // p-torsion summands sit inside Br[p^2] through V
    if (has_low)
        out = out + map_V(BrauerRep::from_form(low));
    return out;
}

WittF eval_witt(const WNodePtr& w, const Session& s)
{
    switch (w->kind) {
    case WNode::Kind::W1:
        return WittF(eval_series(w->e0, s));
    case WNode::Kind::W2:
        return WittF(eval_series(w->e0, s), eval_series(w->e1, s));
    case WNode::Kind::Op: {
        WittF a = eval_witt(w->lhs, s);
        switch (w->op) {
        case 'V':
            return witt_V(a);
        case 'F':
            return witt_F(a);
        case 'R':
            return witt_R(a);
        default:
            return witt_P(a);
        }
    }
    case WNode::Kind::Add:
        return eval_witt(w->lhs, s) + eval_witt(w->rhs, s);
    case WNode::Kind::Sub:
        return eval_witt(w->lhs, s) - eval_witt(w->rhs, s);
    case WNode::Kind::Mul:
        return eval_witt(w->lhs, s) * eval_witt(w->rhs, s);
    case WNode::Kind::Neg:
        return -eval_witt(w->lhs, s);
    }
    fail(ErrorCode::Parse, "malformed Witt expression");
}

BivarPoly eval_bivar(const ElemPtr& e, const Session& s)
{
    const FqField& F = FqField::get(s.p, s.n);
    switch (e->kind) {
    case Elem::Kind::Int:
        return BivarPoly::constant(Fq::from_int(F, e->value));
    case Elem::Kind::Var:
        if (e->name == "pi")
            return BivarPoly::monomial(Fq::one(F), 1, 0);
        if (e->name == "t")
            return BivarPoly::monomial(Fq::one(F), 0, 1);
        if (e->name == "w")
            return BivarPoly::constant(generator(s, *e));
        unknown_variable(*e, "local2d (variables pi, t, w)");
    case Elem::Kind::Add:
        return eval_bivar(e->lhs, s) + eval_bivar(e->rhs, s);
    case Elem::Kind::Sub:
        return eval_bivar(e->lhs, s) - eval_bivar(e->rhs, s);
    case Elem::Kind::Mul:
        return eval_bivar(e->lhs, s) * eval_bivar(e->rhs, s);
    case Elem::Kind::Neg:
        return -eval_bivar(e->lhs, s);
    case Elem::Kind::Div: {
        BivarPoly d = eval_bivar(e->rhs, s);
        auto inv = d.monomial_inverse();
        if (!inv)
            throw ParseError(e->pos, "local2d divides only by monomials in pi and t (position " +
                                         std::to_string(e->pos) + ")");
        return eval_bivar(e->lhs, s) * *inv;
    }
    case Elem::Kind::Pow: {
        BivarPoly b = eval_bivar(e->lhs, s);
        if (e->value < 0 && !b.monomial_inverse())
            throw ParseError(e->pos, "negative powers need a monomial base in local2d (position " +
                                         std::to_string(e->pos) + ")");
        return b.pow(static_cast<int>(e->value));
    }
    }
    fail(ErrorCode::Parse, "malformed expression");
}

BivariateClass eval_bivariate_class(const Expr& e, const Session& s)
{
    BivariateClass c;
    c.p = s.p;
    c.n = s.n;
    c.n_t = s.prec;
    c.n_pi = std::max(8, s.prec / 2);
    const FqField& F = FqField::get(s.p, s.n);
    for (const auto& t : e.terms) {
        switch (t.kind) {
        case Term::Kind::Exact: {
            BivarPoly v = eval_bivar(t.arg, s);
            c.exact.push_back(t.negated ? -v : v);
            break;
        }
        case Term::Kind::Dlog:
        case Term::Kind::Sym: {
            require(!(t.kind == Term::Kind::Sym && t.witt.two), ErrorCode::Precondition,
                    "local2d works with p-symbols only");
            const ElemPtr& f_ast = t.kind == Term::Kind::Sym ? t.witt.a0 : t.coef;
            BivarPoly f = f_ast ? eval_bivar(f_ast, s) : BivarPoly::constant(Fq::one(F));
            BivarPoly g = eval_bivar(t.arg, s);
            require(!g.is_zero(), ErrorCode::DivisionByZero, "symbol with zero second slot");
            c.add_symbol(t.negated ? -f : f, g);
            break;
        }
        }
    }
    return c;
}

} // namespace pbr::cli
