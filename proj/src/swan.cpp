#include "pbr/swan.hpp"

#include <algorithm>

namespace pbr {

const char* to_string(ZeroStatus z)
{
    switch (z) {
    case ZeroStatus::Zero:
        return "Zero";
    case ZeroStatus::NonZero:
        return "NonZero";
    default:
        return "Unknown";
    }
}

const char* to_string(GradedSymbol::Kind k)
{
    switch (k) {
    case GradedSymbol::Kind::WildPrimeToP:
        return "WildPrimeToP";
    case GradedSymbol::Kind::WildDivisibleByP:
        return "WildDivisibleByP";
    case GradedSymbol::Kind::Tame:
        return "Tame";
    default:
        return "None";
    }
}

bool GradedSymbol::is_nonzero() const
{
    if (kind == Kind::None)
        return false;
    if (value && !value->is_zero())
        return true;
    return kind == Kind::Tame && unram && !unram->is_zero();
}

int pole_order(const Form1& w)
{
    long long j = 0;
    j = std::max<long long>(j, -static_cast<long long>(w.A.valuation()));
    j = std::max<long long>(j, -1 - static_cast<long long>(w.B.valuation()));
    return static_cast<int>(j);
}

namespace {

Residue coeff_a(const Form1& w, int k) { return w.A.coeff(k); }
Residue coeff_b(const Form1& w, int k) { return w.B.coeff(k - 1); }

GradedSymbol wild_symbol(GradedSymbol::Kind kind, int level, Residue v)
{
    GradedSymbol g;
    g.kind = kind;
    g.level = level;
    g.value = std::move(v);
    return g;
}

} // namespace

GradedSymbol graded_symbol(const Form1& w, int j)
{
    require(j > 0, ErrorCode::Precondition, "graded symbols live at positive levels");
    require(pole_order(w) <= j, ErrorCode::Precondition, "level below the pole order");
    const FieldContext& ctx = w.context();
    int p = ctx.p();
    Residue a = coeff_a(w, -j);
    Residue b = coeff_b(w, -j);
    if (j % p != 0)
        return wild_symbol(GradedSymbol::Kind::WildPrimeToP, j,
                           a + derivative_k(b) * Residue::from_int(ctx, j).inverse());
    if (b.is_zero() || pth_root(b))
        return wild_symbol(GradedSymbol::Kind::WildDivisibleByP, j, Residue::zero(ctx));
    return wild_symbol(GradedSymbol::Kind::WildDivisibleByP, j, b);
}

SwanReport swan_conductor(const Form1& w)
{
    const FieldContext& ctx = w.context();
    const int p = ctx.p();
    const int prec = w.B.default_prec();
    if (w.horizon() != Series::kExact)
        require(w.horizon() > p, ErrorCode::PrecisionExhausted,
                "input known only modulo t^" + std::to_string(w.horizon()) + "; need a horizon above " +
                    std::to_string(p));

    SwanReport rep(w);
    Form1& cur = rep.reduced;
    auto push = [&](Move m) {
        cur = apply_move(cur, m);
        rep.certificate.push_back(std::move(m));
    };

    for (;;) {
        int j = pole_order(cur);
        if (j == 0)
            break;
        Residue a = coeff_a(cur, -j);
        Residue b = coeff_b(cur, -j);
        if (j % p != 0) {
            if (!b.is_zero())
                push(ExactMove{series_monomial(-(b * Residue::from_int(ctx, j).inverse()), -j, prec)});
            Residue sym = coeff_a(cur, -j);
            if (!sym.is_zero()) {
                rep.sw = j;
                rep.leading = wild_symbol(GradedSymbol::Kind::WildPrimeToP, j, sym);
                rep.zero_status = ZeroStatus::NonZero;
                rep.reason = "wild at level " + std::to_string(j);
                return rep;
            }
        } else {
            std::optional<Residue> root;
            if (!b.is_zero()) {
                root = pth_root(b);
                if (!root) {
                    rep.sw = j;
                    rep.leading = wild_symbol(GradedSymbol::Kind::WildDivisibleByP, j, b);
                    rep.zero_status = ZeroStatus::NonZero;
                    rep.reason = "wild at level " + std::to_string(j);
                    return rep;
                }
            }
            if (!a.is_zero()) {
                CartierParts cp = cartier_decompose(a);
                if (!cp.g.is_zero())
                    push(ExactMove{series_monomial(cp.g, -j, prec)});
                if (!cp.a.is_zero())
                    push(FrobMove{Form1::dtheta(series_monomial(cp.a, -j / p, prec))});
            }
            if (root)
                push(FrobMove{Form1::dlog_t(series_monomial(*root, -j / p, prec))});
        }
        if (pole_order(cur) >= j)
            fail(ErrorCode::PrecisionExhausted, "level " + std::to_string(j) + " did not reduce at this precision");
    }

    // Tame tier.
    const int H = cur.horizon() == Series::kExact ? prec : cur.horizon();
    Residue a0 = ctx.p_rank() == 1 ? coeff_a(cur, 0) : Residue::zero(ctx);
    Residue b0 = coeff_b(cur, 0);
    rep.raw_a0 = a0;
    rep.raw_b0 = b0;

    Series a_plus = (cur.A - series_constant(a0, prec)).truncated(H);
    Series beta_plus = (cur.beta() - series_constant(b0, prec)).truncated(H);
    Form1 w_plus{a_plus, beta_plus.shifted(-1)};
    if (!w_plus.is_zero()) {
        // w+ = (F - I)(-(w+ + F w+ + F^2 w+ + ...)) up to t^H
        Form1 u = Form1::zero(ctx, prec);
        Form1 wk = w_plus;
        while (!wk.is_zero() && std::min(wk.A.valuation(), wk.beta().valuation()) < H) {
            u = u - wk;
            wk = frobenius_form(wk).truncated(H);
        }
        push(FrobMove{u});
        cur = cur.truncated(H);
    }

    std::optional<Residue> unram;
    if (ctx.p_rank() == 1) {
        std::vector<Residue> seen{a0};
        for (int it = 0; it < 32 && !a0.is_zero(); ++it) {
            CartierParts cp = cartier_decompose(a0);
            bool cycles = std::any_of(seen.begin(), seen.end(),
                                      [&](const Residue& s) { return s.equals_to_precision(cp.a); });
            if (cycles && cp.g.is_zero())
                break;
            if (!cp.g.is_zero())
                push(ExactMove{series_constant(cp.g, prec)});
            if (!cp.a.is_zero())
                push(FrobMove{Form1::dtheta(series_constant(cp.a, prec))});
            a0 = coeff_a(cur, 0);
            if (cycles)
                break;
            seen.push_back(a0);
        }
        if (!a0.is_zero()) {
            Residue theta = Residue::theta(ctx);
            if (auto c = (a0 * theta).constant_value(); c && !c->is_zero()) {
                const FieldContext& fin = FieldContext::get(p, ctx.n(), ResidueKind::Finite, 1);
                ASReduction red = artin_schreier_reduce(Residue::from_fq(fin, *c));
                if (!red.u.is_zero())
                    push(FrobMove{Form1::dlog_theta(series_constant(Residue::from_fq(ctx, red.u.as_fq()), prec))});
                a0 = coeff_a(cur, 0);
            }
        }
        unram = a0;
    }

    Residue as_res = Residue::zero(ctx);
    if (!b0.is_zero()) {
        ASReduction red = artin_schreier_reduce(b0);
        if (!red.u.is_zero())
            push(FrobMove{Form1::dlog_t(series_constant(red.u, prec))});
        as_res = red.rep;
    }

    rep.sw = 0;
    rep.leading.kind = GradedSymbol::Kind::Tame;
    rep.leading.level = 0;
    rep.leading.value = as_res;
    rep.leading.unram = unram;

    if (!as_res.is_zero()) {
        rep.zero_status = ZeroStatus::NonZero;
        rep.reason = "tame residue outside P(k)";
        return rep;
    }
    switch (ctx.kind()) {
    case ResidueKind::Finite:
        rep.zero_status = ZeroStatus::Zero;
        rep.reason = "Br(F_q) = 0";
        break;
    case ResidueKind::TruncatedLocal: {
        try {
            int inv = schmid_invariant(*unram * Residue::theta(ctx), Residue::theta(ctx));
            rep.zero_status = inv == 0 ? ZeroStatus::Zero : ZeroStatus::NonZero;
            rep.reason = "local invariant " + std::to_string(inv);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PrecisionExhausted)
                throw;
            rep.zero_status = ZeroStatus::Unknown;
            rep.reason = "local invariant beyond precision";
        }
        break;
    }
    case ResidueKind::RationalFunction: {
        if (unram->is_zero()) {
            rep.zero_status = ZeroStatus::Zero;
            rep.reason = "unramified part reduces to 0";
        } else if (auto c = (*unram * Residue::theta(ctx)).constant_value(); c && c->trace() != 0) {
            rep.zero_status = ZeroStatus::NonZero;
            rep.reason = "unramified part c*dlog(" + ctx.label() + ") with Tr(c) != 0";
        } else {
            rep.zero_status = ZeroStatus::Unknown;
            rep.reason = "unramified remainder over F_q(" + ctx.label() + ") not decided";
        }
        break;
    }
    }
    return rep;
}

TameResidue tame_residue(const Form1& w)
{
    require(pole_order(w) == 0, ErrorCode::Precondition, "tame residue needs pole order 0");
    SwanReport r = swan_conductor(w);
    return {*r.leading.value, r.leading.unram};
}

Form1 symbol_form(const Series& a, const Series& b)
{
    Form1 d = dlog_F(b);
    return d.times(a);
}

std::string series_string(const Series& s, const std::string& var)
{
    std::string out;
    if (!s.is_zero())
        for (int k = s.low(); k <= s.high(); ++k) {
            Residue c = s.coeff(k);
            if (c.is_zero())
                continue;
            std::string cs = c.to_string();
            bool one = c == c.one_like();
            std::string term;
            if (k == 0)
                term = c.is_single_term() || (s.term_count() == 1 && s.is_exact()) ? cs : "(" + cs + ")";
            else {
                std::string mono = var + (k == 1 ? "" : "^" + std::to_string(k));
                term = one ? mono : (c.is_single_term() ? cs : "(" + cs + ")") + "*" + mono;
            }
            if (!out.empty())
                out += "+";
            out += term;
        }
    if (!s.is_exact())
        out += (out.empty() ? "" : "+") + std::string("O(") + var + "^" + std::to_string(s.horizon()) + ")";
    return out.empty() ? "0" : out;
}

std::string SymbolPresentation::a_string() const { return a ? series_string(*a) : "0"; }
std::string SymbolPresentation::b_string() const { return b ? series_string(*b) : "1"; }

namespace {

// 1 + h t^r
Series one_plus(const Residue& h, int r, int prec)
{
    return series_constant(h.one_like(), prec) + series_monomial(h, r, prec);
}

struct Refinement {
    Series slot_a; // a = slot_a * t^{-n}
    Series slot_b;
};

} // namespace

SymbolPresentation normal_form(const Form1& w)
{
    const FieldContext& ctx = w.context();
    const int p = ctx.p();
    const int prec = w.B.default_prec();
    SwanReport first = swan_conductor(w);
    const int n = first.sw;

    if (n == 0) {
        SymbolPresentation sp(first.reduced);
        sp.certificate = first.certificate;
        sp.sw = 0;
        sp.zero_status = first.zero_status;
        sp.reason = first.reason;
        const Residue& rep = *first.leading.value;
        bool has_tame = !rep.is_zero();
        bool has_unram = first.leading.unram && !first.leading.unram->is_zero();
        if (has_tame) {
            sp.type = "I";
            sp.a = series_constant(rep, prec);
            sp.b = series_t(ctx, prec);
        } else {
            sp.type = has_unram ? "unramified" : "zero";
        }
        if (has_unram)
            sp.remainder = Form1::dtheta(series_constant(*first.leading.unram, prec));
        sp.certificate_status = cert_verify(w, sp.target, sp.certificate);
        return sp;
    }

    // Wild: a single symbol refined level by level until w - S reduces to zero.
    const bool type_two = n % p == 0;
    Residue lead = *first.leading.value;
    Series theta = ctx.p_rank() == 1 ? series_theta(ctx, prec) : series_zero(ctx, prec);
    // type II: a = f / t^n, b = e t.  type III: a = c / t^n, b = g.
    Series num = type_two ? series_constant(lead, prec) : series_constant(lead, prec) * theta;
    Series unit = type_two ? series_constant(Residue::one(ctx), prec) : theta;
    Residue lead_theta = type_two ? derivative_k(lead) : lead * Residue::theta(ctx);

    auto slot_b = [&] { return type_two ? unit.shifted(1) : unit; };
    auto symbol = [&] { return symbol_form(num.shifted(-n), slot_b()); };

    SwanReport last = first;
    const int cap = 2 * n + 12;
    bool settled = false;
    for (int it = 0; it < cap; ++it) {
        last = swan_conductor(w - symbol());
        int i = last.sw;
        if (i >= n)
            fail(ErrorCode::PrecisionExhausted, "normal form refinement did not lower the conductor");
        if (i > 0) {
            const Residue& v = *last.leading.value;
            if (type_two) {
                if (i % p == 0)
                    num = num + series_monomial(v, n - i, prec);
                else
                    unit = unit * one_plus(-(v / lead_theta), n - i, prec);
            } else {
                if (i % p != 0)
                    num = num + series_monomial(v * Residue::theta(ctx), n - i, prec);
                else
                    unit = unit * one_plus(v / (lead_theta * Residue::from_int(ctx, n)), n - i, prec);
            }
            continue;
        }
        if (last.reduced.is_zero()) {
            settled = true;
            break;
        }
        const Residue& b0 = *last.raw_b0;
        const Residue& a0 = *last.raw_a0;
        if (!b0.is_zero()) {
            if (type_two)
                num = num + series_monomial(b0, n, prec);
            else
                unit = unit * one_plus(b0 / (lead_theta * Residue::from_int(ctx, n)), n, prec);
            continue;
        }
        if (!a0.is_zero()) {
            if (type_two)
                unit = unit * one_plus(-(a0 / lead_theta), n, prec);
            else
                num = num + series_monomial(a0 * Residue::theta(ctx), n, prec);
            continue;
        }
        break;
    }

    SymbolPresentation sp(symbol() + last.reduced);
    sp.type = type_two ? "II" : "III";
    sp.exponent = n;
    sp.a = num.shifted(-n);
    sp.b = slot_b();
    sp.sw = n;
    sp.zero_status = ZeroStatus::NonZero;
    sp.reason = first.reason;
    sp.certificate = last.certificate;
    if (!last.reduced.is_zero() || !settled)
        sp.remainder = last.reduced;
    sp.certificate_status = cert_verify(w, sp.target, sp.certificate);
    return sp;
}

namespace {

// e(T) for an exact polynomial e in t.
Series compose(const Series& e, const Series& T)
{
    require(e.is_exact() && e.valuation() >= 0, ErrorCode::Precondition, "composition needs a polynomial");
    Series acc(e.zero_coeff(), T.default_prec());
    if (e.is_zero())
        return acc;
    for (int k = e.high(); k >= 0; --k)
        acc = acc * T + series_constant(e.coeff(k), T.default_prec());
    return acc;
}

// Solve T e(T) = y^p by fixed-point iteration; check the pullback of e t is y^p.
bool verify_radical_uniformizer(const Series& e, int p)
{
    const FieldContext& ctx = context_of(e);
    int prec = e.default_prec();
    Series yp = series_monomial(Residue::one(ctx), p, prec);
    Series T = yp;
    for (int it = 0; it < prec + 2; ++it) {
        Series next = (yp * compose(e, T).inverse()).truncated(p + prec);
        if (next.compare(T) != Equality3::Distinct) {
            T = next;
            break;
        }
        T = next;
    }
    Series pulled = compose(e, T) * T;
    if (pulled.compare(yp) == Equality3::Distinct)
        return false;
    // dlog(y^p) = p y^{p-1} dy / y^p vanishes identically
    Form1 dl = dlog_F(yp);
    return dl.is_exact_zero() || dl.is_zero();
}

} // namespace

SplitCertificate split_certificate(const SymbolPresentation& sp)
{
    SplitCertificate sc;
    if (sp.type == "zero") {
        sc.status = "Trivial";
        sc.degree = 1;
        return sc;
    }
    if (sp.type == "unramified" && sp.remainder && sp.remainder->B.is_zero() && sp.remainder->A.is_exact()) {
        // c dlog(theta) with Tr(c) != 0 is split by the degree-p unramified X^p - X = c
        const FieldContext& ctx = sp.remainder->context();
        Residue a0 = sp.remainder->A.coeff_or_zero(0);
        auto c = (a0 * Residue::theta(ctx)).constant_value();
        if (c && c->trace() != 0) {
            sc.descriptors.push_back({"artin-schreier", "X^" + std::to_string(ctx.p()) + " - X = " + c->to_string(), ctx.p()});
            sc.status = "Verified";
            sc.degree = ctx.p();
            return sc;
        }
    }
    if (sp.remainder) {
        sc.status = "Unknown";
        sc.degree = 0;
        return sc;
    }
    require(sp.a && sp.b, ErrorCode::Precondition, "presentation has no symbol");
    const FieldContext& ctx = context_of(*sp.b);
    const int p = ctx.p();
    std::string P = std::to_string(p);
    if (sp.type == "II" || sp.type == "I") {
        Series e = sp.b->shifted(-1);
        sc.descriptors.push_back({"totally-ramified", "y^" + P + " = " + series_string(*sp.b), p});
        sc.descriptors.push_back({"artin-schreier", "X^" + P + " - X = " + sp.a_string(), p});
        sc.status = verify_radical_uniformizer(e, p) ? "Verified" : "Unknown";
    } else {
        Residue gbar = sp.b->coeff(0);
        sc.descriptors.push_back({"radical", "z^" + P + " = " + series_string(*sp.b), p});
        sc.descriptors.push_back({"artin-schreier", "X^" + P + " - X = " + sp.a_string(), p});
        // z^p = g has degree p exactly when gbar is not a p-th power; then a dlog(z^p) = p a dlog z = 0
        bool degree_p = !pth_root(gbar).has_value();
        Form1 pulled = symbol_form(*sp.a, *sp.b);
        Form1 p_times{pulled.A.times_int(p), pulled.B.times_int(p)};
        sc.status = degree_p && p_times.is_zero() ? "Verified" : "Unknown";
    }
    sc.degree = sc.status == "Verified" ? p : 0;
    return sc;
}

} // namespace pbr
