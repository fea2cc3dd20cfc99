#include "pbr/residue.hpp"

#include "fp_linear.hpp"
#include "pbr/error.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace pbr {

namespace {

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
int floor_mod(int a, int p) { return ((a % p) + p) % p; }

LocalSeries local_from_map(const FieldContext& ctx, const std::map<int, Fq>& terms, int horizon)
{
    Fq zero = Fq::zero(ctx.fq());
    if (terms.empty())
        return LocalSeries(zero, 0, {}, horizon, ctx.precision());
    int lo = terms.begin()->first;
    int hi = terms.rbegin()->first;
    std::vector<Fq> c(static_cast<std::size_t>(hi - lo + 1), zero);
    for (const auto& [k, v] : terms)
        c[static_cast<std::size_t>(k - lo)] = v;
    return LocalSeries(zero, lo, std::move(c), horizon, ctx.precision());
}

} // namespace

const char* to_string(ResidueKind k)
{
    switch (k) {
    case ResidueKind::Finite:
        return "fq";
    case ResidueKind::RationalFunction:
        return "ratfunc";
    default:
        return "local";
    }
}

FieldContext::FieldContext(int p, int n, ResidueKind kind, int precision, std::string label)
    : p_(p), n_(n), kind_(kind), precision_(precision), label_(std::move(label)), fq_(&FqField::get(p, n))
{
}

const FieldContext& FieldContext::get(int p, int n, ResidueKind kind, int precision, const std::string& label)
{
    require(precision > 0, ErrorCode::Precondition, "precision must be positive");
    std::string lab = label;
    if (kind == ResidueKind::Finite)
        lab.clear();
    else if (lab.empty())
        lab = kind == ResidueKind::RationalFunction ? "x" : "s";
    int prec = kind == ResidueKind::TruncatedLocal ? precision : 1;
    FqField::get(p, n);
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int, std::string>, std::unique_ptr<FieldContext>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, n, static_cast<int>(kind), prec, lab);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<FieldContext>(new FieldContext(p, n, kind, prec, lab))).first;
    return *it->second;
}

Residue Residue::zero(const FieldContext& ctx)
{
    switch (ctx.kind()) {
    case ResidueKind::Finite:
        return Residue(ctx, Fq::zero(ctx.fq()));
    case ResidueKind::RationalFunction:
        return Residue(ctx, RatFunc(ctx.fq()));
    default:
        return Residue(ctx, LocalSeries(Fq::zero(ctx.fq()), ctx.precision()));
    }
}

Residue Residue::one(const FieldContext& ctx) { return from_fq(ctx, Fq::one(ctx.fq())); }

Residue Residue::from_fq(const FieldContext& ctx, const Fq& c)
{
    switch (ctx.kind()) {
    case ResidueKind::Finite:
        return Residue(ctx, c);
    case ResidueKind::RationalFunction:
        return Residue(ctx, RatFunc::constant(c));
    default:
        if (c.is_zero())
            return zero(ctx);
        return Residue(ctx, LocalSeries::constant(c, ctx.precision()));
    }
}

Residue Residue::from_int(const FieldContext& ctx, long long c) { return from_fq(ctx, Fq::from_int(ctx.fq(), c)); }

Residue Residue::theta(const FieldContext& ctx)
{
    switch (ctx.kind()) {
    case ResidueKind::Finite:
        fail(ErrorCode::Unsupported, "F_q has no p-basis element");
    case ResidueKind::RationalFunction:
        return Residue(ctx, RatFunc::variable(ctx.fq()));
    default:
        return Residue(ctx, LocalSeries::monomial(Fq::one(ctx.fq()), 1, ctx.precision()));
    }
}

Residue Residue::from_ratfunc(const FieldContext& ctx, RatFunc f)
{
    require(ctx.kind() == ResidueKind::RationalFunction, ErrorCode::ContextMismatch, "not a rational function field");
    return Residue(ctx, std::move(f));
}

Residue Residue::from_local(const FieldContext& ctx, LocalSeries f)
{
    require(ctx.kind() == ResidueKind::TruncatedLocal, ErrorCode::ContextMismatch, "not a local residue field");
    return Residue(ctx, std::move(f));
}

bool Residue::is_zero() const
{
    return std::visit([](const auto& v) { return v.is_zero(); }, v_);
}

bool Residue::is_exact() const
{
    if (auto* s = std::get_if<LocalSeries>(&v_))
        return s->is_exact();
    return true;
}

int Residue::precision() const
{
    if (auto* s = std::get_if<LocalSeries>(&v_))
        return s->horizon();
    return LocalSeries::kExact;
}

std::optional<Fq> Residue::constant_value() const
{
    switch (kind()) {
    case ResidueKind::Finite:
        return as_fq();
    case ResidueKind::RationalFunction: {
        const RatFunc& f = as_ratfunc();
        if (f.is_polynomial() && f.num().degree() <= 0)
            return f.num().coeff(0);
        return std::nullopt;
    }
    default: {
        const LocalSeries& s = as_local();
        if (s.horizon() < 1)
            return std::nullopt;
        if (s.is_zero())
            return Fq::zero(ctx_->fq());
        if (s.low() == 0 && s.high() == 0)
            return s.coeff(0);
        return std::nullopt;
    }
    }
}

Residue Residue::operator+(const Residue& o) const
{
    require(same_context(o), ErrorCode::ContextMismatch, "residues from different fields");
    return std::visit(
        [&](const auto& a) -> Residue {
            using T = std::decay_t<decltype(a)>;
            return Residue(*ctx_, a + std::get<T>(o.v_));
        },
        v_);
}

Residue Residue::operator-(const Residue& o) const
{
    require(same_context(o), ErrorCode::ContextMismatch, "residues from different fields");
    return std::visit(
        [&](const auto& a) -> Residue {
            using T = std::decay_t<decltype(a)>;
            return Residue(*ctx_, a - std::get<T>(o.v_));
        },
        v_);
}

Residue Residue::operator-() const
{
    return std::visit([&](const auto& a) -> Residue { return Residue(*ctx_, -a); }, v_);
}

Residue Residue::operator*(const Residue& o) const
{
    require(same_context(o), ErrorCode::ContextMismatch, "residues from different fields");
    return std::visit(
        [&](const auto& a) -> Residue {
            using T = std::decay_t<decltype(a)>;
            return Residue(*ctx_, a * std::get<T>(o.v_));
        },
        v_);
}

Residue Residue::inverse() const
{
    require(!is_zero(), ErrorCode::DivisionByZero, "inverse of zero residue");
    return std::visit([&](const auto& a) -> Residue { return Residue(*ctx_, a.inverse()); }, v_);
}

Residue Residue::frobenius() const
{
    return std::visit([&](const auto& a) -> Residue { return Residue(*ctx_, a.frobenius()); }, v_);
}

Residue Residue::pow(long long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Residue result = one_like();
    Residue base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Residue Residue::scaled(const Fq& c) const
{
    switch (kind()) {
    case ResidueKind::Finite:
        return Residue(*ctx_, as_fq() * c);
    case ResidueKind::RationalFunction:
        return Residue(*ctx_, as_ratfunc().scaled(c));
    default:
        return Residue(*ctx_, as_local().scaled(c));
    }
}

bool Residue::operator==(const Residue& o) const
{
    if (ctx_ != o.ctx_)
        return false;
    switch (kind()) {
    case ResidueKind::Finite:
        return as_fq() == o.as_fq();
    case ResidueKind::RationalFunction:
        return as_ratfunc() == o.as_ratfunc();
    default:
        return as_local().identical(o.as_local());
    }
}

std::string Residue::to_string() const
{
    switch (kind()) {
    case ResidueKind::Finite:
        return as_fq().to_string();
    case ResidueKind::RationalFunction:
        return as_ratfunc().to_string(ctx_->label());
    default:
        return as_local().to_string(ctx_->label());
    }
}

bool Residue::is_single_term() const
{
    switch (kind()) {
    case ResidueKind::Finite:
        return as_fq().is_single_term();
    case ResidueKind::RationalFunction:
        return as_ratfunc().is_single_term();
    default: {
        const LocalSeries& s = as_local();
        if (!s.is_exact())
            return false;
        return s.term_count() <= 1;
    }
    }
}

std::optional<Residue> pth_root(const Residue& f)
{
    const FieldContext& ctx = f.context();
    int p = ctx.p();
    switch (ctx.kind()) {
    case ResidueKind::Finite:
        return Residue::from_fq(ctx, f.as_fq().pth_root());
    case ResidueKind::RationalFunction: {
        const RatFunc& r = f.as_ratfunc();
        FqPoly m = r.num() * r.den().pow(p - 1);
        for (int i = 1; i < p; ++i)
            if (!m.residue_class(i).is_zero())
                return std::nullopt;
        return Residue::from_ratfunc(ctx, RatFunc(m.residue_class(0).coeff_pth_root(), r.den()));
    }
    default: {
        const LocalSeries& s = f.as_local();
        if (s.is_zero() && !s.is_exact() && s.horizon() < 1)
            fail(ErrorCode::PrecisionExhausted, "p-th root of an element with no known coefficients");
        std::map<int, Fq> terms;
        if (!s.is_zero())
            for (int k = s.low(); k <= s.high(); ++k) {
                Fq c = s.coeff(k);
                if (c.is_zero())
                    continue;
                if (floor_mod(k, p) != 0)
                    return std::nullopt;
                terms.emplace(k / p, c.pth_root());
            }
        int h = s.is_exact() ? LocalSeries::kExact : ceil_div(s.horizon(), p);
        return Residue::from_local(ctx, local_from_map(ctx, terms, h));
    }
    }
}

std::vector<Residue> p_basis_decompose_k(const Residue& f)
{
    const FieldContext& ctx = f.context();
    int p = ctx.p();
    switch (ctx.kind()) {
    case ResidueKind::Finite:
        return {Residue::from_fq(ctx, f.as_fq().pth_root())};
    case ResidueKind::RationalFunction: {
        const RatFunc& r = f.as_ratfunc();
        FqPoly m = r.num() * r.den().pow(p - 1);
        std::vector<Residue> out;
        for (int i = 0; i < p; ++i)
            out.push_back(Residue::from_ratfunc(ctx, RatFunc(m.residue_class(i).coeff_pth_root(), r.den())));
        return out;
    }
    default: {
        const LocalSeries& s = f.as_local();
        std::vector<std::map<int, Fq>> terms(static_cast<std::size_t>(p));
        if (!s.is_zero())
            for (int k = s.low(); k <= s.high(); ++k) {
                Fq c = s.coeff(k);
                if (c.is_zero())
                    continue;
                int i = floor_mod(k, p);
                terms[static_cast<std::size_t>(i)].emplace((k - i) / p, c.pth_root());
            }
        std::vector<Residue> out;
        for (int i = 0; i < p; ++i) {
            int h = s.is_exact() ? LocalSeries::kExact : ceil_div(s.horizon() - i, p);
            out.push_back(Residue::from_local(ctx, local_from_map(ctx, terms[static_cast<std::size_t>(i)], h)));
        }
        return out;
    }
    }
}

Residue derivative_k(const Residue& f)
{
    const FieldContext& ctx = f.context();
    switch (ctx.kind()) {
    case ResidueKind::Finite:
        return Residue::zero(ctx);
    case ResidueKind::RationalFunction:
        return Residue::from_ratfunc(ctx, f.as_ratfunc().derivative());
    default:
        return Residue::from_local(ctx, f.as_local().derivative());
    }
}

CartierParts cartier_decompose(const Residue& c)
{
    const FieldContext& ctx = c.context();
    require(ctx.p_rank() == 1, ErrorCode::Unsupported, "Cartier decomposition needs a residue field of p-rank 1");
    int p = ctx.p();
    std::vector<Residue> parts = p_basis_decompose_k(c);
    Residue theta = Residue::theta(ctx);
    Residue g = Residue::zero(ctx);
    Residue theta_pow = theta;
    for (int i = 0; i + 1 < p; ++i) {
        const Residue& ci = parts[static_cast<std::size_t>(i)];
        if (!ci.is_zero())
            g = g + ci.frobenius() * theta_pow * Residue::from_int(ctx, i + 1).inverse();
        theta_pow = theta_pow * theta;
    }
    return {parts[static_cast<std::size_t>(p - 1)], g};
}

namespace {

std::vector<int> digits_of(const FqField& f, FqField::Value v)
{
    std::vector<int> d(static_cast<std::size_t>(f.n()));
    for (int i = 0; i < f.n(); ++i)
        d[static_cast<std::size_t>(i)] = f.digit(v, i);
    return d;
}

FqField::Value basis_element(const FqField& f, int r)
{
    std::vector<int> d(static_cast<std::size_t>(f.n()), 0);
    d[static_cast<std::size_t>(r)] = 1;
    return f.from_digits(d);
}

std::optional<Fq> as_solve_fq(const Fq& a)
{
    const FqField& f = a.field();
    if (a.trace() != 0)
        return std::nullopt;
    int n = f.n();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r) {
        Fq e(f, basis_element(f, r));
        Fq img = e.frobenius() - e;
        auto d = digits_of(f, img.value());
        for (int i = 0; i < n; ++i)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = d[static_cast<std::size_t>(i)];
    }
    auto x = detail::solve_mod_p(rows, digits_of(f, a.value()), f.p());
    if (!x)
        return std::nullopt;
    return Fq(f, f.from_digits(*x));
}

// Solve P^p - P D^{p-1} = n over F_q[x] with deg P <= bound.
std::optional<FqPoly> as_solve_poly(const FqPoly& n, const FqPoly& D, int p)
{
    const FqField& f = n.field();
    int q_deg = f.n();
    int bound = std::max(D.degree(), std::max(0, n.degree()) / p);
    FqPoly Dp = D.pow(p - 1);
    int rows_deg = std::max({p * bound, bound + Dp.degree(), n.degree(), 0});
    std::size_t nrows = static_cast<std::size_t>((rows_deg + 1) * q_deg);
    std::size_t ncols = static_cast<std::size_t>((bound + 1) * q_deg);
    std::vector<std::vector<int>> rows(nrows, std::vector<int>(ncols, 0));
    for (int m = 0; m <= bound; ++m)
        for (int r = 0; r < q_deg; ++r) {
            FqPoly e = FqPoly::monomial(Fq(f, basis_element(f, r)), m);
            FqPoly img = e.frobenius() - e * Dp;
            std::size_t col = static_cast<std::size_t>(m * q_deg + r);
            for (int k = 0; k <= img.degree(); ++k) {
                auto d = digits_of(f, img.coeff(k).value());
                for (int i = 0; i < q_deg; ++i)
                    rows[static_cast<std::size_t>(k * q_deg + i)][col] = d[static_cast<std::size_t>(i)];
            }
        }
    std::vector<int> rhs(nrows, 0);
    for (int k = 0; k <= n.degree(); ++k) {
        auto d = digits_of(f, n.coeff(k).value());
        for (int i = 0; i < q_deg; ++i)
            rhs[static_cast<std::size_t>(k * q_deg + i)] = d[static_cast<std::size_t>(i)];
    }
    auto x = detail::solve_mod_p(rows, rhs, p);
    if (!x)
        return std::nullopt;
    std::vector<FqField::Value> coeffs;
    for (int m = 0; m <= bound; ++m) {
        std::vector<int> d(x->begin() + m * q_deg, x->begin() + (m + 1) * q_deg);
        coeffs.push_back(f.from_digits(d));
    }
    return FqPoly(f, coeffs);
}

std::optional<Residue> as_solve_ratfunc(const Residue& a)
{
    const FieldContext& ctx = a.context();
    int p = ctx.p();
    const RatFunc& r = a.as_ratfunc();
    const FqPoly& d = r.den();
    for (int i = 1; i < p; ++i)
        if (!d.residue_class(i).is_zero())
            return std::nullopt;
    FqPoly D = d.residue_class(0).coeff_pth_root();
    auto P = as_solve_poly(r.num(), D, p);
    if (!P)
        return std::nullopt;
    return Residue::from_ratfunc(ctx, RatFunc(*P, D));
}

// Local field: remove p-divisible poles, Hensel the integral part.
ASReduction as_reduce_local(const Residue& a)
{
    const FieldContext& ctx = a.context();
    int p = ctx.p();
    const FqField& F = ctx.fq();
    LocalSeries cur = a.as_local();
    LocalSeries u(Fq::zero(F), ctx.precision());
    auto mono = [&](const Fq& c, int k) { return LocalSeries::monomial(c, k, ctx.precision()); };
    if (!cur.is_zero()) {
        for (int k = cur.low(); k < 0; ++k) {
            if (cur.is_zero() || k < cur.low())
                continue;
            if (k > cur.high())
                break;
            Fq c = cur.coeff(k);
            if (c.is_zero() || floor_mod(k, p) != 0)
                continue;
            LocalSeries v = mono(c.pth_root(), k / p);
            u = u + v;
            cur = cur - (v.frobenius() - v);
        }
    }
    LocalSeries rep(Fq::zero(F), ctx.precision());
    LocalSeries pos(Fq::zero(F), 0, {}, cur.horizon(), ctx.precision());
    if (!cur.is_zero()) {
        for (int k = cur.low(); k < 0 && k <= cur.high(); ++k)
            rep = rep + mono(cur.coeff(k), k);
        for (int k = std::max(1, cur.low()); k <= cur.high(); ++k)
            pos = pos + mono(cur.coeff(k), k);
    }
    Fq c0 = cur.horizon() > 0 ? cur.coeff(0) : Fq::zero(F);
    if (c0.trace() != 0) {
        Fq e(F, F.trace_one());
        Fq shift = e * Fq::from_int(F, c0.trace());
        rep = rep + mono(shift, 0);
        c0 = c0 - shift;
    }
    if (!c0.is_zero())
        u = u + mono(*as_solve_fq(c0), 0);
    // u += -(pos + pos^p + pos^{p^2} + ...) to the horizon
    int h = std::min(cur.horizon(), ctx.precision());
    LocalSeries w = pos.truncated(h);
    while (!w.is_zero() && w.valuation() < h) {
        u = u - w;
        w = w.frobenius().truncated(h);
    }
    if (!cur.is_exact() || !pos.is_zero())
        u = u.truncated(h);
    if (!cur.is_exact())
        rep = rep.truncated(cur.horizon());
    return {Residue::from_local(ctx, rep), Residue::from_local(ctx, u)};
}

} // namespace

std::optional<Residue> artin_schreier_solve(const Residue& a)
{
    const FieldContext& ctx = a.context();
    if (a.is_zero() && a.is_exact())
        return Residue::zero(ctx);
    switch (ctx.kind()) {
    case ResidueKind::Finite: {
        auto u = as_solve_fq(a.as_fq());
        if (!u)
            return std::nullopt;
        return Residue::from_fq(ctx, *u);
    }
    case ResidueKind::RationalFunction:
        return as_solve_ratfunc(a);
    default: {
        ASReduction red = as_reduce_local(a);
        if (!red.rep.is_zero())
            return std::nullopt;
        return red.u;
    }
    }
}

ASReduction artin_schreier_reduce(const Residue& a)
{
    const FieldContext& ctx = a.context();
    if (auto u = artin_schreier_solve(a))
        return {Residue::zero(ctx), *u};
    int p = ctx.p();
    const FqField& F = ctx.fq();
    switch (ctx.kind()) {
    case ResidueKind::Finite: {
        Fq e(F, F.trace_one());
        Fq rep = e * Fq::from_int(F, a.as_fq().trace());
        Fq u = *as_solve_fq(a.as_fq() - rep);
        return {Residue::from_fq(ctx, rep), Residue::from_fq(ctx, u)};
    }
    case ResidueKind::RationalFunction: {
        // Polynomial part: c x^{pk} -> c^{1/p} x^k, then the constant by its trace.
        const RatFunc& r = a.as_ratfunc();
        FqPoly quo(F), rem(F);
        r.num().divmod(r.den(), quo, rem);
        FqPoly u(F);
        for (int k = quo.degree(); k >= 1; --k) {
            Fq c = quo.coeff(k);
            if (c.is_zero() || k % p != 0)
                continue;
            FqPoly v = FqPoly::monomial(c.pth_root(), k / p);
            u = u + v;
            quo = quo - (v.frobenius() - v);
        }
        Fq c0 = quo.coeff(0);
        Fq e(F, F.trace_one());
        Fq shift = e * Fq::from_int(F, c0.trace());
        if (!(c0 - shift).is_zero())
            u = u + FqPoly::constant(*as_solve_fq(c0 - shift));
        quo = quo - FqPoly::constant(c0 - shift);
        RatFunc rep = RatFunc::from_poly(quo) + RatFunc(rem, r.den());
        return {Residue::from_ratfunc(ctx, rep), Residue::from_ratfunc(ctx, RatFunc::from_poly(u))};
    }
    default:
        return as_reduce_local(a);
    }
}

int schmid_invariant(const Residue& b, const Residue& c)
{
    require(b.kind() == ResidueKind::TruncatedLocal, ErrorCode::Unsupported,
            "the local invariant needs a residue field F_q((s))");
    require(!c.is_zero(), ErrorCode::DivisionByZero, "second slot of a symbol must be nonzero");
    if (b.is_zero() && b.is_exact())
        return 0;
    const LocalSeries& cs = c.as_local();
    LocalSeries form = b.as_local() * (cs.derivative() / cs);
    return form.coeff(-1).trace();
}

} // namespace pbr
