#include "pbr/brauer.hpp"

namespace pbr {

namespace {

int ipow(int b, int e)
{
    int r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

int log_p(int v, int p)
{
    int e = 0;
    while (v > 1) {
        v /= p;
        ++e;
    }
    return e;
}

bool all_integral(const std::vector<WittSymbol>& s)
{
    for (const auto& sym : s)
        if (!sym.a[0].is_zero() && sym.a[0].valuation() < 0)
            return false;
    return true;
}

// Sums the a-slots of symbols with identical b and drops b = 1.
std::vector<WittSymbol> grouped(const std::vector<WittSymbol>& in)
{
    std::vector<WittSymbol> out;
    for (const auto& s : in) {
        if (s.b.compare(s.b.one_like()) == Equality3::Equal)
            continue;
        bool merged = false;
        for (auto& o : out)
            if (o.b.identical(s.b)) {
                o.a = o.a + s.a;
                merged = true;
                break;
            }
        if (!merged)
            out.push_back(s);
    }
    return out;
}

Form1 form_of_component(const std::vector<WittSymbol>& s, int idx, const FieldContext& ctx, int prec)
{
    Form1 w = Form1::zero(ctx, prec);
    for (const auto& sym : s)
        if (!sym.a[idx].is_zero())
            w = w + symbol_form(sym.a[idx], sym.b);
    return w;
}

} // namespace

BrauerRep BrauerRep::from_form(Form1 w)
{
    BrauerRep r(w.context(), 1, w.B.default_prec());
    r.form_ = std::move(w);
    return r;
}

BrauerRep BrauerRep::from_symbols(const FieldContext& ctx, std::vector<WittSymbol> symbols, int prec)
{
    BrauerRep r(ctx, 2, prec);
    for (const auto& s : symbols) {
        require(s.a.length() == 2, ErrorCode::Precondition, "level-2 symbols need Witt vectors of length 2");
        require(!s.b.is_zero(), ErrorCode::DivisionByZero, "symbol with zero second slot");
        require(&context_of(s.b) == &ctx, ErrorCode::ContextMismatch, "symbol over a different field");
    }
    r.symbols_ = std::move(symbols);
    return r;
}

const Form1& BrauerRep::form() const
{
    require(level_ == 1, ErrorCode::Precondition, "level-2 class has no single form");
    return *form_;
}

const std::vector<WittSymbol>& BrauerRep::symbols() const
{
    require(level_ == 2, ErrorCode::Precondition, "level-1 class is stored as a form");
    return symbols_;
}

BrauerRep BrauerRep::operator+(const BrauerRep& o) const
{
    require(level_ == o.level_, ErrorCode::Precondition, "classes of different levels");
    require(ctx_ == o.ctx_, ErrorCode::ContextMismatch, "classes over different fields");
    if (level_ == 1)
        return from_form(*form_ + *o.form_);
    BrauerRep r = *this;
    r.symbols_.insert(r.symbols_.end(), o.symbols_.begin(), o.symbols_.end());
    return r;
}

BrauerRep BrauerRep::operator-() const
{
    if (level_ == 1)
        return from_form(-*form_);
    BrauerRep r = *this;
    for (auto& s : r.symbols_)
        s.a = -s.a;
    return r;
}

BrauerRep symbol_class(const WittF& a, const Series& b)
{
    require(!b.is_zero(), ErrorCode::DivisionByZero, "second slot is zero");
    const FieldContext& ctx = context_of(b);
    if (a.length() == 1)
        return BrauerRep::from_form(symbol_form(a[0], b));
    return BrauerRep::from_symbols(ctx, {{a, b}}, b.default_prec());
}

BrauerRep map_V(const BrauerRep& x)
{
    require(x.level() == 1, ErrorCode::Precondition, "V acts on level-1 classes");
    const Form1& w = x.form();
    const FieldContext& ctx = x.context();
    int prec = x.default_prec();
    Series zero = series_zero(ctx, prec);
    std::vector<WittSymbol> out;
    // A dtheta + B dt = (A theta) dlog theta + (t B) dlog t
    if (ctx.p_rank() == 1 && !w.A.is_zero())
        out.push_back({WittF(zero, w.A * series_theta(ctx, prec)), series_theta(ctx, prec)});
    if (!w.B.is_zero())
        out.push_back({WittF(zero, w.beta()), series_t(ctx, prec)});
    return BrauerRep::from_symbols(ctx, std::move(out), prec);
}

BrauerRep map_R1(const BrauerRep& x)
{
    require(x.level() == 2, ErrorCode::Precondition, "R acts on level-2 classes");
    return BrauerRep::from_form(form_of_component(x.symbols(), 0, x.context(), x.default_prec()));
}

ZeroDecision is_zero(const BrauerRep& x)
{
    ZeroDecision out;
    try {
        if (x.level() == 1) {
            SwanReport r = swan_conductor(x.form());
            out.status = r.zero_status;
            out.reason = r.reason;
            return out;
        }
        ZeroDecision top = is_zero(map_R1(x));
        if (top.status == ZeroStatus::NonZero) {
            out.status = ZeroStatus::NonZero;
            out.reason = "R1 image nonzero: " + top.reason;
            return out;
        }
        if (top.status == ZeroStatus::Unknown) {
            out.reason = "R1 image undecided: " + top.reason;
            return out;
        }
        auto g = grouped(x.symbols());
        for (const auto& s : g)
            if (!s.a[0].is_zero()) {
                out.reason = "R1 image vanishes but the class is not presented in the image of V";
                return out;
            }
        Form1 y = form_of_component(g, 1, x.context(), x.default_prec());
        ZeroDecision low = is_zero(BrauerRep::from_form(y));
        out.status = low.status;
        out.reason = "in the image of V: " + low.reason;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::PrecisionExhausted)
            throw;
        out.status = ZeroStatus::Unknown;
        out.reason = e.what();
    }
    return out;
}

std::optional<int> period(const BrauerRep& x)
{
    const int p = x.context().p();
    ZeroDecision z = is_zero(x);
    if (z.status == ZeroStatus::Unknown)
        return std::nullopt;
    if (z.status == ZeroStatus::Zero)
        return 1;
    if (x.level() == 1)
        return p;
    return is_zero(map_R1(x)).status == ZeroStatus::NonZero ? p * p : p;
}

IndexReport index_report(const BrauerRep& x)
{
    const int p = x.context().p();
    IndexReport rep;
    rep.level = x.level();
    const std::string dim_tag = "residue degrees assume Br.dim_p(l) = 0 for finite l/k";

    if (x.level() == 1) {
        SymbolPresentation nf = normal_form(x.form());
        rep.sw = nf.sw;
        rep.zero_status = nf.zero_status;
        rep.reason = nf.reason;
        SplitCertificate sc = split_certificate(nf);
        rep.normal_form = nf;
        rep.splitting = sc;
        if (nf.zero_status == ZeroStatus::Zero) {
            rep.per = 1;
            rep.ind = 1;
            rep.m = 0;
        } else if (nf.zero_status == ZeroStatus::NonZero) {
            rep.per = p;
            if (sc.status == "Verified")
                rep.ind = sc.degree;
            else
                rep.assumptions.push_back("index not certified: no verified splitting field");
            bool wild = nf.sw > 0;
            rep.m = wild ? 1 : 0;
            if (nf.type == "unramified") {
                rep.valuation = ValuationData{p, 1, 1, p, p};
            } else {
                rep.valuation = ValuationData{1, p, p, 1, p};
                rep.assumptions.push_back("valuation data: f = 1 assumes a C1 residue field");
            }
        }
    } else {
        ZeroDecision z = is_zero(x);
        rep.zero_status = z.status;
        rep.reason = z.reason;
        rep.per = period(x);
        if (rep.per) {
            rep.ind = rep.per;
            rep.assumptions.push_back("ind = per assumes Br.dim_p(l) = 0 for finite l/k");
        }
        BrauerRep top = map_R1(x);
        SwanReport top_sw = swan_conductor(top.form());
        if (z.status == ZeroStatus::Zero)
            rep.m = 0;
        else if (top_sw.sw > 0)
            rep.m = 2;
        else if (all_integral(x.symbols())) {
            Form1 y = form_of_component(x.symbols(), 1, x.context(), x.default_prec());
            rep.m = swan_conductor(y).sw == 0 ? 0 : 1;
        } else {
            rep.m = 1;
            rep.assumptions.push_back("m = 1 assumed: first Witt components are not integral");
        }
    }

    if (rep.per && rep.m) {
        int n = log_p(*rep.per, p);
        int m = std::min(*rep.m, n);
        rep.m = m;
        rep.separable_degree = ipow(p, n - m);
        rep.inseparable_degree = ipow(p, m);
        rep.assumptions.push_back(dim_tag);
    }
    return rep;
}

} // namespace pbr
