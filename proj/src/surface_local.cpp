#include "pbr/surface_local.hpp"

#include <algorithm>

namespace pbr {

BivarPoly BivarPoly::constant(const Fq& c) { return monomial(c, 0, 0); }

BivarPoly BivarPoly::monomial(const Fq& c, int i, int j)
{
    BivarPoly r(c.field());
    r.add_term({i, j}, c);
    return r;
}

void BivarPoly::add_term(std::pair<int, int> k, const Fq& c)
{
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!c.is_zero())
            terms_.emplace(k, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero())
        terms_.erase(it);
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const
{
    require(f_ == o.f_, ErrorCode::ContextMismatch, "polynomials over different fields");
    BivarPoly r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add_term(k, c);
    return r;
}

BivarPoly BivarPoly::operator-() const
{
    BivarPoly r(*f_);
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + (-o); }

BivarPoly BivarPoly::operator*(const BivarPoly& o) const
{
    require(f_ == o.f_, ErrorCode::ContextMismatch, "polynomials over different fields");
    BivarPoly r(*f_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

BivarPoly BivarPoly::pow(int e) const
{
    if (e < 0) {
        auto inv = monomial_inverse();
        require(inv.has_value(), ErrorCode::Unsupported, "negative powers need a monomial base");
        return inv->pow(-e);
    }
    BivarPoly r = constant(Fq::one(*f_));
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

std::optional<BivarPoly> BivarPoly::monomial_inverse() const
{
    if (terms_.size() != 1)
        return std::nullopt;
    const auto& [k, c] = *terms_.begin();
    return monomial(c.inverse(), -k.first, -k.second);
}

std::optional<BivarPoly::MonomialSplit> BivarPoly::unit_monomial_split() const
{
    if (terms_.empty())
        return std::nullopt;
    MonomialSplit s{terms_.begin()->first.first, terms_.begin()->first.second};
    for (const auto& [k, c] : terms_) {
        s.a = std::min(s.a, k.first);
        s.b = std::min(s.b, k.second);
    }
    if (!terms_.count({s.a, s.b}))
        return std::nullopt;
    return s;
}

namespace {

std::string monomial_string(const Fq& c, int i, int j)
{
    std::string m;
    auto var = [&](const char* v, int e) {
        if (e == 0)
            return;
        if (!m.empty())
            m += "*";
        m += v;
        if (e != 1)
            m += "^" + std::to_string(e);
    };
    var("pi", i);
    var("t", j);
    bool one = c == Fq::one(c.field());
    if (m.empty())
        return c.is_single_term() ? c.to_string() : "(" + c.to_string() + ")";
    if (one)
        return m;
    return (c.is_single_term() ? c.to_string() : "(" + c.to_string() + ")") + "*" + m;
}

} // namespace

std::string BivarPoly::to_string() const
{
    // by t exponent, then pi exponent
    std::vector<std::pair<std::pair<int, int>, Fq>> v(terms_.begin(), terms_.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
        return std::pair(l.first.second, l.first.first) < std::pair(r.first.second, r.first.first);
    });
    std::string out;
    for (const auto& [k, c] : v) {
        if (!out.empty())
            out += "+";
        out += monomial_string(c, k.first, k.second);
    }
    return out.empty() ? "0" : out;
}

const char* to_string(Divisor d) { return d == Divisor::Pi ? "(pi)" : "(t)"; }

void BivariateClass::add_symbol(BivarPoly f, BivarPoly g)
{
    require(g.unit_monomial_split().has_value(), ErrorCode::Precondition,
            "second slot must be a unit times a monomial in pi and t");
    symbols.push_back({std::move(f), std::move(g)});
}

const FieldContext& residue_context(const BivariateClass& w, Divisor d)
{
    if (d == Divisor::T)
        return FieldContext::get(w.p, w.n, ResidueKind::TruncatedLocal, w.n_pi, "pi");
    return FieldContext::get(w.p, w.n, ResidueKind::TruncatedLocal, w.n_t, "t");
}

namespace {

int series_prec(const BivariateClass& w, Divisor d) { return d == Divisor::T ? w.n_t : w.n_pi; }

Series expand(const BivarPoly& f, const FieldContext& k, Divisor d, int prec)
{
    const FqField& F = k.fq();
    std::map<int, std::vector<std::pair<int, Fq>>> by_outer;
    for (const auto& [key, c] : f.terms()) {
        int inner = d == Divisor::T ? key.first : key.second;
        int outer = d == Divisor::T ? key.second : key.first;
        by_outer[outer].emplace_back(inner, c);
    }
    Series s = series_zero(k, prec);
    for (const auto& [outer, inner_terms] : by_outer) {
        LocalSeries c(Fq::zero(F), k.precision());
        for (const auto& [i, v] : inner_terms)
            c = c + LocalSeries::monomial(v, i, k.precision());
        s = s + series_monomial(Residue::from_local(k, c), outer, prec);
    }
    return s;
}

} // namespace

Form1 delta1_residue(const BivariateClass& w, Divisor d)
{
    const FieldContext& k = residue_context(w, d);
    int prec = series_prec(w, d);
    Form1 out = Form1::zero(k, prec);
    for (const auto& s : w.symbols) {
        if (s.f.is_zero())
            continue;
        out = out + symbol_form(expand(s.f, k, d, prec), expand(s.g, k, d, prec));
    }
    for (const auto& e : w.exact)
        out = out + d_F(expand(e, k, d, prec));
    return out;
}

LocusReport ramification_locus(const BivariateClass& w)
{
    LocusReport r;
    for (Divisor d : {Divisor::Pi, Divisor::T}) {
        SwanReport s = swan_conductor(delta1_residue(w, d));
        bool ramified = s.sw > 0 || (s.leading.value && !s.leading.value->is_zero());
        if (ramified)
            r.locus.push_back(d);
        r.along.emplace(d, std::move(s));
    }
    return r;
}

std::string bivariate_string(const Series& h)
{
    if (h.is_zero())
        return "0";
    const FieldContext& k = context_of(h);
    std::vector<std::string> parts;
    for (int j = h.low(); j <= h.high(); ++j) {
        const Residue c = h.coeff(j);
        if (c.is_zero())
            continue;
        const LocalSeries& s = c.as_local();
        for (int i = s.low(); i <= s.high(); ++i) {
            Fq v = s.coeff(i);
            if (v.is_zero())
                continue;
            parts.push_back(k.label() == "pi" ? monomial_string(v, i, j) : monomial_string(v, j, i));
        }
    }
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : "+") + p;
    return out.empty() ? "0" : out;
}

PiSymbolReport reduce_to_pi_symbol(const BivariateClass& w)
{
    LocusReport loc = ramification_locus(w);
    require(std::find(loc.locus.begin(), loc.locus.end(), Divisor::Pi) == loc.locus.end(), ErrorCode::Precondition,
            "class is ramified along (pi)");
    const int m = loc.along.at(Divisor::T).sw;
    require(m < w.p, ErrorCode::Precondition,
            "Swan conductor along (t) is " + std::to_string(m) + ", needs to be below p = " + std::to_string(w.p));

    const FieldContext& k = residue_context(w, Divisor::T);
    const int prec = w.n_t;
    Form1 omega = delta1_residue(w, Divisor::T);
    Residue pi = Residue::theta(k);
    Series h = series_zero(k, prec);
    Series pi_s = series_theta(k, prec);
    auto target_of = [&](const Series& hh) { return symbol_form(hh, pi_s); };

    SwanReport last = swan_conductor(omega);
    for (int it = 0; it < 2 * m + 8; ++it) {
        last = swan_conductor(omega - target_of(h));
        if (last.sw > 0) {
            // level i < p: class gamma t^-i dpi = (gamma pi t^-i) dlog pi
            h = h + series_monomial(*last.leading.value * pi, -last.sw, prec);
            continue;
        }
        if (last.raw_a0 && !last.raw_a0->is_zero()) {
            h = h + series_constant(*last.raw_a0 * pi, prec);
            continue;
        }
        break;
    }
    require(last.sw == 0, ErrorCode::PrecisionExhausted, "reduction to a pi-symbol did not terminate");

    PiSymbolReport rep(h, target_of(h) + last.reduced);
    rep.sw = m;
    rep.h_string = bivariate_string(h);
    rep.certificate = last.certificate;
    if (last.leading.value && !last.leading.value->is_zero())
        rep.obstruction = *last.leading.value;
    rep.certificate_status = cert_verify(omega, rep.target, rep.certificate);
    return rep;
}

} // namespace pbr
