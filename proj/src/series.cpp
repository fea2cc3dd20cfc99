#include "pbr/series.hpp"

#include <map>

namespace pbr {

Series series_zero(const FieldContext& ctx, int prec) { return Series(Residue::zero(ctx), prec); }

Series series_constant(const Residue& c, int prec) { return series_monomial(c, 0, prec); }

Series series_monomial(const Residue& c, int k, int prec)
{
    if (c.is_zero() && c.is_exact())
        return Series(c.zero_like(), prec);
    return Series::monomial(c, k, prec);
}

Series series_t(const FieldContext& ctx, int prec) { return series_monomial(Residue::one(ctx), 1, prec); }

Series series_theta(const FieldContext& ctx, int prec) { return series_constant(Residue::theta(ctx), prec); }

const FieldContext& context_of(const Series& f) { return f.zero_coeff().context(); }

Series d_theta(const Series& f)
{
    return f.map_coeffs([](const Residue& c) { return derivative_k(c); });
}

Series d_t(const Series& f) { return f.derivative(); }

std::vector<std::vector<Series>> p_basis_decompose_F(const Series& f)
{
    const FieldContext& ctx = context_of(f);
    int p = ctx.p();
    int rows = ctx.p_rank() == 0 ? 1 : p;
    std::vector<std::vector<std::map<int, Residue>>> terms(static_cast<std::size_t>(rows),
                                                           std::vector<std::map<int, Residue>>(static_cast<std::size_t>(p)));
    if (!f.is_zero())
        for (int k = f.low(); k <= f.high(); ++k) {
            Residue c = f.coeff(k);
            if (c.is_zero())
                continue;
            int j = ((k % p) + p) % p;
            int m = (k - j) / p;
            std::vector<Residue> parts = p_basis_decompose_k(c);
            for (int i = 0; i < rows; ++i)
                if (!parts[static_cast<std::size_t>(i)].is_zero())
                    terms[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].emplace(m, parts[static_cast<std::size_t>(i)]);
        }
    std::vector<std::vector<Series>> out(static_cast<std::size_t>(rows));
    Residue zero = Residue::zero(ctx);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < p; ++j) {
            int h = Series::kExact;
            if (!f.is_exact()) {
                int a = f.horizon() - j;
                h = a >= 0 ? (a + p - 1) / p : -((-a) / p);
            }
            const auto& t = terms[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (t.empty()) {
                out[static_cast<std::size_t>(i)].push_back(Series(zero, 0, {}, h, f.default_prec()));
                continue;
            }
            int lo = t.begin()->first;
            int hi = t.rbegin()->first;
            std::vector<Residue> c(static_cast<std::size_t>(hi - lo + 1), zero);
            for (const auto& [m, v] : t)
                c[static_cast<std::size_t>(m - lo)] = v;
            out[static_cast<std::size_t>(i)].push_back(Series(zero, lo, std::move(c), h, f.default_prec()));
        }
    return out;
}

} // namespace pbr
