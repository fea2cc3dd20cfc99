#pragma once

#include "pbr/laurent.hpp"
#include "pbr/residue.hpp"

#include <vector>

namespace pbr {

// Elements of F = k((t)).
using Series = LaurentSeries<Residue>;

constexpr int kDefaultPrecision = 40;

Series series_zero(const FieldContext& ctx, int prec = kDefaultPrecision);
Series series_constant(const Residue& c, int prec = kDefaultPrecision);
Series series_monomial(const Residue& c, int k, int prec = kDefaultPrecision);
Series series_t(const FieldContext& ctx, int prec = kDefaultPrecision);
Series series_theta(const FieldContext& ctx, int prec = kDefaultPrecision);

const FieldContext& context_of(const Series& f);

// Partial derivatives with respect to theta and t.
Series d_theta(const Series& f);
Series d_t(const Series& f);

// table[i][j] with f = sum_{i,j} table[i][j]^p theta^i t^j. For F_q residues the table has one row.
std::vector<std::vector<Series>> p_basis_decompose_F(const Series& f);

// Absolute horizon of the known part; kExact for exact series.
inline int horizon_of(const Series& f) { return f.horizon(); }

} // namespace pbr
