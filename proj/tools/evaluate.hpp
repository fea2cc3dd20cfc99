#pragma once

#include "syntax.hpp"

#include "pbr/brauer.hpp"
#include "pbr/surface_local.hpp"

namespace pbr::cli {

struct Session {
    int p = 2;
    int n = 1;
    ResidueKind residue = ResidueKind::RationalFunction;
    int prec = kDefaultPrecision;

    long q() const;
    const FieldContext& field() const;
    // Name of the residue p-basis variable, empty for F_q.
    std::string theta_name() const;
};

Series eval_series(const ElemPtr& e, const Session& s);

// Level 1 when every term is a p-symbol, level 2 when some sym(w2(...); b) occurs.
BrauerRep eval_class(const Expr& e, const Session& s);

WittF eval_witt(const WNodePtr& w, const Session& s);

BivarPoly eval_bivar(const ElemPtr& e, const Session& s);
BivariateClass eval_bivariate_class(const Expr& e, const Session& s);

} // namespace pbr::cli
