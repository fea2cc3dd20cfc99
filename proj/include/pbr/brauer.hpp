#pragma once

#include "pbr/swan.hpp"
#include "pbr/witt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pbr {

using WittF = WittVec<Series>;

// [a, b) with a of length 2.
struct WittSymbol {
    WittF a;
    Series b;
};

// Class in Br(F)[p] (level 1, a form) or Br(F)[p^2] (level 2, a sum of symbols).
class BrauerRep {
public:
    static BrauerRep from_form(Form1 w);
    // Empty list is the zero class.
    static BrauerRep from_symbols(const FieldContext& ctx, std::vector<WittSymbol> symbols, int prec = kDefaultPrecision);

    int level() const noexcept { return level_; }
    const FieldContext& context() const { return *ctx_; }
    int default_prec() const noexcept { return prec_; }
    const Form1& form() const;
    const std::vector<WittSymbol>& symbols() const;

    BrauerRep operator+(const BrauerRep& o) const;
    BrauerRep operator-() const;
    BrauerRep operator-(const BrauerRep& o) const { return *this + (-o); }

private:
    BrauerRep(const FieldContext& ctx, int level, int prec) : ctx_(&ctx), level_(level), prec_(prec) {}
    const FieldContext* ctx_;
    int level_;
    int prec_;
    std::optional<Form1> form_;
    std::vector<WittSymbol> symbols_;
};

// r = 1: a dlog b; r = 2: the symbol itself.
BrauerRep symbol_class(const WittF& a, const Series& b);

// [a, b)_1 -> [(0, a), b)_2
BrauerRep map_V(const BrauerRep& x);
// [(a0, a1), b)_2 -> [a0, b)_1
BrauerRep map_R1(const BrauerRep& x);

struct ZeroDecision {
    ZeroStatus status = ZeroStatus::Unknown;
    std::string reason;
};
ZeroDecision is_zero(const BrauerRep& x);

// p-power order, absent when the zero test is inconclusive.
std::optional<int> period(const BrauerRep& x);

struct ValuationData {
    int d = 1, e = 1, e_prime = 1, f = 1, n = 1;
};

struct IndexReport {
    int level = 1;
    ZeroStatus zero_status = ZeroStatus::Unknown;
    std::string reason;
    std::optional<int> sw;
    std::optional<int> per;
    std::optional<int> ind;
    std::optional<SymbolPresentation> normal_form;
    std::optional<SplitCertificate> splitting;
    std::optional<ValuationData> valuation;
    // smallest j with p^j x tamely ramified, and the residue degrees it predicts
    std::optional<int> m;
    std::optional<int> separable_degree;
    std::optional<int> inseparable_degree;
    std::vector<std::string> assumptions;
};
IndexReport index_report(const BrauerRep& x);

} // namespace pbr
