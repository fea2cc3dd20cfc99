#pragma once

#include "pbr/swan.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pbr {

// Laurent polynomial in (pi, t) over F_q; keys are (pi exponent, t exponent).
class BivarPoly {
public:
    explicit BivarPoly(const FqField& f) : f_(&f) {}
    static BivarPoly constant(const Fq& c);
    static BivarPoly monomial(const Fq& c, int i, int j);

    const FqField& field() const { return *f_; }
    const std::map<std::pair<int, int>, Fq>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator-() const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly pow(int e) const;
    // Only monomials are invertible here.
    std::optional<BivarPoly> monomial_inverse() const;

    // (a, b, u) with this = pi^a t^b u and u(0, 0) != 0, if such a split exists.
    struct MonomialSplit {
        int a = 0, b = 0;
    };
    std::optional<MonomialSplit> unit_monomial_split() const;

    std::string to_string() const;

private:
    void add_term(std::pair<int, int> k, const Fq& c);
    const FqField* f_;
    std::map<std::pair<int, int>, Fq> terms_;
};

enum class Divisor { Pi, T };
const char* to_string(Divisor d);

struct RestrictedSymbol {
    BivarPoly f;
    BivarPoly g; // unit times a monomial
};

// Sum of [f, g) plus exact terms d(e), over Frac(F_q[[pi, t]]).
struct BivariateClass {
    int p = 2;
    int n = 1;
    std::vector<RestrictedSymbol> symbols;
    std::vector<BivarPoly> exact;
    int n_pi = 20; // precision of the residue field along (t)
    int n_t = 40;  // precision of the completed field

    void add_symbol(BivarPoly f, BivarPoly g);
};

// The residue field at a divisor: F_q((pi)) along (t), F_q((t)) along (pi).
const FieldContext& residue_context(const BivariateClass& w, Divisor d);

// Re-expansion of w over the completion at d.
Form1 delta1_residue(const BivariateClass& w, Divisor d);

struct LocusReport {
    std::vector<Divisor> locus;
    std::map<Divisor, SwanReport> along;
};
LocusReport ramification_locus(const BivariateClass& w);

struct PiSymbolReport {
    PiSymbolReport(Series h_, Form1 target_) : h(std::move(h_)), target(std::move(target_)) {}

    int sw = 0;
    Series h;              // over F_q((pi))((t))
    std::string h_string;  // bivariate rendering
    std::optional<Residue> obstruction; // c with [c, t) left over
    Certificate certificate;
    CertStatus certificate_status = CertStatus::Invalid;
    Form1 target;          // h dlog(pi) + c dlog(t)
};
PiSymbolReport reduce_to_pi_symbol(const BivariateClass& w);

// Bivariate rendering of a series over F_q((pi))((t)), e.g. "2*pi*t^-2".
std::string bivariate_string(const Series& h);

} // namespace pbr
