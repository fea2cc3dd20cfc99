#pragma once

#include "pbr/forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pbr {

enum class ZeroStatus { Zero, NonZero, Unknown };
const char* to_string(ZeroStatus z);

struct GradedSymbol {
    enum class Kind { None, WildPrimeToP, WildDivisibleByP, Tame };
    Kind kind = Kind::None;
    int level = 0;
    // WildPrimeToP: c with class c dtheta; WildDivisibleByP: beta mod k^p; Tame: AS residue.
    std::optional<Residue> value;
    // Tame only: unramified part a0 (class a0 dtheta), absent for F_q.
    std::optional<Residue> unram;

    bool is_nonzero() const;
};
const char* to_string(GradedSymbol::Kind k);

struct SwanReport {
    explicit SwanReport(Form1 r) : reduced(std::move(r)) {}

    int sw = 0;
    GradedSymbol leading;
    Form1 reduced;
    Certificate certificate;
    ZeroStatus zero_status = ZeroStatus::Unknown;
    std::string reason;
    // Level-0 coefficients after the wild moves, before any tame move.
    std::optional<Residue> raw_a0;
    std::optional<Residue> raw_b0;
};

// max(-v(A), -1-v(B), 0)
int pole_order(const Form1& w);

// Leading symbol at level j >= pole_order(w), without reducing.
GradedSymbol graded_symbol(const Form1& w, int j);

SwanReport swan_conductor(const Form1& w);

struct TameResidue {
    Residue as_residue;         // canonical representative mod P(k)
    std::optional<Residue> unram; // reduced a0 of a0 dtheta
};
TameResidue tame_residue(const Form1& w);

struct SymbolPresentation {
    explicit SymbolPresentation(Form1 t) : target(std::move(t)) {}

    // "II", "III", "I", "unramified" or "zero"
    std::string type;
    int exponent = 0;
    std::optional<Series> a;
    std::optional<Series> b;
    // Form over k left after the symbol (type I / unramified), or residual that did not reduce.
    std::optional<Form1> remainder;
    Form1 target;
    Certificate certificate;
    CertStatus certificate_status = CertStatus::Invalid;
    int sw = 0;
    ZeroStatus zero_status = ZeroStatus::Unknown;
    std::string reason;
    // Printable forms of the t-adic expansions used in the symbol.
    std::string a_string() const;
    std::string b_string() const;
};

SymbolPresentation normal_form(const Form1& w);

// Form a dlog b.
Form1 symbol_form(const Series& a, const Series& b);

struct SplitDescriptor {
    std::string kind;     // "totally-ramified", "radical", "artin-schreier"
    std::string equation; // e.g. "y^2 = t"
    int degree = 1;
};

struct SplitCertificate {
    std::vector<SplitDescriptor> descriptors;
    // "Verified", "Trivial" (zero class), "Unknown"
    std::string status;
    int degree = 1;
};

SplitCertificate split_certificate(const SymbolPresentation& sp);

// Renders an exact t-adic Laurent polynomial (or truncated series) in CLI syntax.
std::string series_string(const Series& s, const std::string& var = "t");

} // namespace pbr
