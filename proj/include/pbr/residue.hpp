#pragma once

#include "pbr/fq.hpp"
#include "pbr/laurent.hpp"
#include "pbr/ratfunc.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pbr {

enum class ResidueKind { Finite, RationalFunction, TruncatedLocal };

const char* to_string(ResidueKind k);

using LocalSeries = LaurentSeries<Fq>;

// Residue field k: F_q, F_q(x) or F_q((s)) truncated at `precision`.
// Interned like FqField; label is the p-basis element's printed name ("" for F_q).
class FieldContext {
public:
    static const FieldContext& get(int p, int n, ResidueKind kind, int precision, const std::string& label = "");

    int p() const noexcept { return p_; }
    int n() const noexcept { return n_; }
    long q() const noexcept { return static_cast<long>(fq_->q()); }
    ResidueKind kind() const noexcept { return kind_; }
    const std::string& label() const noexcept { return label_; }
    int precision() const noexcept { return precision_; }
    const FqField& fq() const noexcept { return *fq_; }
    int p_rank() const noexcept { return kind_ == ResidueKind::Finite ? 0 : 1; }

private:
    FieldContext(int p, int n, ResidueKind kind, int precision, std::string label);
    int p_;
    int n_;
    ResidueKind kind_;
    int precision_;
    std::string label_;
    const FqField* fq_;
};

class Residue {
public:
    static Residue zero(const FieldContext& ctx);
    static Residue one(const FieldContext& ctx);
    static Residue from_fq(const FieldContext& ctx, const Fq& c);
    static Residue from_int(const FieldContext& ctx, long long c);
    // The p-basis element; error for F_q.
    static Residue theta(const FieldContext& ctx);
    static Residue from_ratfunc(const FieldContext& ctx, RatFunc f);
    static Residue from_local(const FieldContext& ctx, LocalSeries f);

    const FieldContext& context() const { return *ctx_; }
    ResidueKind kind() const { return ctx_->kind(); }
    const Fq& as_fq() const { return std::get<Fq>(v_); }
    const RatFunc& as_ratfunc() const { return std::get<RatFunc>(v_); }
    const LocalSeries& as_local() const { return std::get<LocalSeries>(v_); }

    // Zero to known precision (always exact for F_q and F_q(x)).
    bool is_zero() const;
    bool is_exact() const;
    // For F_q((s)): the s-adic horizon; LocalSeries::kExact otherwise.
    int precision() const;
    // Element of F_q, if this is a constant.
    std::optional<Fq> constant_value() const;

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator-() const;
    Residue operator*(const Residue& o) const;
    Residue operator/(const Residue& o) const { return *this * o.inverse(); }
    Residue inverse() const;
    Residue frobenius() const;
    Residue pow(long long e) const;
    Residue scaled(const Fq& c) const;

    Residue zero_like() const { return zero(*ctx_); }
    Residue one_like() const { return one(*ctx_); }
    Residue times_int(long long k) const { return scaled(Fq::from_int(ctx_->fq(), k)); }
    bool same_context(const Residue& o) const noexcept { return ctx_ == o.ctx_; }
    int characteristic() const { return ctx_->p(); }

    // Structural equality (for local series: same known coefficients and horizon).
    bool operator==(const Residue& o) const;
    bool operator!=(const Residue& o) const { return !(*this == o); }
    // Difference is zero to known precision.
    bool equals_to_precision(const Residue& o) const { return (*this - o).is_zero(); }

    std::string to_string() const;
    bool is_single_term() const;

private:
    using Value = std::variant<Fq, RatFunc, LocalSeries>;
    Residue(const FieldContext& ctx, Value v) : ctx_(&ctx), v_(std::move(v)) {}
    const FieldContext* ctx_;
    Value v_;
};

// u with u^p = f, if it exists.
std::optional<Residue> pth_root(const Residue& f);

// (f_0, ..., f_{p-1}) with f = sum f_i^p theta^i; for F_q the single component f^{1/p}.
std::vector<Residue> p_basis_decompose_k(const Residue& f);

// d/dtheta; zero on F_q.
Residue derivative_k(const Residue& f);

struct CartierParts {
    Residue a; // c dtheta = a^p theta^{p-1} dtheta + dg
    Residue g;
};
CartierParts cartier_decompose(const Residue& c);

// u with u^p - u = a, if one exists in k.
std::optional<Residue> artin_schreier_solve(const Residue& a);

struct ASReduction {
    Residue rep; // canonical representative of a modulo P(k)
    Residue u;   // a = rep + u^p - u
};
ASReduction artin_schreier_reduce(const Residue& a);

// Tr_{F_q/F_p} res_s(b dc/c) for k = F_q((s)).
int schmid_invariant(const Residue& b, const Residue& c);

} // namespace pbr
