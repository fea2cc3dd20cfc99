#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace pbr::cli {

struct Elem;
using ElemPtr = std::shared_ptr<const Elem>;

struct Elem {
    enum class Kind { Int, Var, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind = Kind::Int;
    long long value = 0;   // Int literal, or the exponent of Pow
    std::string name;      // Var
    ElemPtr lhs, rhs;      // rhs unused for Neg and Pow
    std::size_t pos = 0;
};

// Witt vector literal inside sym(...): a single element, or w2(a0, a1).
struct WittLit {
    bool two = false;
    ElemPtr a0, a1;
};

struct Term {
    enum class Kind { Exact, Dlog, Sym };
    Kind kind = Kind::Exact;
    bool negated = false;
    ElemPtr coef; // Dlog only; null means 1
    ElemPtr arg;  // d(arg), dlog(arg), second slot of sym
    WittLit witt; // Sym only
};

struct Expr {
    std::vector<Term> terms;
};

struct WNode;
using WNodePtr = std::shared_ptr<const WNode>;

// Expressions for the witt command: w1(e), w2(e, e), V/F/R/P(...), + - * and unary minus.
struct WNode {
    enum class Kind { W1, W2, Op, Add, Sub, Mul, Neg };
    Kind kind = Kind::W1;
    char op = 0; // 'V', 'F', 'R', 'P'
    ElemPtr e0, e1;
    WNodePtr lhs, rhs;
    std::size_t pos = 0;
};

Expr parse_expr(const std::string& text);
ElemPtr parse_elem(const std::string& text);
WNodePtr parse_witt(const std::string& text);

std::string print(const Expr& e);
std::string print(const ElemPtr& e);
std::string print(const WNodePtr& w);

// Structural equality, ignoring positions.
bool same(const ElemPtr& a, const ElemPtr& b);
bool same(const Expr& a, const Expr& b);
bool same(const WNodePtr& a, const WNodePtr& b);

} // namespace pbr::cli
