#include "syntax.hpp"

#include "pbr/error.hpp"

#include <cctype>

namespace pbr::cli {

namespace {

struct Token {
    enum class Type { Int, Ident, Punct, End };
    Type type = Type::End;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            out.push_back({Token::Type::Int, s.substr(start, i - start), start});
        } else if (std::isalpha(c) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Token::Type::Ident, s.substr(start, i - start), start});
        } else if (c == 0xCF && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x80) {
            i += 2;
            out.push_back({Token::Type::Ident, "pi", start});
        } else if (std::string("+-*/^(),;").find(static_cast<char>(c)) != std::string::npos) {
            ++i;
            out.push_back({Token::Type::Punct, std::string(1, static_cast<char>(c)), start});
        } else {
            throw ParseError(start, "unexpected character '" + std::string(1, static_cast<char>(c)) + "' at position " +
                                        std::to_string(start));
        }
    }
    out.push_back({Token::Type::End, "", s.size()});
    return out;
}

ElemPtr make(Elem e) { return std::make_shared<const Elem>(std::move(e)); }
WNodePtr make(WNode w) { return std::make_shared<const WNode>(std::move(w)); }

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    Expr expr()
    {
        Expr e;
        bool neg = accept("-");
        e.terms.push_back(term());
        e.terms.back().negated = neg;
        while (peek_is("+") || peek_is("-")) {
            bool minus = next().text == "-";
            e.terms.push_back(term());
            e.terms.back().negated = minus;
        }
        finish("'+', '-' or end of input");
        return e;
    }

    ElemPtr whole_elem()
    {
        ElemPtr e = elem();
        finish("operator or end of input");
        return e;
    }

    WNodePtr whole_witt()
    {
        WNodePtr w = wexpr();
        finish("'+', '-', '*' or end of input");
        return w;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
    bool peek_is(const char* p, std::size_t k = 0) const
    {
        const Token& t = peek(k);
        return t.type == Token::Type::Punct && t.text == p;
    }
    bool peek_ident(const char* name, std::size_t k = 0) const
    {
        const Token& t = peek(k);
        return t.type == Token::Type::Ident && t.text == name;
    }
    bool peek_call(const char* name) const { return peek_ident(name) && peek_is("(", 1); }
    const Token& next() { return toks_[i_++]; }
    bool accept(const char* p)
    {
        if (!peek_is(p))
            return false;
        ++i_;
        return true;
    }

    [[noreturn]] void error(const std::string& expected) const
    {
        const Token& t = peek();
        std::string found = t.type == Token::Type::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.pos, "expected " + expected + " at position " + std::to_string(t.pos) + ", found " + found);
    }

    void expect(const char* p, const std::string& what)
    {
        if (!accept(p))
            error(what);
    }

    void finish(const std::string& expected)
    {
        if (peek().type != Token::Type::End)
            error(expected);
    }

    Term term()
    {
        Term t;
        if (peek_call("d")) {
            next();
            next();
            t.kind = Term::Kind::Exact;
            t.arg = elem();
            expect(")", "')'");
            return t;
        }
        if (peek_call("sym")) {
            next();
            next();
            t.kind = Term::Kind::Sym;
            if (peek_call("w2")) {
                next();
                next();
                t.witt.two = true;
                t.witt.a0 = elem();
                expect(",", "','");
                t.witt.a1 = elem();
                expect(")", "')'");
            } else {
                t.witt.a0 = elem();
            }
            expect(";", "';'");
            t.arg = elem();
            expect(")", "')'");
            return t;
        }
        t.kind = Term::Kind::Dlog;
        if (!peek_call("dlog")) {
            t.coef = eterm();
            accept("*");
            if (!peek_call("dlog"))
                error("'dlog('");
        }
        next();
        next();
        t.arg = elem();
        expect(")", "')'");
        return t;
    }

    ElemPtr elem()
    {
        ElemPtr l = eterm();
        while (peek_is("+") || peek_is("-")) {
            const Token& op = next();
            ElemPtr r = eterm();
            l = make(Elem{op.text == "+" ? Elem::Kind::Add : Elem::Kind::Sub, 0, "", l, r, op.pos});
        }
        return l;
    }

    ElemPtr eterm()
    {
        ElemPtr l = eunary();
        for (;;) {
            if (peek_is("*") && peek_ident("dlog", 1))
                break;
            if (!peek_is("*") && !peek_is("/"))
                break;
            const Token& op = next();
            ElemPtr r = eunary();
            l = make(Elem{op.text == "*" ? Elem::Kind::Mul : Elem::Kind::Div, 0, "", l, r, op.pos});
        }
        return l;
    }

    ElemPtr eunary()
    {
        if (peek_is("-")) {
            std::size_t pos = next().pos;
            return make(Elem{Elem::Kind::Neg, 0, "", eunary(), nullptr, pos});
        }
        return epow();
    }

    ElemPtr epow()
    {
        ElemPtr base = eprimary();
        if (peek_is("^")) {
            std::size_t pos = next().pos;
            bool neg = accept("-");
            if (peek().type != Token::Type::Int)
                error("integer exponent");
            long long e = std::stoll(next().text);
            return make(Elem{Elem::Kind::Pow, neg ? -e : e, "", base, nullptr, pos});
        }
        return base;
    }

    ElemPtr eprimary()
    {
        const Token& t = peek();
        if (t.type == Token::Type::Int) {
            next();
            if (t.text.size() > 12)
                throw ParseError(t.pos, "integer literal too long at position " + std::to_string(t.pos));
            return make(Elem{Elem::Kind::Int, std::stoll(t.text), "", nullptr, nullptr, t.pos});
        }
        if (t.type == Token::Type::Ident) {
            if (peek_is("(", 1))
                error("variable, integer or '('");
            next();
            return make(Elem{Elem::Kind::Var, 0, t.text, nullptr, nullptr, t.pos});
        }
        if (accept("(")) {
            ElemPtr e = elem();
            expect(")", "')'");
            return e;
        }
        error("variable, integer or '('");
    }

    WNodePtr wexpr()
    {
        WNodePtr l = wterm();
        while (peek_is("+") || peek_is("-")) {
            const Token& op = next();
            WNodePtr r = wterm();
            l = make(WNode{op.text == "+" ? WNode::Kind::Add : WNode::Kind::Sub, 0, nullptr, nullptr, l, r, op.pos});
        }
        return l;
    }

    WNodePtr wterm()
    {
        WNodePtr l = wunary();
        while (peek_is("*")) {
            std::size_t pos = next().pos;
            WNodePtr r = wunary();
            l = make(WNode{WNode::Kind::Mul, 0, nullptr, nullptr, l, r, pos});
        }
        return l;
    }

    WNodePtr wunary()
    {
        if (peek_is("-")) {
            std::size_t pos = next().pos;
            return make(WNode{WNode::Kind::Neg, 0, nullptr, nullptr, wunary(), nullptr, pos});
        }
        return wfactor();
    }

    WNodePtr wfactor()
    {
        std::size_t pos = peek().pos;
        if (peek_call("w1")) {
            next();
            next();
            ElemPtr a = elem();
            expect(")", "')'");
            return make(WNode{WNode::Kind::W1, 0, a, nullptr, nullptr, nullptr, pos});
        }
        if (peek_call("w2")) {
            next();
            next();
            ElemPtr a = elem();
            expect(",", "','");
            ElemPtr b = elem();
            expect(")", "')'");
            return make(WNode{WNode::Kind::W2, 0, a, b, nullptr, nullptr, pos});
        }
        for (const char* op : {"V", "F", "R", "P"})
            if (peek_call(op)) {
                next();
                next();
                WNodePtr a = wexpr();
                expect(")", "')'");
                return make(WNode{WNode::Kind::Op, op[0], nullptr, nullptr, a, nullptr, pos});
            }
        if (accept("(")) {
            WNodePtr w = wexpr();
            expect(")", "')'");
            return w;
        }
        error("w1(...), w2(...), V/F/R/P(...) or '('");
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

int prec_of(const ElemPtr& e)
{
    switch (e->kind) {
    case Elem::Kind::Add:
    case Elem::Kind::Sub:
        return 1;
    case Elem::Kind::Mul:
    case Elem::Kind::Div:
        return 2;
    case Elem::Kind::Neg:
        return 3;
    case Elem::Kind::Pow:
        return 4;
    default:
        return 5;
    }
}

std::string print_at(const ElemPtr& e, int need)
{
    std::string s;
    switch (e->kind) {
    case Elem::Kind::Int:
        s = std::to_string(e->value);
        break;
    case Elem::Kind::Var:
        s = e->name;
        break;
    case Elem::Kind::Add:
        s = print_at(e->lhs, 1) + "+" + print_at(e->rhs, 2);
        break;
    case Elem::Kind::Sub:
        s = print_at(e->lhs, 1) + "-" + print_at(e->rhs, 2);
        break;
    case Elem::Kind::Mul:
        s = print_at(e->lhs, 2) + "*" + print_at(e->rhs, 3);
        break;
    case Elem::Kind::Div:
        s = print_at(e->lhs, 2) + "/" + print_at(e->rhs, 3);
        break;
    case Elem::Kind::Neg:
        s = "-" + print_at(e->lhs, 3);
        break;
    case Elem::Kind::Pow:
        s = print_at(e->lhs, 5) + "^" + std::to_string(e->value);
        break;
    }
    return prec_of(e) < need ? "(" + s + ")" : s;
}

int wprec(const WNodePtr& w)
{
    switch (w->kind) {
    case WNode::Kind::Add:
    case WNode::Kind::Sub:
        return 1;
    case WNode::Kind::Mul:
        return 2;
    case WNode::Kind::Neg:
        return 3;
    default:
        return 4;
    }
}

std::string wprint_at(const WNodePtr& w, int need)
{
    std::string s;
    switch (w->kind) {
    case WNode::Kind::W1:
        s = "w1(" + print(w->e0) + ")";
        break;
    case WNode::Kind::W2:
        s = "w2(" + print(w->e0) + ", " + print(w->e1) + ")";
        break;
    case WNode::Kind::Op:
        s = std::string(1, w->op) + "(" + wprint_at(w->lhs, 0) + ")";
        break;
    case WNode::Kind::Add:
        s = wprint_at(w->lhs, 1) + " + " + wprint_at(w->rhs, 2);
        break;
    case WNode::Kind::Sub:
        s = wprint_at(w->lhs, 1) + " - " + wprint_at(w->rhs, 2);
        break;
    case WNode::Kind::Mul:
        s = wprint_at(w->lhs, 2) + "*" + wprint_at(w->rhs, 3);
        break;
    case WNode::Kind::Neg:
        s = "-" + wprint_at(w->lhs, 3);
        break;
    }
    return wprec(w) < need ? "(" + s + ")" : s;
}

std::string print_term(const Term& t)
{
    switch (t.kind) {
    case Term::Kind::Exact:
        return "d(" + print(t.arg) + ")";
    case Term::Kind::Sym: {
        std::string a = t.witt.two ? "w2(" + print(t.witt.a0) + ", " + print(t.witt.a1) + ")" : print(t.witt.a0);
        return "sym(" + a + "; " + print(t.arg) + ")";
    }
    default:
        break;
    }
    std::string out;
    if (t.coef)
        out = (t.coef->kind == Elem::Kind::Neg ? "(" + print(t.coef) + ")" : print_at(t.coef, 2)) + "*";
    return out + "dlog(" + print(t.arg) + ")";
}

} // namespace

Expr parse_expr(const std::string& text) { return Parser(text).expr(); }
ElemPtr parse_elem(const std::string& text) { return Parser(text).whole_elem(); }
WNodePtr parse_witt(const std::string& text) { return Parser(text).whole_witt(); }

std::string print(const ElemPtr& e) { return print_at(e, 0); }
std::string print(const WNodePtr& w) { return wprint_at(w, 0); }

std::string print(const Expr& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const Term& t = e.terms[i];
        if (i == 0)
            out += t.negated ? "-" : "";
        else
            out += t.negated ? " - " : " + ";
        out += print_term(t);
    }
    return out;
}

bool same(const ElemPtr& a, const ElemPtr& b)
{
    if (!a || !b)
        return !a && !b;
    return a->kind == b->kind && a->value == b->value && a->name == b->name && same(a->lhs, b->lhs) &&
           same(a->rhs, b->rhs);
}

bool same(const Expr& a, const Expr& b)
{
    if (a.terms.size() != b.terms.size())
        return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const Term& x = a.terms[i];
        const Term& y = b.terms[i];
        if (x.kind != y.kind || x.negated != y.negated || !same(x.coef, y.coef) || !same(x.arg, y.arg) ||
            x.witt.two != y.witt.two || !same(x.witt.a0, y.witt.a0) || !same(x.witt.a1, y.witt.a1))
            return false;
    }
    return true;
}

bool same(const WNodePtr& a, const WNodePtr& b)
{
    if (!a || !b)
        return !a && !b;
    return a->kind == b->kind && a->op == b->op && same(a->e0, b->e0) && same(a->e1, b->e1) && same(a->lhs, b->lhs) &&
           same(a->rhs, b->rhs);
}

} // namespace pbr::cli
