#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wpb/errors.hpp"
#include "wpb/rational.hpp"

namespace wpb {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Int, Sym, Indexed, Bin, Neg, Call, List };
    Kind kind = Kind::Int;
    long long ival = 0;       // Int
    std::string name;         // Sym, Indexed, Call
    char op = 0;              // Bin: + - * / ^
    std::vector<ExprPtr> kids;
    int line = 0, col = 0;

    static ExprPtr integer(long long v) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Int;
        e->ival = v;
        return e;
    }
    static ExprPtr sym(std::string n) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Sym;
        e->name = std::move(n);
        return e;
    }
    static ExprPtr bin(char op, ExprPtr a, ExprPtr b) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Bin;
        e->op = op;
        e->kids = {std::move(a), std::move(b)};
        return e;
    }
    static ExprPtr neg(ExprPtr a) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Neg;
        e->kids = {std::move(a)};
        return e;
    }
    static ExprPtr call(std::string n, std::vector<ExprPtr> args) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Call;
        e->name = std::move(n);
        e->kids = std::move(args);
        return e;
    }
};

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind || a->ival != b->ival || a->name != b->name || a->op != b->op ||
        a->kids.size() != b->kids.size())
        return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!expr_equal(a->kids[i], b->kids[i])) return false;
    return true;
}

struct IntParam {
    std::string name;
    long long lo = 0, hi = 0;
    std::vector<long long> values;  // non-empty: enumerated set instead of range
    std::vector<long long> expand() const {
        if (!values.empty()) return values;
        std::vector<long long> v;
        for (long long x = lo; x <= hi; ++x) v.push_back(x);
        return v;
    }
};

/** One parsed catalog stanza. */
struct IdentitySpec {
    std::string id;
    std::string paper_eq;
    long long lattice = 1;
    std::vector<IntParam> int_params;
    std::vector<std::string> mono_params;
    // Each binding set maps every mono param to a monomial-valued expression.
    std::vector<std::map<std::string, ExprPtr>> binding_sets;
    std::vector<std::pair<std::string, ExprPtr>> lets;  // evaluated in order
    std::vector<std::string> constraints;               // documentation
    bool truncated = false;
    long long trunc_order = 40;
    ExprPtr lhs, rhs;
};

// ---- lexer ----

namespace dsldetail {

struct Token {
    enum class Type { Ident, Number, String, Punct, End };
    Type type = Type::End;
    std::string text;
    long long num = 0;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;

    int cur() const { return pos_ < src_.size() ? static_cast<unsigned char>(src_[pos_]) : -1; }

    void bump() {
        if (cur() == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void advance() {
        while (true) {
            while (std::isspace(cur())) bump();
            if (cur() == '#') {
                while (cur() != -1 && cur() != '\n') bump();
                continue;
            }
            break;
        }
        tok_ = Token();
        tok_.line = line_;
        tok_.col = col_;
        int c = cur();
        if (c == -1) {
            tok_.type = Token::Type::End;
            return;
        }
        if (std::isdigit(c)) {
            tok_.type = Token::Type::Number;
            std::string digits;
            while (std::isdigit(cur())) {
                digits += static_cast<char>(cur());
                bump();
            }
            tok_.num = std::stoll(digits);
            tok_.text = digits;
            return;
        }
        if (std::isalpha(c) || c == '_') {
            tok_.type = Token::Type::Ident;
            while (std::isalnum(cur()) || cur() == '_') {
                tok_.text += static_cast<char>(cur());
                bump();
            }
            return;
        }
        if (c == '"') {
            tok_.type = Token::Type::String;
            bump();
            while (cur() != '"') {
                if (cur() == -1) throw ParseError("unterminated string", tok_.line, tok_.col);
                tok_.text += static_cast<char>(cur());
                bump();
            }
            bump();
            return;
        }
        if (c == '.' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '.') {
            tok_.type = Token::Type::Punct;
            tok_.text = "..";
            bump();
            bump();
            return;
        }
        tok_.type = Token::Type::Punct;
        tok_.text = std::string(1, static_cast<char>(c));
        bump();
    }
};

}  // namespace dsldetail

// ---- parser ----

class Parser {
  public:
    explicit Parser(const std::string& src) : lex_(src) {}

    /** Parse a single expression (used for CLI bindings and stanza fields). */
    ExprPtr parse_expression() {
        ExprPtr e = expr();
        expect_end();
        return e;
    }

    /** Parse a whole catalog: a sequence of identity stanzas. */
    std::vector<IdentitySpec> parse_catalog() {
        std::vector<IdentitySpec> out;
        while (lex_.peek().type != dsldetail::Token::Type::End) out.push_back(stanza());
        return out;
    }

    IdentitySpec parse_identity() {
        IdentitySpec s = stanza();
        expect_end();
        return s;
    }

  private:
    dsldetail::Lexer lex_;

    [[noreturn]] void fail(const std::string& msg, const dsldetail::Token& t) {
        throw ParseError(msg + (t.text.empty() ? "" : " near '" + t.text + "'"), t.line, t.col);
    }

    dsldetail::Token expect_punct(const std::string& p) {
        auto t = lex_.next();
        if (t.type != dsldetail::Token::Type::Punct || t.text != p)
            fail("expected '" + p + "'", t);
        return t;
    }

    bool at_punct(const std::string& p) {
        return lex_.peek().type == dsldetail::Token::Type::Punct && lex_.peek().text == p;
    }

    std::string expect_ident() {
        auto t = lex_.next();
        if (t.type != dsldetail::Token::Type::Ident) fail("expected identifier", t);
        return t.text;
    }

    std::string expect_string() {
        auto t = lex_.next();
        if (t.type != dsldetail::Token::Type::String) fail("expected a quoted string", t);
        return t.text;
    }

    long long expect_integer() {
        bool negate = false;
        if (at_punct("-")) {
            lex_.next();
            negate = true;
        }
        auto t = lex_.next();
        if (t.type != dsldetail::Token::Type::Number) fail("expected an integer", t);
        return negate ? -t.num : t.num;
    }

    void expect_end() {
        auto t = lex_.peek();
        if (t.type != dsldetail::Token::Type::End) fail("unexpected trailing input", t);
    }

    ExprPtr expr() { return sum(); }

    ExprPtr sum() {
        ExprPtr a = product();
        while (at_punct("+") || at_punct("-")) {
            char op = lex_.next().text[0];
            a = Expr::bin(op, a, product());
        }
        return a;
    }

    ExprPtr product() {
        ExprPtr a = unary();
        while (at_punct("*") || at_punct("/")) {
            char op = lex_.next().text[0];
            a = Expr::bin(op, a, unary());
        }
        return a;
    }

    ExprPtr unary() {
        if (at_punct("-")) {
            auto t = lex_.next();
            ExprPtr e = Expr::neg(unary());
            const_cast<Expr*>(e.get())->line = t.line;
            const_cast<Expr*>(e.get())->col = t.col;
            return e;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr a = atom();
        if (at_punct("^")) {
            lex_.next();
            return Expr::bin('^', a, unary());
        }
        return a;
    }

    ExprPtr atom() {
        auto t = lex_.next();
        using T = dsldetail::Token::Type;
        if (t.type == T::Number) {
            auto e = Expr::integer(t.num);
            const_cast<Expr*>(e.get())->line = t.line;
            const_cast<Expr*>(e.get())->col = t.col;
            return e;
        }
        if (t.type == T::Ident) {
            if (at_punct("(")) {
                lex_.next();
                std::vector<ExprPtr> args;
                if (!at_punct(")")) {
                    args.push_back(expr());
                    while (at_punct(",")) {
                        lex_.next();
                        args.push_back(expr());
                    }
                }
                expect_punct(")");
                auto e = Expr::call(t.text, std::move(args));
                const_cast<Expr*>(e.get())->line = t.line;
                const_cast<Expr*>(e.get())->col = t.col;
                return e;
            }
            if (at_punct("[")) {
                lex_.next();
                ExprPtr idx = expr();
                expect_punct("]");
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::Indexed;
                e->name = t.text;
                e->kids = {idx};
                e->line = t.line;
                e->col = t.col;
                return e;
            }
            auto e = Expr::sym(t.text);
            const_cast<Expr*>(e.get())->line = t.line;
            const_cast<Expr*>(e.get())->col = t.col;
            return e;
        }
        if (t.type == T::Punct && t.text == "(") {
            ExprPtr e = expr();
            expect_punct(")");
            return e;
        }
        if (t.type == T::Punct && t.text == "[") {
            std::vector<ExprPtr> elems;
            if (!at_punct("]")) {
                elems.push_back(expr());
                while (at_punct(",")) {
                    lex_.next();
                    elems.push_back(expr());
                }
            }
            expect_punct("]");
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::List;
            e->kids = std::move(elems);
            e->line = t.line;
            e->col = t.col;
            return e;
        }
        fail("expected an expression", t);
    }

    IdentitySpec stanza() {
        IdentitySpec s;
        auto kw = expect_ident();
        if (kw != "identity") fail("expected 'identity'", lex_.peek());
        s.id = expect_string();
        expect_punct("{");
        while (!at_punct("}")) {
            auto field = expect_ident();
            if (field == "paper") {
                s.paper_eq = expect_string();
            } else if (field == "lattice") {
                s.lattice = expect_integer();
            } else if (field == "int") {
                IntParam p;
                p.name = expect_ident();
                auto sub = expect_ident();
                if (sub == "range") {
                    p.lo = expect_integer();
                    expect_punct("..");
                    p.hi = expect_integer();
                } else if (sub == "in") {
                    expect_punct("{");
                    p.values.push_back(expect_integer());
                    while (at_punct(",")) {
                        lex_.next();
                        p.values.push_back(expect_integer());
                    }
                    expect_punct("}");
                } else {
                    fail("expected 'range' or 'in'", lex_.peek());
                }
                s.int_params.push_back(std::move(p));
            } else if (field == "mono") {
                s.mono_params.push_back(expect_ident());
                while (at_punct(",")) {
                    lex_.next();
                    s.mono_params.push_back(expect_ident());
                }
            } else if (field == "bind") {
                std::map<std::string, ExprPtr> set;
                auto one = [&] {
                    std::string name = expect_ident();
                    expect_punct("=");
                    set[name] = expr();
                };
                one();
                while (at_punct(",")) {
                    lex_.next();
                    one();
                }
                s.binding_sets.push_back(std::move(set));
            } else if (field == "let") {
                std::string name = expect_ident();
                expect_punct("=");
                s.lets.emplace_back(name, expr());
            } else if (field == "constraint") {
                s.constraints.push_back(expect_string());
            } else if (field == "mode") {
                auto m = expect_ident();
                if (m == "exact") {
                    s.truncated = false;
                } else if (m == "truncated") {
                    s.truncated = true;
                    s.trunc_order = expect_integer();
                } else {
                    fail("expected 'exact' or 'truncated'", lex_.peek());
                }
            } else if (field == "lhs") {
                s.lhs = expr();
            } else if (field == "rhs") {
                s.rhs = expr();
            } else {
                fail("unknown stanza field '" + field + "'", lex_.peek());
            }
        }
        expect_punct("}");
        if (!s.lhs || !s.rhs)
            throw ParseError("stanza '" + s.id + "' must declare lhs and rhs", 0, 0);
        return s;
    }
};

inline ExprPtr parse_expr(const std::string& text) { return Parser(text).parse_expression(); }

// ---- printer ----

namespace dsldetail {

inline int prec_of(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Bin:
            if (e.op == '+' || e.op == '-') return 1;
            if (e.op == '*' || e.op == '/') return 2;
            return 4;  // ^
        case Expr::Kind::Neg: return 3;
        default: return 5;
    }
}

inline void print_expr(const Expr& e, std::string& out) {
    auto child = [&](const ExprPtr& c, int minp, bool strict) {
        bool paren = strict ? prec_of(*c) <= minp : prec_of(*c) < minp;
        if (paren) out += "(";
        print_expr(*c, out);
        if (paren) out += ")";
    };
    switch (e.kind) {
        case Expr::Kind::Int: out += std::to_string(e.ival); break;
        case Expr::Kind::Sym: out += e.name; break;
        case Expr::Kind::Indexed:
            out += e.name;
            out += "[";
            print_expr(*e.kids[0], out);
            out += "]";
            break;
        case Expr::Kind::Neg:
            out += "-";
            child(e.kids[0], 3, false);
            break;
        case Expr::Kind::Bin: {
            int p = prec_of(e);
            if (e.op == '^') {
                child(e.kids[0], p, true);
                out += "^";
                child(e.kids[1], p, false);
            } else {
                child(e.kids[0], p, false);
                out += std::string(1, e.op);
                child(e.kids[1], p, e.op == '-' || e.op == '/');
            }
            break;
        }
        case Expr::Kind::Call: {
            out += e.name;
            out += "(";
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                if (i) out += ", ";
                print_expr(*e.kids[i], out);
            }
            out += ")";
            break;
        }
        case Expr::Kind::List: {
            out += "[";
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                if (i) out += ", ";
                print_expr(*e.kids[i], out);
            }
            out += "]";
            break;
        }
    }
}

}  // namespace dsldetail

inline std::string print_expr(const ExprPtr& e) {
    std::string out;
    dsldetail::print_expr(*e, out);
    return out;
}

inline std::string print_identity(const IdentitySpec& s) {
    std::string out = "identity \"" + s.id + "\" {\n";
    if (!s.paper_eq.empty()) out += "  paper \"" + s.paper_eq + "\"\n";
    out += "  lattice " + std::to_string(s.lattice) + "\n";
    for (const auto& p : s.int_params) {
        out += "  int " + p.name;
        if (!p.values.empty()) {
            out += " in {";
            for (std::size_t i = 0; i < p.values.size(); ++i)
                out += (i ? "," : "") + std::to_string(p.values[i]);
            out += "}";
        } else {
            out += " range " + std::to_string(p.lo) + ".." + std::to_string(p.hi);
        }
        out += "\n";
    }
    if (!s.mono_params.empty()) {
        out += "  mono ";
        for (std::size_t i = 0; i < s.mono_params.size(); ++i)
            out += (i ? ", " : "") + s.mono_params[i];
        out += "\n";
    }
    for (const auto& set : s.binding_sets) {
        out += "  bind ";
        bool first = true;
        for (const auto& [name, v] : set) {
            if (!first) out += ", ";
            out += name + " = " + print_expr(v);
            first = false;
        }
        out += "\n";
    }
    for (const auto& [name, v] : s.lets) out += "  let " + name + " = " + print_expr(v) + "\n";
    for (const auto& c : s.constraints) out += "  constraint \"" + c + "\"\n";
    out += s.truncated ? "  mode truncated " + std::to_string(s.trunc_order) + "\n"
                       : "  mode exact\n";
    out += "  lhs " + print_expr(s.lhs) + "\n";
    out += "  rhs " + print_expr(s.rhs) + "\n";
    out += "}\n";
    return out;
}

}  // namespace wpb
