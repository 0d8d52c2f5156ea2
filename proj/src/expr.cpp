#include "gconvex/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

namespace gconvex {
namespace {

bool is_const(const ExprPtr& e) { return e->kind == ExprKind::Constant; }

ExprPtr make(ExprKind k, double v, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->value = v;
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

// Applies a binary op to raw doubles, mirroring eval()'s domain rules.
// Returns nullopt when the result would be an error or non-finite, in
// which case the caller keeps the unfolded node.
std::optional<double> fold_binary(ExprKind k, double a, double b) {
    double r;
    switch (k) {
        case ExprKind::Add: r = a + b; break;
        case ExprKind::Sub: r = a - b; break;
        case ExprKind::Mul: r = a * b; break;
        case ExprKind::Div:
            if (b == 0.0) return std::nullopt;
            r = a / b;
            break;
        case ExprKind::Pow:
            if (a == 0.0) {
                if (b < 0.0) return std::nullopt;
                r = (b == 0.0) ? 1.0 : 0.0;
            } else if (a < 0.0) {
                if (std::floor(b) != b) return std::nullopt;
                r = std::pow(a, b);
            } else {
                r = std::pow(a, b);
            }
            break;
        default: return std::nullopt;
    }
    if (!std::isfinite(r)) return std::nullopt;
    return r;
}

std::optional<double> fold_unary(ExprKind k, double a) {
    double r;
    switch (k) {
        case ExprKind::Neg: r = -a; break;
        case ExprKind::Exp: r = std::exp(a); break;
        case ExprKind::Log:
            if (a <= 0.0) return std::nullopt;
            r = std::log(a);
            break;
        case ExprKind::Sqrt:
            if (a < 0.0) return std::nullopt;
            r = std::sqrt(a);
            break;
        default: return std::nullopt;
    }
    if (!std::isfinite(r)) return std::nullopt;
    return r;
}

ExprPtr unary(ExprKind k, ExprPtr u) {
    if (is_const(u)) {
        if (auto v = fold_unary(k, u->value)) return make(ExprKind::Constant, *v, nullptr, nullptr);
    }
    return make(k, 0.0, std::move(u), nullptr);
}

ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b) {
    if (is_const(a) && is_const(b)) {
        if (auto v = fold_binary(k, a->value, b->value))
            return make(ExprKind::Constant, *v, nullptr, nullptr);
    }
    return make(k, 0.0, std::move(a), std::move(b));
}

}  // namespace

namespace ast {

ExprPtr constant(double v) { return make(ExprKind::Constant, v, nullptr, nullptr); }
ExprPtr variable() { return make(ExprKind::Variable, 0.0, nullptr, nullptr); }
ExprPtr neg(ExprPtr u) { return unary(ExprKind::Neg, std::move(u)); }
ExprPtr exp(ExprPtr u) { return unary(ExprKind::Exp, std::move(u)); }
ExprPtr log(ExprPtr u) { return unary(ExprKind::Log, std::move(u)); }
ExprPtr sqrt(ExprPtr u) { return unary(ExprKind::Sqrt, std::move(u)); }
ExprPtr add(ExprPtr a, ExprPtr b) { return binary(ExprKind::Add, std::move(a), std::move(b)); }
ExprPtr sub(ExprPtr a, ExprPtr b) { return binary(ExprKind::Sub, std::move(a), std::move(b)); }
ExprPtr mul(ExprPtr a, ExprPtr b) { return binary(ExprKind::Mul, std::move(a), std::move(b)); }
ExprPtr div(ExprPtr a, ExprPtr b) { return binary(ExprKind::Div, std::move(a), std::move(b)); }
ExprPtr pow(ExprPtr a, ExprPtr b) { return binary(ExprKind::Pow, std::move(a), std::move(b)); }

}  // namespace ast

bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    if (a->kind == ExprKind::Constant) return a->value == b->value;
    return equal(a->left, b->left) && equal(a->right, b->right);
}

// ---------------------------------------------------------------------------
// Parser: hand-rolled recursive descent over a token stream.

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    double number = 0.0;
    std::string ident;
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_.offset = pos_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': current_.kind = Tok::Plus; ++pos_; return;
            case '-': current_.kind = Tok::Minus; ++pos_; return;
            case '*': current_.kind = Tok::Star; ++pos_; return;
            case '/': current_.kind = Tok::Slash; ++pos_; return;
            case '^': current_.kind = Tok::Caret; ++pos_; return;
            case '(': current_.kind = Tok::LParen; ++pos_; return;
            case ')': current_.kind = Tok::RParen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_.kind = Tok::Ident;
            current_.ident = std::string(text_.substr(start, pos_ - start));
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    void lex_number() {
        std::size_t start = pos_;
        bool any_digit = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            any_digit = true;
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                any_digit = true;
            }
        }
        if (!any_digit) throw ParseError("malformed number literal", start);
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark;  // 'e' belongs to the next token, not this literal
            }
        }
        double v = 0.0;
        auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (res.ec != std::errc()) throw ParseError("malformed number literal", start);
        current_.kind = Tok::Number;
        current_.number = v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    ExprPtr run() {
        ExprPtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) throw ParseError("unexpected trailing input", t.offset);
        return e;
    }

private:
    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                e = ast::add(std::move(e), term());
            } else if (k == Tok::Minus) {
                lex_.take();
                e = ast::sub(std::move(e), term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = unary();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.take();
                e = ast::mul(std::move(e), unary());
            } else if (k == Tok::Slash) {
                lex_.take();
                e = ast::div(std::move(e), unary());
            } else {
                return e;
            }
        }
    }

    ExprPtr unary() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            return ast::neg(unary());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            return ast::pow(std::move(base), unary());  // right-assoc, allows x^-2
        }
        return base;
    }

    ExprPtr atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number:
                return ast::constant(t.number);
            case Tok::LParen: {
                ExprPtr e = expr();
                Token close = lex_.take();
                if (close.kind != Tok::RParen)
                    throw ParseError("expected ')'", close.offset);
                return e;
            }
            case Tok::Ident: {
                if (t.ident == "x") return ast::variable();
                if (t.ident == "exp" || t.ident == "log" || t.ident == "sqrt") {
                    Token open = lex_.take();
                    if (open.kind != Tok::LParen)
                        throw ParseError("expected '(' after '" + t.ident + "'", open.offset);
                    ExprPtr arg = expr();
                    Token close = lex_.take();
                    if (close.kind != Tok::RParen)
                        throw ParseError("expected ')'", close.offset);
                    if (t.ident == "exp") return ast::exp(std::move(arg));
                    if (t.ident == "log") return ast::log(std::move(arg));
                    return ast::sqrt(std::move(arg));
                }
                throw ParseError("unknown identifier '" + t.ident + "'", t.offset);
            }
            case Tok::End:
                throw ParseError("unexpected end of input", t.offset);
            default:
                throw ParseError("expected an operand", t.offset);
        }
    }

    Lexer lex_;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double check_finite(double r, double x, const char* what) {
    if (!std::isfinite(r)) throw EvalError(std::string(what) + " produced a non-finite value", x);
    return r;
}

}  // namespace

double eval(const ExprPtr& e, double x) {
    switch (e->kind) {
        case ExprKind::Constant: return e->value;
        case ExprKind::Variable: return x;
        case ExprKind::Neg: return -eval(e->left, x);
        case ExprKind::Exp: return check_finite(std::exp(eval(e->left, x)), x, "exp");
        case ExprKind::Log: {
            double a = eval(e->left, x);
            if (a <= 0.0) throw EvalError("log of nonpositive argument", x);
            return check_finite(std::log(a), x, "log");
        }
        case ExprKind::Sqrt: {
            double a = eval(e->left, x);
            if (a < 0.0) throw EvalError("sqrt of negative argument", x);
            return std::sqrt(a);
        }
        case ExprKind::Add: return check_finite(eval(e->left, x) + eval(e->right, x), x, "add");
        case ExprKind::Sub: return check_finite(eval(e->left, x) - eval(e->right, x), x, "sub");
        case ExprKind::Mul: return check_finite(eval(e->left, x) * eval(e->right, x), x, "mul");
        case ExprKind::Div: {
            double b = eval(e->right, x);
            if (b == 0.0) throw EvalError("division by zero", x);
            return check_finite(eval(e->left, x) / b, x, "div");
        }
        case ExprKind::Pow: {
            double a = eval(e->left, x);
            double b = eval(e->right, x);
            if (a == 0.0) {
                if (b < 0.0) throw EvalError("0 raised to a negative power", x);
                return b == 0.0 ? 1.0 : 0.0;
            }
            if (a < 0.0 && std::floor(b) != b)
                throw EvalError("negative base with non-integer exponent", x);
            return check_finite(std::pow(a, b), x, "pow");
        }
    }
    throw EvalError("corrupt expression node", x);
}

// ---------------------------------------------------------------------------
// Differentiation

ExprPtr differentiate(const ExprPtr& e) {
    using namespace ast;
    switch (e->kind) {
        case ExprKind::Constant: return constant(0.0);
        case ExprKind::Variable: return constant(1.0);
        case ExprKind::Neg: return neg(differentiate(e->left));
        case ExprKind::Exp:
            // (e^u)' = e^u * u'
            return mul(exp(e->left), differentiate(e->left));
        case ExprKind::Log:
            // (log u)' = u'/u
            return div(differentiate(e->left), e->left);
        case ExprKind::Sqrt:
            // (sqrt u)' = u' / (2 sqrt u)
            return div(differentiate(e->left), mul(constant(2.0), sqrt(e->left)));
        case ExprKind::Add: return add(differentiate(e->left), differentiate(e->right));
        case ExprKind::Sub: return sub(differentiate(e->left), differentiate(e->right));
        case ExprKind::Mul:
            return add(mul(differentiate(e->left), e->right),
                       mul(e->left, differentiate(e->right)));
        case ExprKind::Div:
            // (u/v)' = (u'v - uv') / v^2
            return div(sub(mul(differentiate(e->left), e->right),
                           mul(e->left, differentiate(e->right))),
                       mul(e->right, e->right));
        case ExprKind::Pow: {
            const ExprPtr& u = e->left;
            const ExprPtr& v = e->right;
            if (v->kind == ExprKind::Constant) {
                // power rule: (u^c)' = c u^(c-1) u'
                double c = v->value;
                if (c == 0.0) return constant(0.0);
                return mul(mul(constant(c), pow(u, constant(c - 1.0))), differentiate(u));
            }
            // general: u^v = exp(v log u); derivative u^v (v' log u + v u'/u)
            return mul(pow(u, v),
                       add(mul(differentiate(v), log(u)),
                           mul(v, div(differentiate(u), u))));
        }
    }
    return ast::constant(0.0);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

// Precedence levels used by the printer: Add/Sub 1, Mul/Div 2, Neg 3,
// Pow 4, atoms 5. A rendered negative constant re-lexes as unary minus,
// so it counts as level 3.
int node_prec(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul:
        case ExprKind::Div: return 2;
        case ExprKind::Neg: return 3;
        case ExprKind::Pow: return 4;
        case ExprKind::Constant: return e.value < 0.0 ? 3 : 5;
        default: return 5;
    }
}

std::string fmt_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void render(const ExprPtr& e, int min_prec, std::string& out) {
    int p = node_prec(*e);
    bool parens = p < min_prec;
    if (parens) out += '(';
    switch (e->kind) {
        case ExprKind::Constant: out += fmt_number(e->value); break;
        case ExprKind::Variable: out += 'x'; break;
        case ExprKind::Neg:
            out += '-';
            render(e->left, 4, out);
            break;
        case ExprKind::Exp:
        case ExprKind::Log:
        case ExprKind::Sqrt:
            out += e->kind == ExprKind::Exp ? "exp" : (e->kind == ExprKind::Log ? "log" : "sqrt");
            out += '(';
            render(e->left, 0, out);
            out += ')';
            break;
        case ExprKind::Add:
            render(e->left, 1, out);
            out += '+';
            render(e->right, 2, out);
            break;
        case ExprKind::Sub:
            render(e->left, 1, out);
            out += '-';
            render(e->right, 2, out);
            break;
        case ExprKind::Mul:
            render(e->left, 2, out);
            out += '*';
            render(e->right, 3, out);
            break;
        case ExprKind::Div:
            render(e->left, 2, out);
            out += '/';
            render(e->right, 3, out);
            break;
        case ExprKind::Pow:
            render(e->left, 5, out);
            out += '^';
            render(e->right, 3, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string serialize(const ExprPtr& e) {
    std::string out;
    render(e, 0, out);
    return out;
}

ExprPtr substitute(const ExprPtr& e, const ExprPtr& replacement) {
    using namespace ast;
    switch (e->kind) {
        case ExprKind::Constant: return e;
        case ExprKind::Variable: return replacement;
        case ExprKind::Neg: return neg(substitute(e->left, replacement));
        case ExprKind::Exp: return exp(substitute(e->left, replacement));
        case ExprKind::Log: return log(substitute(e->left, replacement));
        case ExprKind::Sqrt: return sqrt(substitute(e->left, replacement));
        case ExprKind::Add: return add(substitute(e->left, replacement), substitute(e->right, replacement));
        case ExprKind::Sub: return sub(substitute(e->left, replacement), substitute(e->right, replacement));
        case ExprKind::Mul: return mul(substitute(e->left, replacement), substitute(e->right, replacement));
        case ExprKind::Div: return div(substitute(e->left, replacement), substitute(e->right, replacement));
        case ExprKind::Pow: return pow(substitute(e->left, replacement), substitute(e->right, replacement));
    }
    return e;
}

}  // namespace gconvex
