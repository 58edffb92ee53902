#include "ncq/parser.hpp"

#include <cctype>

#include "ncq/errors.hpp"

namespace ncq {

namespace {

struct Token {
    enum class Kind {
        Number,   // unsigned digit string
        Ident,    // x, h, h7, i, j, k, conj
        Plus,
        Minus,
        Star,
        Slash,
        Caret,
        LParen,
        RParen,
        End
    };
    Kind kind;
    std::string text;
    int line = 1;
    int column = 1;
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
    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token current_;

    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        current_.line = line_;
        current_.column = col_;
        current_.text.clear();
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            return;
        }
        char ch = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            current_.kind = Token::Kind::Number;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                current_.text += text_[pos_];
                bump();
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            current_.kind = Token::Kind::Ident;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                current_.text += text_[pos_];
                bump();
            }
            // h may carry an index
            if (current_.text == "h")
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    current_.text += text_[pos_];
                    bump();
                }
            return;
        }
        switch (ch) {
            case '+': current_.kind = Token::Kind::Plus; break;
            case '-': current_.kind = Token::Kind::Minus; break;
            case '*': current_.kind = Token::Kind::Star; break;
            case '/': current_.kind = Token::Kind::Slash; break;
            case '^': current_.kind = Token::Kind::Caret; break;
            case '(': current_.kind = Token::Kind::LParen; break;
            case ')': current_.kind = Token::Kind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'",
                                 line_, col_);
        }
        current_.text = ch;
        bump();
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
};

class Parser {
  public:
    Parser(std::string_view text, const ParseOptions& opts)
        : lex_(text), opts_(opts) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw ParseError("unexpected trailing input '" + t.text + "'", t.line,
                             t.column);
        return e;
    }

  private:
    Lexer lex_;
    ParseOptions opts_;

    static ExprPtr make(Expr::Kind k) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        return e;
    }

    ExprPtr expr() {
        auto sum = make(Expr::Kind::Sum);
        sum->children.push_back(term());
        sum->signs.push_back(+1);
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::Plus || t.kind == Token::Kind::Minus) {
                int sign = t.kind == Token::Kind::Plus ? +1 : -1;
                lex_.take();
                sum->children.push_back(term());
                sum->signs.push_back(sign);
            } else {
                break;
            }
        }
        if (sum->children.size() == 1 && sum->signs[0] == +1)
            return std::move(sum->children[0]);
        return sum;
    }

    ExprPtr term() {
        auto prod = make(Expr::Kind::Prod);
        prod->children.push_back(factor());
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.take();
            prod->children.push_back(factor());
        }
        if (prod->children.size() == 1) return std::move(prod->children[0]);
        return prod;
    }

    ExprPtr factor() {
        // unary minus binds below "^": "-x^2" means -(x^2), "-2^2" is -4
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            ExprPtr inner = factor();
            auto neg = make(Expr::Kind::Prod);
            auto minus_one = make(Expr::Kind::RationalLit);
            minus_one->value = Rational(-1);
            neg->children.push_back(std::move(minus_one));
            neg->children.push_back(std::move(inner));
            return neg;
        }
        ExprPtr base = primary();
        if (lex_.peek().kind == Token::Kind::Caret) {
            Token caret = lex_.take();
            int sign = 1;
            if (lex_.peek().kind == Token::Kind::Minus) {
                lex_.take();
                sign = -1;
            }
            Token num = lex_.take();
            if (num.kind != Token::Kind::Number)
                throw ParseError("expected integer exponent", num.line, num.column);
            int exp;
            try {
                exp = sign * std::stoi(num.text);
            } catch (...) {
                throw ParseError("exponent out of range", num.line, num.column);
            }
            if (exp < 0) {
                if (!opts_.allow_negative_powers)
                    throw SemanticError(
                        "negative powers are available only in numeric-oracle "
                        "contexts");
                if (base->kind != Expr::Kind::Var || base->var != kVarX)
                    throw SemanticError("negative powers are defined only on x");
            }
            auto p = make(Expr::Kind::Pow);
            p->exponent = exp;
            p->children.push_back(std::move(base));
            return p;
        }
        return base;
    }

    // Rational literal, optionally followed by an implicit basis-letter
    // product ("2i", "1/2k").
    ExprPtr number_primary(Token first) {
        Rational value(boost::multiprecision::cpp_int(first.text), 1);
        if (lex_.peek().kind == Token::Kind::Slash) {
            lex_.take();
            Token den = lex_.take();
            if (den.kind != Token::Kind::Number)
                throw ParseError("expected positive denominator", den.line,
                                 den.column);
            if (den.text.find_first_not_of('0') == std::string::npos)
                throw ParseError("zero denominator", den.line, den.column);
            value /= Rational(boost::multiprecision::cpp_int(den.text), 1);
        }
        auto lit = make(Expr::Kind::RationalLit);
        lit->value = value;
        const Token& next = lex_.peek();
        if (next.kind == Token::Kind::Ident &&
            (next.text == "i" || next.text == "j" || next.text == "k")) {
            Token basis = lex_.take();
            auto b = make(Expr::Kind::BasisLit);
            b->basis = basis.text == "i" ? 1 : basis.text == "j" ? 2 : 3;
            auto prod = make(Expr::Kind::Prod);
            prod->children.push_back(std::move(lit));
            prod->children.push_back(std::move(b));
            return prod;
        }
        return lit;
    }

    ExprPtr primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Number:
                return number_primary(std::move(t));
            case Token::Kind::Ident: {
                if (t.text == "x") {
                    auto v = make(Expr::Kind::Var);
                    v->var = kVarX;
                    return v;
                }
                if (t.text == "i" || t.text == "j" || t.text == "k") {
                    auto b = make(Expr::Kind::BasisLit);
                    b->basis = t.text == "i" ? 1 : t.text == "j" ? 2 : 3;
                    return b;
                }
                if (t.text[0] == 'h') {
                    int idx = 1;
                    if (t.text.size() > 1) {
                        try {
                            idx = std::stoi(t.text.substr(1));
                        } catch (...) {
                            throw ParseError("malformed increment variable '" +
                                                 t.text + "'",
                                             t.line, t.column);
                        }
                    }
                    if (idx < 1 || idx > kMaxH)
                        throw ParseError("increment variable out of range (h1..h" +
                                             std::to_string(kMaxH) + ")",
                                         t.line, t.column);
                    auto v = make(Expr::Kind::Var);
                    v->var = var_h(idx);
                    return v;
                }
                if (t.text == "conj") {
                    Token open = lex_.take();
                    if (open.kind != Token::Kind::LParen)
                        throw ParseError("expected '(' after conj", open.line,
                                         open.column);
                    auto c = make(Expr::Kind::Conj);
                    c->children.push_back(expr());
                    Token close = lex_.take();
                    if (close.kind != Token::Kind::RParen)
                        throw ParseError("expected ')' closing conj", close.line,
                                         close.column);
                    return c;
                }
                throw ParseError("unknown identifier '" + t.text + "'", t.line,
                                 t.column);
            }
            case Token::Kind::LParen: {
                ExprPtr inner = expr();
                Token close = lex_.take();
                if (close.kind != Token::Kind::RParen)
                    throw ParseError("expected ')'", close.line, close.column);
                return inner;
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.line,
                                 t.column);
        }
    }
};

bool quaternion_like(const AlgebraSpec& alg) {
    if (alg.dim() != 4 || !alg.has_involution() || !alg.norm_signature())
        return false;
    for (const auto& s : *alg.norm_signature())
        if (s != 1) return false;
    return true;
}

}  // namespace

ExprPtr parse_expression(std::string_view text, const ParseOptions& opts) {
    return Parser(text, opts).parse();
}

NcPoly lower_to_poly(const Expr& e, const AlgebraSpec& alg) {
    switch (e.kind) {
        case Expr::Kind::Sum: {
            NcPoly acc;
            for (size_t i = 0; i < e.children.size(); ++i) {
                NcPoly child = lower_to_poly(*e.children[i], alg);
                acc = e.signs[i] > 0 ? add(acc, child) : sub(acc, child);
            }
            return acc;
        }
        case Expr::Kind::Prod: {
            NcPoly acc = NcPoly::constant(alg.unit());
            for (const auto& child : e.children)
                acc = mul(acc, lower_to_poly(*child, alg), alg);
            return acc;
        }
        case Expr::Kind::Pow: {
            if (e.exponent < 0)
                throw SemanticError(
                    "x^-1 is not a polynomial; only numeric-oracle commands "
                    "accept negative powers");
            return pow(lower_to_poly(*e.children[0], alg), e.exponent, alg);
        }
        case Expr::Kind::Var:
            return NcPoly::variable(e.var, alg);
        case Expr::Kind::RationalLit:
            return NcPoly::constant(alg.from_rational(e.value));
        case Expr::Kind::BasisLit:
            if (e.basis >= alg.dim())
                throw SemanticError("basis letter not available in algebra '" +
                                    alg.name() + "'");
            return NcPoly::constant(alg.basis_element(e.basis));
        case Expr::Kind::Conj: {
            if (!quaternion_like(alg))
                throw SemanticError(
                    "conj(...) lowers to a polynomial only over quaternion-like "
                    "presets");
            NcPoly inner = lower_to_poly(*e.children[0], alg);
            // involution as a polynomial: -1/2 (e + i e i + j e j + k e k)
            NcPoly acc = inner;
            for (int b = 1; b <= 3; ++b) {
                NcPoly basis = NcPoly::constant(alg.basis_element(b));
                acc = add(acc, mul(mul(basis, inner, alg), basis, alg));
            }
            return scale(Rational(-1) / 2, acc);
        }
    }
    throw SemanticError("malformed expression tree");
}

NcPoly parse_poly(std::string_view text, const AlgebraSpec& alg) {
    return lower_to_poly(*parse_expression(text), alg);
}

Element parse_element(std::string_view text, const AlgebraSpec& alg) {
    ExprPtr ast = parse_expression(text);
    NcPoly p = lower_to_poly(*ast, alg);
    if (!variables_of(p).empty())
        throw SemanticError("expected a constant literal, found variables in '" +
                            std::string(text) + "'");
    return eval(p, {}, alg);
}

}  // namespace ncq
