#include "polyalg/expr.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace polyalg {

Expr Expr::scalar(Rational v) {
    Expr e;
    e.kind = Kind::ScalarLit;
    e.value = std::move(v);
    return e;
}

Expr Expr::constant(std::string name) {
    Expr e;
    e.kind = Kind::Const;
    e.name = std::move(name);
    return e;
}

Expr Expr::var() {
    Expr e;
    e.kind = Kind::Var;
    return e;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
}

Expr Expr::unary(Kind kind, Expr operand) {
    Expr e;
    e.kind = kind;
    e.children.push_back(std::move(operand));
    return e;
}

Expr Expr::product(std::vector<Expr> factors) {
    Expr e;
    e.kind = Kind::Product;
    e.children = std::move(factors);
    return e;
}

Expr Expr::power(Expr base, std::size_t exponent) {
    Expr e = unary(Kind::Power, std::move(base));
    e.exponent = exponent;
    return e;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
   public:
    Parser(std::string_view text, const Bindings& bindings) : text_(text), bindings_(bindings) {}

    Expr run() {
        skip_space();
        if (pos_ == text_.size()) throw SyntaxError(pos_, "empty expression");
        Expr e = expr();
        if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

   private:
    Expr expr() {
        Expr lhs = term();
        while (peek() == '+' || peek() == '-') {
            const auto kind = text_[pos_] == '+' ? Expr::Kind::Sum : Expr::Kind::Diff;
            advance();
            lhs = Expr::binary(kind, std::move(lhs), term());
        }
        return lhs;
    }

    Expr term() {
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            advance();
        }
        std::vector<Expr> factors;
        factors.push_back(factor());
        for (;;) {
            if (peek() == '*') {
                advance();
                factors.push_back(factor());
            } else if (starts_atom()) {
                factors.push_back(factor());
            } else {
                break;
            }
        }
        Expr body = factors.size() == 1 ? std::move(factors.front()) : Expr::product(std::move(factors));
        return negate ? Expr::unary(Expr::Kind::Neg, std::move(body)) : body;
    }

    Expr factor() {
        Expr base = atom();
        if (peek() != '^') return base;
        advance();
        if (peek() == '-') throw NegativeExponent("negative exponent at offset " + std::to_string(pos_));
        const std::size_t start = pos_;
        while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
        if (start == pos_) throw SyntaxError(pos_, "expected a nonnegative integer exponent");
        std::size_t exponent = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, exponent);
        if (ec != std::errc()) throw SyntaxError(start, "exponent is too large");
        (void)ptr;
        skip_space();
        return Expr::power(std::move(base), exponent);
    }

    Expr atom() {
        const char c = peek();
        const std::size_t start = pos_;
        if (c == '(') {
            advance();
            Expr inner = expr();
            if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
            advance();
            return Expr::unary(Expr::Kind::Paren, std::move(inner));
        }
        if (digit(c)) {
            while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const std::size_t den = pos_;
                while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
                if (den == pos_) throw SyntaxError(den, "expected a denominator");
            }
            Rational value;
            try {
                value = Rational::parse(text_.substr(start, pos_ - start));
            } catch (const std::invalid_argument& e) {
                throw SyntaxError(start, e.what());
            }
            skip_space();
            return Expr::scalar(std::move(value));
        }
        if (ident_start(c)) {
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            skip_space();
            if (name == "x") return Expr::var();
            if (!bindings_.contains(name)) {
                std::string msg = "unbound identifier '" + name + "' at offset " + std::to_string(start);
                if (name.size() == 1 && std::islower(static_cast<unsigned char>(name[0]))) {
                    msg += " (polynomials have the single indeterminate x)";
                }
                throw UnboundIdentifier(msg);
            }
            return Expr::constant(std::move(name));
        }
        if (pos_ == text_.size()) throw SyntaxError(pos_, "unexpected end of input");
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    bool starts_atom() const {
        const char c = peek();
        return c == '(' || digit(c) || ident_start(c);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void advance() {
        ++pos_;
        skip_space();
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    const Bindings& bindings_;
    std::size_t pos_ = 0;
};

const RElement& lookup(const Bindings& bindings, const std::string& name) {
    auto it = bindings.find(name);
    if (it == bindings.end()) throw UnboundIdentifier("unbound identifier '" + name + "'");
    return it->second;
}

}  // namespace

bool is_identifier(std::string_view name) {
    if (name.empty() || !ident_start(name.front()) || name == "x") return false;
    for (char c : name)
        if (!ident_char(c)) return false;
    return true;
}

Bindings basis_bindings(const RAlgebraPtr& alg) {
    Bindings out;
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        const std::string& name = alg->basis_names()[i];
        if (is_identifier(name)) out.emplace(name, RElement::basis(alg, i));
    }
    return out;
}

Expr parse_expr(std::string_view text, const Bindings& bindings) { return Parser(text, bindings).run(); }

std::string print(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::ScalarLit:
            return e.value.str();
        case K::Const:
            return e.name;
        case K::Var:
            return "x";
        case K::Sum:
            return print(e.children[0]) + " + " + print(e.children[1]);
        case K::Diff:
            return print(e.children[0]) + " - " + print(e.children[1]);
        case K::Neg:
            return "-" + print(e.children[0]);
        case K::Product: {
            std::string out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += "*";
                out += print(e.children[i]);
            }
            return out;
        }
        case K::Power:
            return print(e.children[0]) + "^" + std::to_string(e.exponent);
        case K::Paren:
            return "(" + print(e.children[0]) + ")";
    }
    return {};
}

Expr expand_powers(const Expr& e) {
    using K = Expr::Kind;
    if (e.kind == K::Power) {
        Expr base = expand_powers(e.children[0]);
        if (e.exponent == 0) return Expr::scalar(1);
        if (e.exponent == 1) return base;
        return Expr::product(std::vector<Expr>(e.exponent, base));
    }
    Expr out = e;
    out.children.clear();
    for (const auto& child : e.children) {
        Expr c = expand_powers(child);
        if (e.kind == K::Product && c.kind == K::Product) {
            for (auto& f : c.children) out.children.push_back(std::move(f));
        } else {
            out.children.push_back(std::move(c));
        }
    }
    return out;
}

RPolynomial lower(const Expr& e, const RAlgebraPtr& alg, const Bindings& bindings) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::ScalarLit:
            return RPolynomial::constant(e.value * RElement::one(alg));
        case K::Const: {
            const RElement& c = lookup(bindings, e.name);
            require_same_algebra(alg, c.algebra());
            return RPolynomial::constant(c);
        }
        case K::Var:
            return RPolynomial::variable(alg);
        case K::Sum:
            return lower(e.children[0], alg, bindings) + lower(e.children[1], alg, bindings);
        case K::Diff:
            return lower(e.children[0], alg, bindings) - lower(e.children[1], alg, bindings);
        case K::Neg:
            return -lower(e.children[0], alg, bindings);
        case K::Paren:
            return lower(e.children[0], alg, bindings);
        case K::Product: {
            RPolynomial acc = lower(e.children[0], alg, bindings);
            for (std::size_t i = 1; i < e.children.size(); ++i) acc = acc * lower(e.children[i], alg, bindings);
            return acc;
        }
        case K::Power: {
            const RPolynomial base = lower(e.children[0], alg, bindings);
            RPolynomial acc = RPolynomial::constant(RElement::one(alg));
            for (std::size_t i = 0; i < e.exponent; ++i) acc = acc * base;
            return acc;
        }
    }
    throw FormatError("unknown expression node");
}

RElement interpret(const Expr& e, const RElement& x, const Bindings& bindings) {
    using K = Expr::Kind;
    const RAlgebraPtr& alg = x.algebra();
    switch (e.kind) {
        case K::ScalarLit:
            return e.value * RElement::one(alg);
        case K::Const:
            return lookup(bindings, e.name);
        case K::Var:
            return x;
        case K::Sum:
            return interpret(e.children[0], x, bindings) + interpret(e.children[1], x, bindings);
        case K::Diff:
            return interpret(e.children[0], x, bindings) - interpret(e.children[1], x, bindings);
        case K::Neg:
            return -interpret(e.children[0], x, bindings);
        case K::Paren:
            return interpret(e.children[0], x, bindings);
        case K::Product: {
            RElement acc = interpret(e.children[0], x, bindings);
            for (std::size_t i = 1; i < e.children.size(); ++i) acc = acc * interpret(e.children[i], x, bindings);
            return acc;
        }
        case K::Power: {
            const RElement base = interpret(e.children[0], x, bindings);
            RElement acc = RElement::one(alg);
            for (std::size_t i = 0; i < e.exponent; ++i) acc = acc * base;
            return acc;
        }
    }
    throw FormatError("unknown expression node");
}

}  // namespace polyalg
