#include "paratensor/symexpr/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "paratensor/error.hpp"

namespace paratensor::symexpr {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> chart) : text_(text), chart_(chart) {}

    Expr parse() {
        skip_space();
        if (at_end()) fail("empty expression");
        Expr e = expression();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_ + 1); }
    [[noreturn]] void fail_at(const std::string& message, std::size_t pos) const {
        throw ParseError(message, pos + 1);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr expression() {
        Expr acc = term();
        while (true) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Expr term() {
        Expr acc = unary();
        while (true) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                skip_space();
                const std::size_t where = pos_;
                const Expr divisor = unary();
                if (!divisor.is_constant()) fail_at("division by a non-constant expression", where);
                if (divisor.is_zero()) fail_at("division by zero", where);
                acc = acc * Expr(1 / divisor.constant_value());
            } else {
                return acc;
            }
        }
    }

    Expr unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (accept('^')) {
            skip_space();
            const std::size_t where = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("exponent must be a nonnegative integer literal");
            const Integer e = integer();
            if (e > std::numeric_limits<std::uint32_t>::max()) fail_at("exponent overflow", where);
            skip_space();
            if (!at_end() && text_[pos_] == '^') fail("chained exponents are not supported; use parentheses");
            base = base.pow(static_cast<std::uint32_t>(e.get_ui()));
        }
        return base;
    }

    Expr primary() {
        skip_space();
        if (at_end()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return Expr(Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            const auto it = std::find(chart_.begin(), chart_.end(), name);
            if (it == chart_.end()) fail_at("unknown identifier '" + std::string(name) + "'", start);
            return Expr::variable(static_cast<std::size_t>(it - chart_.begin()));
        }
        if (c == '(') {
            ++pos_;
            Expr inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t end = pos_;
        skip_space();
        if (!at_end() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '('))
            fail("missing operator (implicit multiplication is not supported)");
        return Integer(std::string(text_.substr(start, end - start)));
    }

    std::string_view text_;
    std::span<const std::string> chart_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, std::span<const std::string> chart) { return Parser(text, chart).parse(); }

}  // namespace paratensor::symexpr
