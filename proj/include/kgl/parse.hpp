#pragma once

#include <cctype>
#include <string>

#include "kgl/errors.hpp"
#include "kgl/ratfun.hpp"

namespace kgl {

// Recursive-descent parser for the expression grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('/' atom)?
//   atom   := rational | 't' ('^' signed_int)? | '(' expr ')'
// Whitespace-insensitive. "t^-2" is sugar for 1/t^2.
namespace detail {

class RatFunParser {
  public:
    explicit RatFunParser(const std::string& text) : s_(text), pos_(0) {}

    RatFun parse() {
        RatFun v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return v;
    }

  private:
    const std::string& s_;
    std::size_t pos_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw SyntaxError("expected integer", pos_);
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 60)) throw SyntaxError("integer literal too large", start);
            ++pos_;
        }
        return v;
    }

    long long signed_integer() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        long long v = integer();
        return neg ? -v : v;
    }

    RatFun expr() {
        RatFun v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    RatFun term() {
        RatFun v = factor();
        while (eat('*')) v *= factor();
        return v;
    }

    RatFun factor() {
        RatFun v = atom();
        skip_ws();
        if (peek() == '/') {
            std::size_t slash = pos_;
            ++pos_;
            RatFun d = atom();
            if (d.is_zero()) throw DivisionByZero("zero denominator at position " + std::to_string(slash));
            v /= d;
        }
        return v;
    }

    RatFun atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFun v = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos_);
            return v;
        }
        if (c == 't') {
            ++pos_;
            if (peek() == '^') {
                ++pos_;
                long long e = signed_integer();
                return RatFun::t_pow(e);
            }
            return RatFun::t();
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            return RatFun(Rational(static_cast<long>(signed_integer())));
        }
        throw SyntaxError("expected atom", pos_);
    }
};

}  // namespace detail

inline RatFun parse_ratfun(const std::string& text) { return detail::RatFunParser(text).parse(); }

}  // namespace kgl
