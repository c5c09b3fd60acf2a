#pragma once

#include <polydisc/poly.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace polydisc {

struct parse_error : error {
    parse_error(const std::string& msg, std::size_t line, std::size_t col)
        : error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line(line), col(col) {}
    std::size_t line, col;
};

/// Canonical text form: terms in graded order with z1 most significant,
/// e.g. "3/2*z1^2*z2 - z2 + 1". parse(print(p)) == p bit-exactly.
inline std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(),
              [](const auto& a, const auto& b) { return display_greater(a.first, b.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ts) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = total_degree(m) > 0;
        bool coeff_one = (a == 1);
        if (!has_var || !coeff_one) os << to_string(a);
        bool star = !coeff_one && has_var;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (star) os << "*";
            os << p.vars()[i];
            if (m[i] > 1) os << "^" << m[i];
            star = true;
        }
    }
    return os.str();
}

inline std::string to_string(const UniPoly& p) { return to_string(p.to_multi()); }

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, const VarList& vars, std::size_t line)
        : text_(text), vars_(vars), line_(line) {}

    MultiPoly parse() {
        MultiPoly p = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MultiPoly parse_sum() {
        MultiPoly acc = MultiPoly::constant(0, vars_);
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        acc = neg ? -parse_product() : parse_product();
        while (true) {
            if (eat('+')) acc += parse_product();
            else if (eat('-')) acc -= parse_product();
            else break;
        }
        return acc;
    }

    MultiPoly parse_product() {
        MultiPoly acc = parse_power();
        while (true) {
            if (eat('*')) acc *= parse_power();
            else break;
        }
        return acc;
    }

    MultiPoly parse_power() {
        MultiPoly base = parse_atom();
        if (eat('^')) {
            long e = parse_int();
            if (e < 0) fail("negative exponent");
            MultiPoly r = MultiPoly::constant(1, vars_);
            for (long i = 0; i < e; ++i) r *= base;
            return r;
        }
        return base;
    }

    MultiPoly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -parse_atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = parse_name();
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
                fail("undeclared variable '" + name + "'");
            return MultiPoly::variable(name, vars_);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string parse_name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    long parse_int() {
        skip_ws();
        bool neg = eat('-');
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        long v = std::stol(text_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    MultiPoly parse_rational() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string numstr = text_.substr(start, pos_ - start);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            // only a fraction when followed by digits (denominator)
            std::size_t p2 = pos_ + 1;
            std::size_t dstart = p2;
            while (p2 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p2]))) ++p2;
            if (p2 > dstart) {
                std::string denstr = text_.substr(dstart, p2 - dstart);
                pos_ = p2;
                if (Rational(denstr) == 0) fail("zero denominator");
                return MultiPoly::constant(Rational(numstr) / Rational(denstr), vars_);
            }
        }
        return MultiPoly::constant(Rational(numstr), vars_);
    }

    const std::string& text_;
    const VarList& vars_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses one polynomial over the declared variables; throws parse_error
/// with line/column on malformed input or undeclared variables.
inline MultiPoly parse_poly(const std::string& text, const VarList& vars, std::size_t line = 1) {
    return detail::PolyParser(text, vars, line).parse();
}

inline UniPoly parse_unipoly(const std::string& text, const std::string& var, std::size_t line = 1) {
    return UniPoly::from_multi(parse_poly(text, {var}, line), var);
}

}  // namespace polydisc
