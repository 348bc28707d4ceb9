#include "nps/parse.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace nps {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Field& field, bool univariate, char var)
        : text_(text), field_(field), univariate_(univariate), var_(var) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) { ++pos_; return true; }
        return false;
    }

    Poly expr() {
        bool neg = false;
        skip_ws();
        if (accept('-')) neg = true;
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (accept('^')) {
            std::int64_t e = natural_exponent();
            Poly r = Poly::constant(field_, Coeff::from_int(field_, 1));
            for (std::int64_t i = 0; i < e; ++i) r = r * b;
            return r;
        }
        return b;
    }

    Poly base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int v = natural_int();
            return Poly::constant(field_, Coeff::from_int(field_, v));
        }
        if (univariate_) {
            if (c == var_) {
                ++pos_;
                return Poly::monomial(field_, Coeff::from_int(field_, 1), {1, 0});
            }
            fail(std::string("expected a number, '") + var_ + "', or '('");
        }
        if (c == 'x') {
            ++pos_;
            return Poly::monomial(field_, Coeff::from_int(field_, 1), {1, 0});
        }
        if (c == 'y') {
            ++pos_;
            return Poly::monomial(field_, Coeff::from_int(field_, 1), {0, 1});
        }
        fail("expected a number, 'x', 'y', or '('");
    }

    Int natural_int() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        Int v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    std::int64_t natural_exponent() {
        Int v = natural_int();
        if (v > Int(1) << 62) fail("exponent too large");
        return v.convert_to<std::int64_t>();
    }

    std::string_view text_;
    Field field_;
    bool univariate_;
    char var_;
    std::size_t pos_ = 0;
};

std::string coeff_string(const Coeff& c) { return c.str(); }

} // namespace

Poly parse_poly(std::string_view text, const Field& field) {
    return Parser(text, field, false, 0).run();
}

UniPoly parse_uniseries(std::string_view text, const Field& field, char var) {
    Poly p = Parser(text, field, true, var).run();
    UniPoly u(field);
    for (const auto& [e, c] : p.terms()) u.set_coeff(e.a, c);
    return u;
}

std::string render_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Exp2, Coeff>> ts(f.terms().begin(), f.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.total() != b.first.total()) return a.first.total() < b.first.total();
        return a.first.a < b.first.a;
    });
    std::string s;
    bool first = true;
    for (const auto& [e, c] : ts) {
        std::string cs = coeff_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        if (e.a > 0) {
            mono += "x";
            if (e.a > 1) mono += "^" + std::to_string(e.a);
        }
        if (e.b > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (e.b > 1) mono += "^" + std::to_string(e.b);
        }
        if (mono.empty()) {
            s += cs;
        } else if (cs == "1") {
            s += mono;
        } else {
            s += cs + "*" + mono;
        }
    }
    return s;
}

std::string render_uniseries(const UniPoly& u, char var) {
    return u.str(std::string(1, var));
}

} // namespace nps
