#include "hc/text.hpp"

#include <cctype>

#include "hc/error.hpp"

namespace hc {

namespace {

// Joins signed pieces: "a" + "-b" -> "a - b".
void append_term(std::string& out, const std::string& piece) {
    if (out.empty()) {
        out = piece;
    } else if (piece[0] == '-') {
        out += " - " + piece.substr(1);
    } else {
        out += " + " + piece;
    }
}

bool is_compound(const std::string& s) {
    return s.find(' ') != std::string::npos;
}

// coefficient * atom, where atom is a nonempty product like "a^2" or "t0*t1".
std::string scaled(const FieldElement& c, const std::string& atom) {
    if (c.is_one()) return atom;
    if ((-c).is_one()) return "-" + atom;
    std::string s = render(c);
    if (is_compound(s)) return "(" + s + ")*" + atom;
    return s + "*" + atom;
}

std::string power(const std::string& name, unsigned k) {
    return k == 1 ? name : name + "^" + std::to_string(k);
}

}  // namespace

std::string render(const FieldElement& x) {
    FieldElement y = lower(x);
    if (y.is_rational_constant()) return to_string(y.rational());
    std::string out;
    const auto& c = y.coords();
    for (unsigned k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        append_term(out, k == 0 ? render(c[k]) : scaled(c[k], power(y.field()->name(), k)));
    }
    return out;
}

std::string render(const MPoly& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        std::string atom;
        for (unsigned i = 0; i < f.arity(); ++i) {
            if (!t.m.e[i]) continue;
            if (!atom.empty()) atom += "*";
            atom += power(vars.at(i), t.m.e[i]);
        }
        append_term(out, atom.empty() ? render(t.c) : scaled(t.c, atom));
    }
    return out;
}

std::string render(const UPoly& f, const std::string& var) { return render(from_upoly(f), {var}); }

std::string render(const MPoly& num, const MPoly& den, const std::vector<std::string>& vars) {
    std::string n = render(num, vars);
    if (den.is_constant() && den.constant_term().is_one()) return n;
    std::string d = render(den, vars);
    if (is_compound(n)) n = "(" + n + ")";
    if (is_compound(d) || d.find('*') != std::string::npos || d.find('/') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

std::string render(const RatFunc& f, const std::string& var) {
    return render(from_upoly(f.num()), from_upoly(f.den()), {var});
}

std::vector<std::string> descent_vars(unsigned n) {
    std::vector<std::string> v;
    for (unsigned i = 0; i < n; ++i) v.push_back("t" + std::to_string(i));
    return v;
}

namespace {

class Parser {
   public:
    Parser(std::string_view text, const std::vector<std::string>& vars, const std::map<std::string, FieldElement>& constants,
           SourcePos origin)
        : text_(text), vars_(vars), constants_(constants), origin_(origin), arity_(static_cast<unsigned>(vars.size())) {}

    Fraction parse() {
        skip_space();
        if (at_end()) fail("empty expression");
        Fraction f = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return f;
    }

   private:
    std::string_view text_;
    const std::vector<std::string>& vars_;
    const std::map<std::string, FieldElement>& constants_;
    SourcePos origin_;
    unsigned arity_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
        int line = origin_.line, col = origin_.column;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw input_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
    }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

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

    Fraction constant(const FieldElement& c) const { return {MPoly::constant(arity_, c), MPoly::constant(arity_, 1)}; }

    static Fraction normalize(Fraction f) {
        if (f.den.is_constant()) {
            FieldElement inv = f.den.constant_term().inverse();
            f.num = inv * f.num;
            f.den = MPoly::constant(f.num.arity(), 1);
        }
        return f;
    }

    Fraction expr() {
        Fraction acc = term();
        for (;;) {
            if (accept('+')) {
                Fraction r = term();
                acc = normalize({acc.num * r.den + r.num * acc.den, acc.den * r.den});
            } else if (accept('-')) {
                Fraction r = term();
                acc = normalize({acc.num * r.den - r.num * acc.den, acc.den * r.den});
            } else {
                return acc;
            }
        }
    }

    Fraction term() {
        Fraction acc = unary();
        for (;;) {
            if (accept('*')) {
                Fraction r = unary();
                acc = normalize({acc.num * r.num, acc.den * r.den});
            } else if (accept('/')) {
                skip_space();
                std::size_t at = pos_;
                Fraction r = unary();
                if (r.num.is_zero()) fail_at(at, "division by zero");
                acc = normalize({acc.num * r.den, acc.den * r.num});
            } else {
                return acc;
            }
        }
    }

    Fraction unary() {
        if (accept('-')) {
            Fraction f = unary();
            f.num = -f.num;
            return f;
        }
        if (accept('+')) return unary();
        return power();
    }

    Fraction power() {
        Fraction base = primary();
        if (!accept('^')) return base;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a nonnegative integer exponent");
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 4) fail_at(start, "exponent too large");
        unsigned k = static_cast<unsigned>(std::stoul(digits));
        return {base.num.pow(k), base.den.pow(k)};
    }

    Fraction primary() {
        skip_space();
        if (at_end()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Fraction f = expr();
            if (!accept(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Integer v(std::string(text_.substr(start, pos_ - start)));
            return constant(FieldElement(Rational(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            for (unsigned i = 0; i < arity_; ++i)
                if (vars_[i] == name) return {MPoly::variable(arity_, i), MPoly::constant(arity_, 1)};
            if (auto it = constants_.find(name); it != constants_.end()) return constant(it->second);
            fail_at(start, "unknown variable '" + name + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

}  // namespace

Fraction parse_expression(std::string_view text, const std::vector<std::string>& vars,
                          const std::map<std::string, FieldElement>& constants, SourcePos origin) {
    if (vars.size() > kMaxVars) throw input_error("too many variables");
    return Parser(text, vars, constants, origin).parse();
}

UPoly parse_upoly(std::string_view text, const std::string& var, const std::map<std::string, FieldElement>& constants,
                  SourcePos origin) {
    Fraction f = parse_expression(text, {var}, constants, origin);
    if (!f.den.is_constant()) throw input_error("line " + std::to_string(origin.line) + ", column " +
                                                std::to_string(origin.column) + ": expected a polynomial");
    return to_upoly(f.num);
}

RatFunc parse_ratfunc(std::string_view text, const std::string& var, const std::map<std::string, FieldElement>& constants,
                      SourcePos origin) {
    Fraction f = parse_expression(text, {var}, constants, origin);
    return RatFunc(to_upoly(f.num), to_upoly(f.den));
}

}  // namespace hc
