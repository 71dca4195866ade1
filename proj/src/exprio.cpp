#include "planarlab/exprio.hpp"

#include <cctype>
#include <cstdio>

namespace planarlab {

namespace {

// Recursive-descent parser over the 4-variable ring; the allowed-variable
// count (2 or 4) decides whether z and w are known.
class Parser {
  public:
    Parser(const std::string& text, int nvars) : src_(text), nvars_(nvars) {}

    Poly4 run() {
        Poly4 p = parse_expr();
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError(ParseError::Kind::Syntax, pos_,
                             std::string("unexpected character '") + src_[pos_] + "'");
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!accept(c))
            throw ParseError(ParseError::Kind::Syntax, pos_, std::string("expected ") + what);
    }

    bool at_digit() {
        skip_ws();
        return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
    }

    BigInt parse_integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start)
            throw ParseError(ParseError::Kind::Syntax, pos_, "expected an integer");
        return BigInt(src_.substr(start, pos_ - start));
    }

    int parse_exponent() {
        skip_ws();
        const std::size_t at = pos_;
        if (accept('-')) throw ParseError(ParseError::Kind::NegativeExponent, at,
                                          "negative exponents are not allowed");
        BigInt e = parse_integer();
        if (e > 64) throw ParseError(ParseError::Kind::Syntax, at, "exponent too large");
        return e.convert_to<int>();
    }

    Poly4 parse_expr() {
        Poly4 acc = parse_term();
        for (;;) {
            if (accept('+'))
                acc += parse_term();
            else if (accept('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    Poly4 parse_term() {
        Poly4 acc = parse_unary();
        while (accept('*')) acc = acc * parse_unary();
        return acc;
    }

    Poly4 parse_unary() {
        if (accept('-')) return -parse_unary();
        return parse_postfix();
    }

    Poly4 parse_postfix() {
        Poly4 base = parse_primary();
        if (accept('^')) return poly_pow(base, parse_exponent());
        return base;
    }

    Poly4 parse_primary() {
        skip_ws();
        if (pos_ >= src_.size())
            throw ParseError(ParseError::Kind::Syntax, pos_, "unexpected end of input");
        if (accept('(')) {
            Poly4 inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        if (at_digit()) {
            const std::size_t at = pos_;
            BigInt num = parse_integer();
            if (accept('/')) {
                BigInt den = parse_integer();
                if (den == 0)
                    throw ParseError(ParseError::Kind::Syntax, at, "zero denominator");
                return Poly4::constant(Rat(num, den));
            }
            return Poly4::constant(Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            const std::string name = src_.substr(start, pos_ - start);
            static constexpr const char* kNames[4] = {"x", "y", "z", "w"};
            for (int v = 0; v < nvars_; ++v)
                if (name == kNames[v]) return Poly4::variable(v);
            throw ParseError(ParseError::Kind::UnknownVariable, start,
                             "unknown variable '" + name + "'");
        }
        throw ParseError(ParseError::Kind::Syntax, pos_,
                         std::string("unexpected character '") + src_[pos_] + "'");
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int nvars_;
};

Poly2 to_poly2(const Poly4& p) {
    Poly2 r;
    for (const auto& [m, c] : p.terms()) r.add_term(Mono2(m.e[0], m.e[1]), c);
    return r;
}

template <typename Mono>
std::string format_impl(const SparsePoly<Mono>& p) {
    static constexpr const char* kNames[4] = {"x", "y", "z", "w"};
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string mono;
        for (int v = 0; v < Mono::nvars; ++v) {
            if (m.e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += kNames[v];
            if (m.e[v] > 1) mono += "^" + std::to_string(m.e[v]);
        }
        const Rat a = negative ? Rat(-c) : c;
        if (mono.empty())
            out += rat_to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += rat_to_string(a) + "*" + mono;
    }
    return out;
}

}  // namespace

Poly2 parse_poly2(const std::string& text) { return to_poly2(Parser(text, 2).run()); }

Poly4 parse_poly4(const std::string& text) { return Parser(text, 4).run(); }

VectorField2 parse_field(const std::string& p_src, const std::string& q_src) {
    Poly2 p, q;
    try {
        p = parse_poly2(p_src);
    } catch (const ParseError& e) {
        throw ParseError(e.kind, e.pos, std::string("P component: ") + e.what());
    }
    try {
        q = parse_poly2(q_src);
    } catch (const ParseError& e) {
        throw ParseError(e.kind, e.pos, std::string("Q component: ") + e.what());
    }
    return {std::move(p), std::move(q)};
}

std::string format_poly(const Poly2& p) { return format_impl(p); }
std::string format_poly(const Poly4& p) { return format_impl(p); }

std::string format_field(const VectorField2& f) {
    return "(" + format_poly(f.p) + ", " + format_poly(f.q) + ")";
}

std::string format_double17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json make_report(const std::string& command, nlohmann::json inputs,
                           nlohmann::json result) {
    return nlohmann::json{{"command", command},
                          {"inputs", std::move(inputs)},
                          {"result", std::move(result)},
                          {"version", kReportVersion}};
}

}  // namespace planarlab
