#include "ncdeg/parser.hpp"

#include <cctype>
#include <map>

namespace ncdeg {

namespace {

constexpr int kExponentCap = 64;

class Parser {
public:
    Parser(const std::string& text, int alphabet, FieldTag tag)
        : text_(text), alphabet_(alphabet), tag_(tag) {
        if (alphabet < 1)
            throw std::invalid_argument("parse_poly: alphabet must be positive");
        auto names = default_names(alphabet);
        for (int i = 0; i < alphabet; ++i) vars_[names[static_cast<size_t>(i)]] = i;
        for (int i = 1; i <= alphabet; ++i) vars_["x" + std::to_string(i)] = i - 1;
    }

    NcPoly run() {
        NcPoly p = parse_poly_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("parse error: " + msg, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string read_digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected a number");
        return text_.substr(start, pos_ - start);
    }

    int read_exponent() {
        std::string digits = read_digits();
        if (digits.size() > 2 || std::stoi(digits) > kExponentCap)
            fail("exponent exceeds the cap of " + std::to_string(kExponentCap));
        return std::stoi(digits);
    }

    NcPoly parse_poly_expr() {
        bool negate = eat('-');
        NcPoly p = parse_term();
        if (negate) p = -p;
        while (true) {
            if (eat('+'))
                p = p + parse_term();
            else if (eat('-'))
                p = p - parse_term();
            else
                return p;
        }
    }

    NcPoly parse_term() {
        NcPoly p = std::isdigit(static_cast<unsigned char>(peek()))
                       ? NcPoly::constant(alphabet_, parse_coeff())
                       : parse_factor();
        while (eat('*')) p = p * parse_factor();
        return p;
    }

    FieldScalar parse_coeff() {
        size_t start = pos_;
        std::string text = read_digits();
        if (eat('/')) text += "/" + read_digits();
        try {
            return parse_scalar(text, tag_);
        } catch (const std::invalid_argument& e) {
            pos_ = start;
            fail(e.what());
        }
    }

    NcPoly parse_factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            NcPoly inner = parse_poly_expr();
            expect(')');
            return maybe_pow(inner);
        }
        if (c == '[') {
            ++pos_;
            NcPoly a = parse_poly_expr();
            expect(',');
            NcPoly b = parse_poly_expr();
            expect(']');
            return maybe_pow(commutator(a, b));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_var();
        fail("expected a variable, '(' or '['");
    }

    NcPoly maybe_pow(const NcPoly& p) {
        if (!eat('^')) return p;
        return p.pow(read_exponent());
    }

    NcPoly parse_var() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        auto it = vars_.find(name);
        if (it == vars_.end()) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        NcPoly v = NcPoly::variable(alphabet_, tag_, it->second);
        return maybe_pow(v);
    }

    const std::string& text_;
    int alphabet_;
    FieldTag tag_;
    std::map<std::string, int> vars_;
    size_t pos_ = 0;
};

}  // namespace

NcPoly parse_poly(const std::string& text, int alphabet, FieldTag tag) {
    return Parser(text, alphabet, tag).run();
}

}  // namespace ncdeg
