#include "qcf/text.hpp"

#include <cctype>

#include "qcf/errors.hpp"

namespace qcf {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::size_t pos() const { return pos_; }

    [[noreturn]] void fail(const std::string& what) const {
        std::string near = pos_ < text_.size() ? std::string(" near '") + text_[pos_] + "'" : " at end of input";
        throw ParseError(what + near, pos_);
    }

    std::string digits() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
        if (out.empty()) fail("expected digits");
        return out;
    }

    /// Unsigned p or p/q.
    Rational unsigned_rational() {
        Integer num(digits());
        Integer den = 1;
        if (accept('/')) {
            den = Integer(digits());
            if (den == 0) fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Rational parse_signed_rational(Cursor& c) {
    bool negative = false;
    if (c.accept('-')) {
        negative = true;
    } else {
        c.accept('+');
    }
    Rational q = c.unsigned_rational();
    return negative ? Rational(-q) : q;
}

/// Sum of terms; stops at any character that cannot continue the sum.
KElement parse_k_terms(Cursor& c, const FieldSpec& spec) {
    Rational a = 0;
    Rational b = 0;
    bool first = true;
    for (;;) {
        bool negative = false;
        if (c.accept('-')) {
            negative = true;
        } else if (!c.accept('+') && !first) {
            break;
        }
        const char next = c.peek();
        if (next == 'w') {
            c.accept('w');
            b += negative ? -1 : 1;
        } else if (std::isdigit(static_cast<unsigned char>(next))) {
            Rational q = c.unsigned_rational();
            if (negative) q = -q;
            if (c.accept('*')) {
                if (!c.accept('w')) c.fail("expected 'w' after '*'");
                b += q;
            } else {
                a += q;
            }
        } else {
            c.fail("expected a rational or 'w'");
        }
        first = false;
        const char after = c.peek();
        if (after == '*') c.fail("products of terms are not part of the element syntax");
        if (after != '+' && after != '-') break;
    }
    return KElement(spec, a, b);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    Cursor c(text);
    Rational q = parse_signed_rational(c);
    if (!c.at_end()) c.fail("trailing characters");
    return q;
}

KElement parse_element(std::string_view text, const FieldSpec& spec, bool require_integral) {
    Cursor c(text);
    if (c.at_end()) c.fail("empty element");
    KElement x = parse_k_terms(c, spec);
    if (!c.at_end()) c.fail("trailing characters");
    if (require_integral && !x.is_integral()) {
        throw ParseError("element " + x.to_string() + " is not integral in O_K", 0);
    }
    return x;
}

SurdElement parse_surd(std::string_view text, const FieldSpec& spec) {
    Cursor c(text);
    c.expect('(');
    KElement x = parse_k_terms(c, spec);
    c.expect(')');
    bool negative = false;
    if (c.accept('-')) {
        negative = true;
    } else {
        c.expect('+');
    }
    c.expect('(');
    KElement y = parse_k_terms(c, spec);
    c.expect(')');
    c.expect('*');
    if (!c.accept("sqrt")) c.fail("expected 'sqrt'");
    c.expect('(');
    const std::size_t delta_pos = c.pos();
    KElement d = parse_k_terms(c, spec);
    c.expect(')');
    if (!c.at_end()) c.fail("trailing characters");
    try {
        return SurdElement(d, x, negative ? -y : y);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), delta_pos);
    }
}

CFExpansion parse_expansion(std::string_view text, const FieldSpec& spec) {
    Cursor c(text);
    c.expect('[');
    CFExpansion cf(spec);
    std::vector<KElement>* target = &cf.preperiod;
    bool expect_entry = c.peek() != ';' && c.peek() != ']';
    for (;;) {
        if (expect_entry) {
            const std::size_t at = c.pos();
            KElement a = parse_k_terms(c, spec);
            if (!a.is_integral()) throw ParseError("partial quotient " + a.to_string() + " is not in O_K", at);
            target->push_back(std::move(a));
        }
        if (c.accept(',')) {
            expect_entry = true;
            continue;
        }
        if (c.accept(';')) {
            if (target == &cf.period) c.fail("second ';'");
            target = &cf.period;
            expect_entry = c.peek() != ']';
            continue;
        }
        c.expect(']');
        break;
    }
    if (!c.at_end()) c.fail("trailing characters");
    return cf;
}

std::string format_expansion(const CFExpansion& cf) {
    auto join = [](const std::vector<KElement>& xs) {
        std::string out;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) out += ", ";
            out += xs[i].to_string();
        }
        return out;
    };
    std::string out = "[" + join(cf.preperiod);
    if (cf.is_periodic()) out += "; " + join(cf.period);
    return out + "]";
}

}  // namespace qcf
