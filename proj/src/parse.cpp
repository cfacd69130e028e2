#include "blowup/parse.hpp"

#include <cctype>

namespace blowup {

namespace {

class Scanner {
public:
    Scanner(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

    Polynomial run() {
        Polynomial acc = Polynomial::zero(ring_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            fail("unexpected '+'");
        }
        acc = acc + term(negate);
        skip_ws();
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            acc = acc + term(c == '-');
            skip_ws();
        }
        return acc;
    }

private:
    const RingPtr& ring_;
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return mpz_class(s_.substr(start, pos_ - start));
    }

    std::string name() {
        skip_ws();
        std::size_t start = pos_;
        if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail("expected variable name");
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    // name ('^' posint)?  -> merged into mono
    void varpow(Monomial& mono) {
        std::size_t at = pos_;
        std::string v = name();
        std::size_t idx = ring_->index_of(v);
        if (idx == PolyRing::npos) throw parse_error("unknown variable '" + v + "'", at);
        std::uint32_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            mpz_class n = integer();
            if (n <= 0 || n > 1000000) fail("exponent out of range");
            e = static_cast<std::uint32_t>(n.get_ui());
        }
        mono.exp[idx] += e;
    }

    Polynomial term(bool negate) {
        skip_ws();
        if (at_end()) fail("dangling sign");
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num = integer();
            mpz_class den(1);
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                std::size_t at = pos_;
                den = integer();
                if (den == 0) throw parse_error("zero denominator", at);
            }
            coeff = Rational(num, den);
            coeff.canonicalize();
            have_coeff = true;
        }
        Monomial mono(ring_->arity());
        bool have_vars = false;
        skip_ws();
        if (have_coeff) {
            while (!at_end() && peek() == '*') {
                ++pos_;
                varpow(mono);
                have_vars = true;
                skip_ws();
            }
        } else {
            varpow(mono);
            have_vars = true;
            skip_ws();
            while (!at_end() && peek() == '*') {
                ++pos_;
                varpow(mono);
                skip_ws();
            }
        }
        if (!have_coeff && !have_vars) fail("expected term");
        if (negate) coeff = -coeff;
        return Polynomial::from_term(ring_, std::move(mono), coeff);
    }
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    return Scanner(ring, text).run();
}

Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw parse_error("expected integer", pos);
    mpz_class num(text.substr(start, pos - start));
    mpz_class den(1);
    skip();
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip();
        std::size_t dstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == dstart) throw parse_error("expected denominator", pos);
        den = mpz_class(text.substr(dstart, pos - dstart));
        if (den == 0) throw parse_error("zero denominator", dstart);
    }
    skip();
    if (pos != text.size()) throw parse_error("trailing characters in rational", pos);
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

} // namespace blowup
