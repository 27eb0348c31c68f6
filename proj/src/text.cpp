#include "rees/text.hpp"

#include <cctype>
#include <sstream>

namespace rees {

std::string to_string(const XMonomial& m) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < m.n(); ++i) {
        if (m.exponents[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (m.exponents[i] > 1) os << "^" << m.exponents[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string to_string(const TVariable& t) {
    return "T[" + to_string(t.gen) + ",t" + std::to_string(t.block) + "]";
}

std::string to_string(const SMonomial& u, const TermOrder& ord) {
    std::ostringstream os;
    bool first = true;
    if (!u.xpart.is_unit()) {
        os << to_string(u.xpart);
        first = false;
    }
    for (const TVariable& t : tpart_descending(u, ord)) {
        if (!first) os << "*";
        os << to_string(t);
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string to_string(const Binomial& b, const TermOrder& ord) {
    return to_string(b.plus, ord) + " - " + to_string(b.minus, ord);
}

std::string to_string(const ImageMonomial& mu) {
    std::ostringstream os;
    os << to_string(mu.xpart);
    for (std::size_t j = 0; j < mu.tdeg.size(); ++j) {
        if (mu.tdeg[j] == 0) continue;
        os << "*t" << (j + 1);
        if (mu.tdeg[j] > 1) os << "^" << mu.tdeg[j];
    }
    return os.str();
}

namespace {

// Tiny recursive-descent parser over the renderer's grammar.
class Parser {
public:
    Parser(const std::string& text, int n, int r) : s_(text), n_(n), r_(r) {}

    SMonomial parse_smonomial_all() {
        SMonomial u = parse_smonomial();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return u;
    }

    std::pair<SMonomial, SMonomial> parse_binomial_all() {
        SMonomial a = parse_smonomial();
        skip_ws();
        if (!eat('-')) fail("expected '-' between the two terms");
        SMonomial b = parse_smonomial();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return {a, b};
    }

    XMonomial parse_xmonomial_all() {
        XMonomial m = parse_xmono_inner(/*stop_at_comma=*/false);
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return m;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw InputError("parse error at position " + std::to_string(pos_) + ": " + what);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    // factor := 'x'INT('^'INT)? | 'T[' xmono ',t'INT ']' | '1'
    void parse_factor(SMonomial& u) {
        skip_ws();
        char c = peek();
        if (c == '1') {
            ++pos_;
            return;
        }
        if (c == 'x') {
            ++pos_;
            int i = parse_int();
            if (i < 1 || i > n_) fail("x-index out of range 1.." + std::to_string(n_));
            int e = 1;
            if (eat('^')) {
                e = parse_int();
                if (e < 1) fail("exponent must be positive");
            }
            u.xpart.exponents[i - 1] += e;
            return;
        }
        if (c == 'T') {
            ++pos_;
            if (!eat('[')) fail("expected '[' after T");
            XMonomial gen = parse_xmono_inner(/*stop_at_comma=*/true);
            if (!eat(',')) fail("expected ',' in T[...]");
            skip_ws();
            if (peek() != 't') fail("expected block label t<j>");
            ++pos_;
            int j = parse_int();
            if (j < 1 || j > r_) fail("block index out of range 1.." + std::to_string(r_));
            if (!eat(']')) fail("expected ']' closing T[...]");
            int e = 1;
            if (eat('^')) {
                e = parse_int();
                if (e < 1) fail("exponent must be positive");
            }
            for (int k = 0; k < e; ++k) u.tpart.push_back(TVariable(j, gen));
            return;
        }
        fail("expected a factor (x<i>, T[...], or 1)");
    }

    SMonomial parse_smonomial() {
        SMonomial u = SMonomial::unit(n_);
        parse_factor(u);
        while (eat('*')) parse_factor(u);
        return SMonomial(u.xpart, u.tpart); // re-sorts the T-part
    }

    XMonomial parse_xmono_inner(bool stop_at_comma) {
        XMonomial m = XMonomial::unit(n_);
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '1') {
                ++pos_;
            } else if (c == 'x') {
                ++pos_;
                int i = parse_int();
                if (i < 1 || i > n_) fail("x-index out of range 1.." + std::to_string(n_));
                int e = 1;
                if (eat('^')) {
                    e = parse_int();
                    if (e < 1) fail("exponent must be positive");
                }
                m.exponents[i - 1] += e;
            } else {
                fail("expected x<i> or 1");
            }
            if (!eat('*')) break;
            if (stop_at_comma && peek() == ',') fail("dangling '*'");
        }
        return m;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int n_, r_;
};

} // namespace

SMonomial parse_smonomial(const std::string& text, int n, int r) {
    return Parser(text, n, r).parse_smonomial_all();
}

Binomial parse_binomial(const std::string& text, int n, int r, const TermOrder& ord) {
    auto [a, b] = Parser(text, n, r).parse_binomial_all();
    auto bin = make_binomial(a, b, ord);
    if (!bin) throw InputError("the two terms are equal (zero binomial)");
    return *bin;
}

XMonomial parse_xmonomial(const std::string& text, int n) {
    return Parser(text, n, 0).parse_xmonomial_all();
}

} // namespace rees
