#include "parse.hpp"

#include <cctype>
#include <vector>

#include "cfzeta/bigint.hpp"

namespace cfzeta::cli {

namespace {

/// Minimal cursor over the input string; every failure reports the offset
/// at which it happened.
class Cursor {
public:
    explicit Cursor(const std::string& text) : s_(text) {}

    void skip_ws() {
        while (i_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[i_]))) {
            ++i_;
        }
    }

    bool try_eat(char c) {
        skip_ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_eat(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    bool try_eat_word(const std::string& word) {
        skip_ws();
        if (s_.compare(i_, word.size(), word) == 0) {
            i_ += word.size();
            return true;
        }
        return false;
    }

    /// A decimal integer with an optional leading sign.
    Int integer() {
        skip_ws();
        std::size_t start = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        std::size_t digits_from = i_;
        while (i_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            ++i_;
        }
        if (i_ == digits_from) {
            i_ = start;
            fail("expected an integer");
        }
        return Int(s_.substr(start, i_ - start));
    }

    void expect_end() {
        skip_ws();
        if (i_ < s_.size()) fail("unexpected trailing input");
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, i_);
    }

    std::size_t pos() const { return i_; }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

/// "sqrt(" integer ")" where the integer must make the value irrational.
Int radicand(Cursor& c) {
    if (!c.try_eat_word("sqrt")) c.fail("expected 'sqrt('");
    c.expect('(');
    const std::size_t at = c.pos();
    const Int d = c.integer();
    c.expect(')');
    if (d <= 0) {
        throw ParseError("the radicand must be positive", at);
    }
    if (is_perfect_square(d)) {
        throw ParseError(
            "the radicand is a perfect square, so the value is rational, "
            "not a quadratic irrational",
            at);
    }
    return d;
}

}  // namespace

QuadraticSurd parse_surd(const std::string& text) {
    Cursor c(text);
    Int p(0), q(1), d;
    if (c.try_eat('(')) {
        // "(p+sqrt(d))/q" or "(p-sqrt(d))/q".
        p = c.integer();
        bool minus = false;
        if (c.try_eat('+')) {
            minus = false;
        } else if (c.try_eat('-')) {
            minus = true;
        } else {
            c.fail("expected '+' or '-' before the square root");
        }
        d = radicand(c);
        c.expect(')');
        if (c.try_eat('/')) {
            const std::size_t at = c.pos();
            q = c.integer();
            if (q == 0) throw ParseError("the denominator must be nonzero", at);
        }
        if (minus) {
            // (p - sqrt(d))/q = ((-p) + sqrt(d))/(-q).
            p = -p;
            q = -q;
        }
    } else {
        // "sqrt(d)", "-sqrt(d)", optionally "/q".
        const bool negated = c.try_eat('-');
        d = radicand(c);
        if (c.try_eat('/')) {
            const std::size_t at = c.pos();
            q = c.integer();
            if (q == 0) throw ParseError("the denominator must be nonzero", at);
        }
        if (negated) q = -q;
    }
    c.expect_end();

    const QuadraticSurd raw = QuadraticSurd::make(p, q, d);
    // Reduce mod 1: expansions are defined for values in (0,1).
    const Int fl = raw.floor();
    const Rat shift = -Rat(fl);
    return raw.add_rat(shift);
}

CFExpansion parse_cf(const std::string& text) {
    Cursor c(text);
    c.expect('[');
    std::vector<Int> pre;
    c.skip_ws();
    if (!c.try_eat(';')) {
        while (true) {
            const std::size_t at = c.pos();
            Int a = c.integer();
            if (a < 1) {
                throw ParseError("partial quotients must be >= 1", at);
            }
            pre.push_back(std::move(a));
            if (c.try_eat(',')) continue;
            c.expect(';');
            break;
        }
    }
    c.expect('(');
    std::vector<Int> per;
    while (true) {
        const std::size_t at = c.pos();
        Int b = c.integer();
        if (b < 1) {
            throw ParseError("partial quotients must be >= 1", at);
        }
        per.push_back(std::move(b));
        if (c.try_eat(',')) continue;
        c.expect(')');
        break;
    }
    c.expect(']');
    c.expect_end();
    return CFExpansion(std::move(pre), std::move(per));
}

IntMatrix parse_matrix(const std::string& text) {
    Cursor c(text);
    IntMatrix m(2, 2);
    c.expect('[');
    for (std::size_t i = 0; i < 2; ++i) {
        c.expect('[');
        for (std::size_t j = 0; j < 2; ++j) {
            m.at(i, j) = c.integer();
            if (j == 0) c.expect(',');
        }
        c.expect(']');
        if (i == 0) c.expect(',');
    }
    c.expect(']');
    c.expect_end();
    return m;
}

std::variant<QuadraticSurd, CFExpansion, IntMatrix> parse_input(
    const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
    }
    std::size_t j = i + 1;
    while (j < text.size() &&
           std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
    }
    if (i < text.size() && text[i] == '[') {
        if (j < text.size() && text[j] == '[') return parse_matrix(text);
        return parse_cf(text);
    }
    return parse_surd(text);
}

}  // namespace cfzeta::cli
