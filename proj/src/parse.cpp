#include "residua/polynomial.hpp"

#include <cctype>

namespace residua {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
};

bool read_uint(Cursor& c, Int& out) {
    c.skip_ws();
    std::size_t start = c.i;
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        digits += c.s[c.i++];
    if (digits.empty()) { c.i = start; return false; }
    out = Int(digits);
    return true;
}

// Longest variable name of the ring starting at the cursor; -1 if none.
int read_var(Cursor& c, const Ring& ring) {
    c.skip_ws();
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        const std::string& name = ring->vars()[v];
        if (name.size() > best_len && c.s.compare(c.i, name.size(), name) == 0) {
            best = int(v);
            best_len = name.size();
        }
    }
    if (best >= 0) c.i += best_len;
    return best;
}

} // namespace

// Grammar: terms joined by '+'/'-'; a term is [coefficient] factors, where a
// coefficient is an integer or n/d and factors are variables with optional
// '^e', separated by optional '*'.
Polynomial parse_polynomial(const Ring& ring, const std::string& text) {
    Cursor c{text};
    std::vector<Term> terms;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        bool saw_sign = false;
        while (true) {
            char ch = c.peek();
            if (ch == '+') { ++c.i; saw_sign = true; }
            else if (ch == '-') { ++c.i; sign = -sign; saw_sign = true; }
            else break;
        }
        require(first || saw_sign, "expected '+' or '-' between terms near position " +
                                       std::to_string(c.i) + " in '" + text + "'");
        first = false;
        require(!c.done(), "dangling sign in polynomial '" + text + "'");

        Rat coeff(1);
        bool saw_any = false;
        Int num;
        if (read_uint(c, num)) {
            saw_any = true;
            if (c.peek() == '/') {
                ++c.i;
                Int den;
                require(read_uint(c, den), "expected denominator in '" + text + "'");
                require(den != 0, "zero denominator in '" + text + "'");
                coeff = Rat(num, den);
            } else {
                coeff = Rat(num);
            }
        }
        Monomial mono = mono_one(ring->nvars());
        while (true) {
            if (c.peek() == '*') { ++c.i; }
            std::size_t before = c.i;
            int v = read_var(c, ring);
            if (v < 0) {
                c.i = before;
                break;
            }
            saw_any = true;
            int exp = 1;
            if (c.peek() == '^') {
                ++c.i;
                Int e;
                require(read_uint(c, e), "expected exponent in '" + text + "'");
                require(e >= 0 && e <= INT32_MAX, "exponent out of range");
                exp = int(e);
            }
            std::int64_t s = std::int64_t(mono[v]) + exp;
            require(s <= INT32_MAX, "exponent overflow");
            mono[v] = std::int32_t(s);
        }
        if (!saw_any) {
            std::string tail = text.substr(c.i, 12);
            throw AlgebraError("unrecognized token '" + tail + "' in polynomial '" + text +
                               "' over " + ring->describe());
        }
        if (sign < 0) coeff = -coeff;
        terms.push_back(Term{std::move(mono), std::move(coeff)});
    }
    return Polynomial(ring, std::move(terms));
}

} // namespace residua
