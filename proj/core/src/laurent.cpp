#include "hartoric/laurent.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace hartoric {

namespace {

struct Parser {
    const std::string& s;
    const int n;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    Int digits() {
        const size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw parse_error("expected a number", start);
        return Int(s.substr(start, i - start));
    }

    Int nonneg_integer() {
        skip();
        return digits();
    }

    Int signed_integer() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        skip();
        const Int v = digits();
        return neg ? -v : v;
    }

    // A single factor: an integer constant or a power of one variable.
    std::pair<Rat, std::vector<Int>> factor() {
        skip();
        if (i >= s.size()) throw parse_error("unexpected end of input", i);
        if (s[i] == 'z') {
            const size_t zpos = i;
            ++i;
            const size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) throw parse_error("expected a variable index after 'z'", i);
            const Int idx(s.substr(start, i - start));
            if (idx < 1 || idx > n)
                throw parse_error("variable index out of range 1.." + std::to_string(n), zpos);
            std::vector<Int> e(n, Int(0));
            Int ex = 1;
            if (eat('^')) ex = signed_integer();
            e[static_cast<size_t>(idx) - 1] = ex;
            return {Rat(1), std::move(e)};
        }
        if (std::isdigit(static_cast<unsigned char>(s[i])))
            return {Rat(digits()), std::vector<Int>(n, Int(0))};
        throw parse_error(std::string("unexpected character '") + s[i] + "'", i);
    }

    std::pair<Rat, std::vector<Int>> term() {
        auto [coeff, exps] = factor();
        for (;;) {
            skip();
            if (eat('*')) {
                auto [c2, e2] = factor();
                coeff *= c2;
                for (int j = 0; j < n; ++j) exps[j] += e2[j];
            } else if (i < s.size() && s[i] == '/') {
                const size_t slash = i;
                ++i;
                auto [c2, e2] = factor();
                if (c2 == 0) throw parse_error("division by zero", slash);
                coeff /= c2;
                for (int j = 0; j < n; ++j) exps[j] -= e2[j];
            } else {
                break;
            }
        }
        return {std::move(coeff), std::move(exps)};
    }

    LaurentSupport parse() {
        std::vector<std::pair<MVector, Rat>> terms;
        skip();
        bool neg = eat('-');
        if (!neg) eat('+');
        for (;;) {
            auto [coeff, exps] = term();
            terms.emplace_back(MVector(std::move(exps)), neg ? -coeff : coeff);
            skip();
            if (i >= s.size()) break;
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                throw parse_error("expected '+', '-' or end of input", i);
        }
        return LaurentSupport::from_terms(n, std::move(terms));
    }
};

}  // namespace

LaurentSupport parse_polynomial(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("polynomial needs at least one variable");
    Parser p{text, n};
    return p.parse();
}

}  // namespace hartoric
