#include "recring/parse.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace recring {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool done() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + why);
    }

    std::string digits() {
        std::string out;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            out += text[pos++];
        return out;
    }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const CoefficientRing& ring) {
    Lexer lex{text};
    std::vector<Term> terms;

    if (lex.done())
        lex.fail("empty polynomial");

    bool first = true;
    while (!lex.done()) {
        Int sign = 1;
        if (!first) {
            char op = lex.peek();
            if (op == '+')
                ++lex.pos;
            else if (op == '-') {
                ++lex.pos;
                sign = -1;
            } else
                lex.fail(std::string("expected '+' or '-', found '") + op + "'");
        }
        first = false;

        // one term: sign-prefixed factors joined by '*'
        Int coeff = sign;
        std::vector<Monomial::Factor> factors;
        bool expect_factor = true;
        while (expect_factor) {
            char c = lex.peek();
            while (c == '+' || c == '-') {
                if (c == '-')
                    coeff = -coeff;
                ++lex.pos;
                c = lex.peek();
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= Int(lex.digits());
            } else if (c == 'x' || c == 'X') {
                ++lex.pos;
                std::string idx = lex.digits();
                if (idx.empty())
                    lex.fail("variable needs an index, e.g. x1");
                long long index = 0;
                try {
                    index = std::stoll(idx);
                } catch (const std::exception&) {
                    lex.fail("variable index out of range");
                }
                if (index < 1)
                    lex.fail("variable indices start at 1");
                factors.emplace_back(static_cast<int>(index), 1);
            } else {
                lex.fail(c == '\0' ? "unexpected end of input"
                                   : std::string("unexpected character '") + c + "'");
            }
            if (lex.peek() == '*') {
                ++lex.pos;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        terms.push_back(Term{std::move(coeff), Monomial::from_factors(std::move(factors))});
    }

    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace recring
