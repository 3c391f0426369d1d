#include "arithlink/parse.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "arithlink/errors.hpp"

namespace arithlink {

namespace {

struct Token {
    char kind; // 'n' integer, 'e' end, otherwise the character itself
    std::string text;
    std::size_t column;
};

std::vector<Token> lex(std::string const& s)
{
    std::vector<Token> out;
    std::size_t col = 0;
    for (std::size_t i = 0; i < s.size();) {
        ++col;
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        /* U+2212 MINUS SIGN */
        if (c == 0xE2 && i + 2 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x88 &&
            static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out.push_back({'-', "-", col});
            i += 3;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({'n', s.substr(i, j - i), col});
            col += j - i - 1;
            i = j;
            continue;
        }
        if (std::string_view("z+-*^()[],P").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({static_cast<char>(c), std::string(1, static_cast<char>(c)), col});
            ++i;
            continue;
        }
        if (c >= 0x80) {
            /* skip the rest of a multibyte character */
            std::size_t j = i + 1;
            while (j < s.size() && (static_cast<unsigned char>(s[j]) & 0xC0) == 0x80)
                ++j;
            throw parse_error(col, "integer, 'z', '(', '+', '-', '*', '^'",
                              "unexpected character '" + s.substr(i, j - i) + "'");
        }
        throw parse_error(col, "integer, 'z', '(', '+', '-', '*', '^'",
                          std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    out.push_back({'e', "end of input", col + 1});
    return out;
}

class Parser {
  public:
    Parser(std::string const& text, CycloField F) : toks_(lex(text)), F_(std::move(F)) {}

    CycloElement element()
    {
        CycloElement x = expr();
        expect('e', "end of input");
        return x;
    }

    FactoredIdeal ideal(std::uint64_t seed)
    {
        FactoredIdeal I(F_);
        if (peek().kind == 'n' && peek().text == "1" && toks_[pos_ + 1].kind == 'e') {
            ++pos_;
            return I;
        }
        I *= item(seed);
        while (peek().kind == '*') {
            ++pos_;
            I *= item(seed);
        }
        expect('e', "'*' or end of input");
        return I;
    }

  private:
    Token const& peek() const { return toks_[pos_]; }

    Token const& expect(char kind, std::string const& what)
    {
        Token const& t = peek();
        if (t.kind != kind)
            throw parse_error(t.column, what, "found " + describe(t));
        ++pos_;
        return t;
    }

    static std::string describe(Token const& t)
    {
        return t.kind == 'e' ? std::string("end of input") : "'" + t.text + "'";
    }

    CycloElement expr()
    {
        bool neg = false;
        if (peek().kind == '-') {
            ++pos_;
            neg = true;
        }
        CycloElement x = term();
        if (neg)
            x = -x;
        for (;;) {
            char k = peek().kind;
            if (k != '+' && k != '-')
                return x;
            ++pos_;
            CycloElement y = term();
            x = k == '+' ? x + y : x - y;
        }
    }

    CycloElement term()
    {
        CycloElement x = factor();
        while (peek().kind == '*') {
            ++pos_;
            x = x * factor();
        }
        return x;
    }

    long exponent()
    {
        bool neg = false;
        if (peek().kind == '-') {
            ++pos_;
            neg = true;
        }
        Token const& t = expect('n', "integer exponent");
        mpz_class e(t.text);
        if (neg)
            e = -e;
        if (!e.fits_slong_p())
            throw parse_error(t.column, "integer exponent", "exponent out of range");
        return e.get_si();
    }

    CycloElement factor()
    {
        CycloElement x = atom();
        if (peek().kind == '^') {
            ++pos_;
            std::size_t col = peek().column;
            long e = exponent();
            if (e < 0 && x.is_zero())
                throw error(errc::division_by_zero,
                            "negative power of zero at column " + std::to_string(col));
            x = x.pow(e);
        }
        return x;
    }

    CycloElement atom()
    {
        Token const& t = peek();
        switch (t.kind) {
        case 'n':
            ++pos_;
            return F_.from_int(mpz_class(t.text));
        case 'z':
            ++pos_;
            return F_.zeta();
        case '(': {
            ++pos_;
            CycloElement x = expr();
            expect(')', "')'");
            return x;
        }
        default:
            throw parse_error(t.column, "integer, 'z' or '('", "found " + describe(t));
        }
    }

    FactoredIdeal item(std::uint64_t seed)
    {
        FactoredIdeal base(F_);
        Token const& t = peek();
        if (t.kind == '(') {
            ++pos_;
            CycloElement x = expr();
            expect(')', "')'");
            if (x.is_zero())
                throw error(errc::zero_element, "principal ideal of zero at column " +
                                                    std::to_string(t.column));
            auto fac = factor_element(x, seed);
            if (!fac.excluded_primes.empty())
                throw error(errc::ramified_prime,
                            "element at column " + std::to_string(t.column) +
                                " has support over " + std::to_string(fac.excluded_primes[0]) +
                                ", which divides m");
            base = fac.ideal;
        } else if (t.kind == 'P') {
            ++pos_;
            expect('(', "'('");
            Token const& pt = expect('n', "prime p");
            mpz_class pz(pt.text);
            if (!pz.fits_ulong_p())
                throw parse_error(pt.column, "prime p", "prime out of range");
            expect(',', "','");
            expect('[', "'['");
            ZPoly g;
            for (;;) {
                bool neg = false;
                if (peek().kind == '-') {
                    ++pos_;
                    neg = true;
                }
                mpz_class c(expect('n', "integer coefficient").text);
                g.push_back(neg ? mpz_class(-c) : c);
                if (peek().kind == ',') {
                    ++pos_;
                    continue;
                }
                expect(']', "',' or ']'");
                break;
            }
            expect(')', "')'");
            base = FactoredIdeal(PrimeIdeal(F_, pz.get_ui(), g));
        } else {
            throw parse_error(t.column, "'(' or 'P'", "found " + describe(t));
        }
        if (peek().kind == '^') {
            ++pos_;
            base = base.pow(exponent());
        }
        return base;
    }

    std::vector<Token> toks_;
    CycloField F_;
    std::size_t pos_ = 0;
};

} // namespace

CycloElement parse_element(std::string const& text, CycloField const& F)
{
    return Parser(text, F).element();
}

FactoredIdeal parse_ideal(std::string const& text, CycloField const& F, std::uint64_t seed)
{
    return Parser(text, F).ideal(seed);
}

} // namespace arithlink
