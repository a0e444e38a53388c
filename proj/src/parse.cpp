#include "denv/parse.hpp"

#include <cctype>

namespace denv {

namespace {

class Parser {
public:
    Parser(const std::string& src, const Field& field, bool allow_x) : s_(src), field_(field), allow_x_(allow_x) {}

    RatFun parse() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        RatFun r = expr();
        skip();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    RatFun expr() {
        RatFun acc = term();
        while (true) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    RatFun term() {
        RatFun acc = unary();
        while (true) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                const std::size_t at = pos_;
                RatFun d = unary();
                if (d.is_zero()) throw ParseError(at + 1, "division by the zero polynomial");
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RatFun unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    RatFun power() {
        RatFun base = atom();
        if (!eat('^')) return base;
        const bool paren = eat('(');
        bool neg = eat('-');
        if (!neg) eat('+');
        skip();
        const std::size_t at = pos_;
        const mpz_class e = integer();
        if (paren) expect(')');
        if (e > kMaxParsedExponent) throw ParseError(at + 1, "exponent too large");
        const int n = static_cast<int>(e.get_si());
        if (neg && base.is_zero()) throw ParseError(at + 1, "division by the zero polynomial");
        return base.pow(neg ? -n : n);
    }

    mpz_class integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(s_.substr(start, pos_ - start));
    }

    RatFun atom() {
        skip();
        if (pos_ == s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(Scalar(mpq_class(integer())));
        if (c == '(') {
            ++pos_;
            RatFun r = expr();
            expect(')');
            return r;
        }
        if (s_.compare(pos_, 5, "sqrt(") == 0) {
            const std::size_t at = pos_;
            pos_ += 5;
            const bool neg = eat('-');
            mpz_class d = integer();
            if (neg) d = -d;
            expect(')');
            if (!field_.has_generator() || d != field_.d) {
                throw ParseError(at + 1, "sqrt(" + d.get_str() + ") is not in the field " + field_.tag());
            }
            return RatFun(Scalar::generator(field_.d));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (name == "x") {
                if (!allow_x_) throw ParseError(start + 1, "a constant is expected here");
                return RatFun::x();
            }
            if (name == "i") {
                if (field_.d != -1) throw ParseError(start + 1, "i is only available in the gauss field");
                return RatFun(Scalar::generator(-1));
            }
            throw ParseError(start + 1, "unknown identifier '" + name + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    const Field& field_;
    bool allow_x_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_ratfun(const std::string& src, const Field& field) { return Parser(src, field, true).parse(); }

Scalar parse_scalar(const std::string& src, const Field& field) {
    const RatFun r = Parser(src, field, false).parse();
    return r.num().is_zero() ? Scalar() : r.num().coeff(0);
}

}  // namespace denv
