#include "sct/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace sct {

LaurentPoly::LaurentPoly(long long constant) {
    if (constant != 0)
        terms_.push_back({0, mpz_class(static_cast<long>(constant))});
}

LaurentPoly::LaurentPoly(mpz_class coeff, long long exp) {
    if (coeff != 0)
        terms_.push_back({exp, std::move(coeff)});
}

LaurentPoly LaurentPoly::q_power(long long k) {
    return LaurentPoly(mpz_class(1), k);
}

long long LaurentPoly::min_exp() const {
    if (terms_.empty())
        throw std::logic_error("min_exp of zero polynomial");
    return terms_.front().exp;
}

long long LaurentPoly::max_exp() const {
    if (terms_.empty())
        throw std::logic_error("max_exp of zero polynomial");
    return terms_.back().exp;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        r.terms_.push_back({t.exp, -t.coeff});
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const auto& ta = a.terms_[i];
        const auto& tb = b.terms_[j];
        if (ta.exp < tb.exp) {
            r.terms_.push_back(ta);
            ++i;
        } else if (tb.exp < ta.exp) {
            r.terms_.push_back(tb);
            ++j;
        } else {
            mpz_class c = ta.coeff + tb.coeff;
            if (c != 0)
                r.terms_.push_back({ta.exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i)
        r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j)
        r.terms_.push_back(b.terms_[j]);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::map<long long, mpz_class> acc;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            acc[ta.exp + tb.exp] += ta.coeff * tb.coeff;
    LaurentPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [exp, coeff] : acc)
        if (coeff != 0)
            r.terms_.push_back({exp, std::move(coeff)});
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    *this = *this + o;
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    *this = *this - o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
}

LaurentPoly lp_from_term(const mpz_class& coeff, long long exp) {
    return LaurentPoly(coeff, exp);
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) { return a - b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly lp_neg(const LaurentPoly& a) { return -a; }

LaurentPoly lp_t_power(long long k) {
    if (k < 0)
        throw std::invalid_argument("lp_t_power: negative exponent");
    const LaurentPoly t = LaurentPoly::q_power(1) - LaurentPoly(1);
    LaurentPoly acc(1);
    for (long long i = 0; i < k; ++i)
        acc *= t;
    return acc;
}

static mpq_class pow_q0(const mpq_class& q0, long long e) {
    if (e == 0)
        return 1;
    mpz_class num = q0.get_num();
    mpz_class den = q0.get_den();
    unsigned long long mag = e > 0 ? static_cast<unsigned long long>(e)
                                   : static_cast<unsigned long long>(-e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), mag);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), mag);
    mpq_class r;
    if (e > 0)
        r = mpq_class(pn) / mpq_class(pd);
    else
        r = mpq_class(pd) / mpq_class(pn);
    r.canonicalize();
    return r;
}

mpq_class lp_eval(const LaurentPoly& p, const mpq_class& q0) {
    if (q0 == 0) {
        mpq_class r = 0;
        for (const auto& t : p.terms()) {
            if (t.exp < 0)
                throw std::domain_error("lp_eval: q = 0 with negative exponent");
            if (t.exp == 0)
                r += mpq_class(t.coeff);
        }
        return r;
    }
    mpq_class r = 0;
    for (const auto& t : p.terms())
        r += mpq_class(t.coeff) * pow_q0(q0, t.exp);
    r.canonicalize();
    return r;
}

bool lp_is_polynomial(const LaurentPoly& p) {
    return p.is_zero() || p.min_exp() >= 0;
}

bool lp_is_inverse_polynomial(const LaurentPoly& p) {
    return p.is_zero() || p.max_exp() <= 0;
}

std::string lp_to_string(const LaurentPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    const auto& ts = p.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const bool first = it == ts.rbegin();
        const bool negative = it->coeff < 0;
        mpz_class mag = abs(it->coeff);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1 || it->exp == 0)
            out += mag.get_str();
        if (it->exp != 0) {
            out += "q";
            if (it->exp != 1)
                out += "^" + std::to_string(it->exp);
        }
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    std::string read_digits() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            throw std::invalid_argument("lp_parse: expected digits at position " +
                                        std::to_string(start));
        return s.substr(start, pos - start);
    }

    long long read_exponent() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        long long e = std::stoll(read_digits());
        return neg ? -e : e;
    }

    // term := [coefficient] ['q' ['^' exponent]]
    void read_term(bool negative, std::map<long long, mpz_class>& acc) {
        skip_ws();
        mpz_class coeff = 1;
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = mpz_class(read_digits());
            have_coeff = true;
        }
        long long exp = 0;
        skip_ws();
        if (pos < s.size() && s[pos] == 'q') {
            ++pos;
            exp = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exp = read_exponent();
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("lp_parse: expected term at position " +
                                        std::to_string(pos));
        }
        if (negative)
            coeff = -coeff;
        acc[exp] += coeff;
    }
};

}  // namespace

LaurentPoly lp_parse(const std::string& text) {
    Parser p(text);
    std::map<long long, mpz_class> acc;
    if (p.eof())
        throw std::invalid_argument("lp_parse: empty input");
    bool negative = false;
    if (p.peek() == '-' || p.peek() == '+') {
        negative = p.peek() == '-';
        ++p.pos;
    }
    p.read_term(negative, acc);
    while (!p.eof()) {
        char sign = p.peek();
        if (sign != '+' && sign != '-')
            throw std::invalid_argument("lp_parse: expected '+' or '-' at position " +
                                        std::to_string(p.pos));
        ++p.pos;
        p.read_term(sign == '-', acc);
    }
    LaurentPoly r;
    for (auto& [exp, coeff] : acc)
        r += LaurentPoly(coeff, exp);
    return r;
}

nlohmann::ordered_json lp_to_json(const LaurentPoly& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    const auto& ts = p.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it)
        j[std::to_string(it->exp)] = it->coeff.get_str();
    return j;
}

LaurentPoly lp_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object())
        throw std::invalid_argument("lp_from_json: expected object");
    LaurentPoly r;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string())
            throw std::invalid_argument("lp_from_json: coefficient must be a string");
        long long exp = std::stoll(key);
        r += LaurentPoly(mpz_class(value.get<std::string>()), exp);
    }
    return r;
}

}  // namespace sct
