#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "json.hpp"

namespace sct {

// Exact Laurent polynomial in one indeterminate q with arbitrary-precision
// integer coefficients, i.e. an element of Z[q, q^-1].
//
// Canonical form: terms sorted by strictly ascending exponent, no zero
// coefficients stored.  Two values are equal iff their term lists are equal.
class LaurentPoly {
public:
    struct Term {
        long long exp = 0;
        mpz_class coeff;
    };

    LaurentPoly() = default;                       // zero
    explicit LaurentPoly(long long constant);
    LaurentPoly(mpz_class coeff, long long exp);   // coeff * q^exp

    static LaurentPoly q_power(long long k);       // q^k

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long min_exp() const;                     // requires non-zero
    long long max_exp() const;                     // requires non-zero

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b);

private:
    std::vector<Term> terms_;
};

LaurentPoly lp_from_term(const mpz_class& coeff, long long exp);
LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_neg(const LaurentPoly& a);

// (q-1)^k, expanded.  Throws std::invalid_argument for k < 0.
LaurentPoly lp_t_power(long long k);

// Exact substitution q := q0.  q0 = 0 is accepted only when no negative
// exponent is present; otherwise throws std::domain_error.
mpq_class lp_eval(const LaurentPoly& p, const mpq_class& q0);

bool lp_is_polynomial(const LaurentPoly& p);           // all exponents >= 0
bool lp_is_inverse_polynomial(const LaurentPoly& p);   // all exponents <= 0

// Canonical rendering: terms in strictly descending exponent order, explicit
// signs, q^k notation (q^-k for negative k, bare q for k = 1, bare integer
// for k = 0); the zero polynomial renders as "0".
std::string lp_to_string(const LaurentPoly& p);

// Parses the lp_to_string grammar (whitespace-tolerant); round-trips exactly.
// Throws std::invalid_argument on malformed input.
LaurentPoly lp_parse(const std::string& text);

// JSON object mapping exponent-as-string to coefficient-as-string, keys in
// descending exponent order, e.g. {"2":"1","1":"-1","0":"1"}.
nlohmann::ordered_json lp_to_json(const LaurentPoly& p);
LaurentPoly lp_from_json(const nlohmann::ordered_json& j);

}  // namespace sct
