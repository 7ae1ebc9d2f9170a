#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sct/arcs.hpp"
#include "sct/laurent.hpp"

namespace sct {

// A matrix kind names the basis pair (rows expand in terms of columns):
// chi-kappa is the supercharacter table itself, rho-kappa and kappa-rho the
// two transition matrices between the q-power-sum and superclass-identifier
// bases, chi-rho the lower-triangular factor.  kappa-kappa / rho-rho arise
// only as products (identity checks).
enum class MatrixKind { chi_kappa, rho_kappa, kappa_rho, chi_rho, kappa_kappa, rho_rho };

std::string to_string(MatrixKind kind);
MatrixKind matrix_kind_from_string(const std::string& s);

// Square matrix of Laurent polynomials indexed by the totally ordered list
// of arc sets of [n]; entries[r][c] pairs order[r] with order[c].
struct BasisMatrix {
    int n = 0;
    MatrixKind kind = MatrixKind::chi_kappa;
    std::vector<ArcSet> order;
    std::vector<std::vector<LaurentPoly>> entries;

    friend bool operator==(const BasisMatrix&, const BasisMatrix&) = default;
};

// chi^lambda_mu: zero when mu meets cflt(lambda), else
// (q-1)^{|lambda| - |lambda ∩ mu|} q^{dim(lambda) - |lambda| - nst(lambda,mu)}
// (-1)^{|lambda ∩ mu|}.
LaurentPoly supercharacter_value(const ArcSet& lambda, const ArcSet& mu);

// Coefficient of kappa_mu in rho_nu(q): q^{-nst(nu, mu - nu)} when nu ⊆ mu,
// else zero.
LaurentPoly rho_to_kappa_coeff(const ArcSet& nu, const ArcSet& mu);

// Coefficient of rho_nu in kappa_mu: (-1)^{|nu - mu|} q^{-nst(nu, nu - mu)}
// when mu ⊆ nu, else zero.
LaurentPoly kappa_to_rho_coeff(const ArcSet& mu, const ArcSet& nu);

// Coefficient of rho_nu in chi^lambda as the defining sum over subsets of nu
// (the oracle): sum_{mu ⊆ nu} chi^lambda_mu (-1)^{|nu - mu|} q^{-nst(nu, nu - mu)}.
LaurentPoly chi_to_rho_bruteforce(const ArcSet& lambda, const ArcSet& nu);

// The closed product formula for the same coefficient (the production path);
// must agree with chi_to_rho_bruteforce on every input.
LaurentPoly chi_to_rho_closed(const ArcSet& lambda, const ArcSet& nu);

// (-1)^{|lambda|} q^{dim(lambda) - nst(lambda, lambda)}.
LaurentPoly diagonal_coeff(const ArcSet& lambda);

// Fills all Bell(n)^2 entries for one of the four constructible kinds
// (chi-rho uses the closed formula); rows and columns in ascending total
// order.  n = 0 gives the 1x1 identity.
BasisMatrix build_matrix(int n, MatrixKind kind);

// Exact product; kinds must compose (the target basis of a equals the source
// basis of b), e.g. chi-rho x rho-kappa -> chi-kappa.
BasisMatrix matrix_multiply(const BasisMatrix& a, const BasisMatrix& b);

struct Counterexample {
    std::string row_key;
    std::string col_key;
    std::string expected;
    std::string actual;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::optional<Counterexample> counterexample;
};

struct VerifyReport {
    int n = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

// Builds C (chi-kappa), A (chi-rho), B (rho-kappa), K (kappa-rho) and checks:
// C = A*B, lower/upper triangularity, Z[q] / Z[q^-1] integrality, the
// diagonal formula, closed = brute force on all pairs, and K*B = B*K = I.
VerifyReport verify_decomposition(int n);

// Product of the chi-rho diagonal (valid since det B = 1).
LaurentPoly determinant(int n);

// (-1)^{arcs(n)} q^{dim(n) - nst(n)} from the sequences module.
LaurentPoly determinant_formula(int n);

// Fraction-free (Bareiss) determinant of an exact integer matrix.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

// Integer determinant of the supercharacter table evaluated at q = q0.
mpz_class table_determinant_at(int n, const mpz_class& q0);

// CSV: corner cell holds the kind, first row / first column hold canonical
// ArcSet strings (always quoted), entries rendered by lp_to_string.
std::string matrix_to_csv(const BasisMatrix& m);
BasisMatrix matrix_from_csv(const std::string& text);

// JSON: {"n": ..., "kind": ..., "order": [keys...], "entries": [[{...}]]}.
nlohmann::ordered_json matrix_to_json(const BasisMatrix& m);
BasisMatrix matrix_from_json(const nlohmann::ordered_json& j);

}  // namespace sct
