#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sct {

// Aitken's array (Bell triangle): a[1,1] = 1, a[n,1] = a[n-1,n-1],
// a[n,k] = a[n,k-1] + a[n-1,k-1]; Bell numbers on the boundary.
struct AitkenTable {
    std::vector<std::vector<mpz_class>> rows;  // rows[n-1] holds a[n,1..n]

    const mpz_class& at(int n, int k) const;   // 1-based, throws out of range
};

AitkenTable aitken(int max_n);   // max_n >= 1

mpz_class bell(int n);           // n >= 0

// b[n,k] by its combinatorial definition: for k < n the number of arc sets
// on [n] containing the arc k⌢n; for k = n the number with no arc into n.
mpz_class b_count(int n, int k);

// All of b[n,1..n] in a single enumeration sweep; index 0 is unused.
std::vector<mpz_class> b_count_row(int n);

// b[n,k,j] by its combinatorial definition (1 <= j < k <= n-1, n >= 3):
// for k < n-1 the number of arc sets containing both j⌢n and k⌢(n-1);
// for k = n-1 the number containing j⌢n and having no arc into n-1.
mpz_class b3_count(int n, int k, int j);

// All of b[n,k,j] for fixed n in one sweep; table[k][j], unused cells zero.
std::vector<std::vector<mpz_class>> b3_count_table(int n);

// The three-index recursion filled exactly as displayed:
//   b[3,2,1] = 1
//   b[n,2,1] = b[n-1,n-2,1]
//   b[n,j+1,j] = b[n,j+1,j-1] + b[n-1,j,j-1]        (j >= 2)
//   b[n,k,j] = b[n,k-1,j] + b[n-1,k-1,j]            otherwise
struct NestTable {
    int max_n = 0;
    std::vector<std::vector<std::vector<mpz_class>>> v;  // v[n][k][j]

    const mpz_class& at(int n, int k, int j) const;      // throws out of range
};

NestTable b3_recursion(int max_n);   // max_n >= 3

enum class SeqRoute { enumerate, formula };

// arcs(n) = sum of |lambda|, dim(n) = sum of dim(lambda), nst(n) = sum of
// nst(lambda, lambda), over all arc sets of [n].  The enumerate route sums
// directly; the formula route uses
//   arcs(n) = sum_{k=1}^{n-1} k * b[n,k]
//   dim(n)  = sum_{k=1}^{n-1} k (n-k) * b[n,k]
//   nst(n)  = sum_{j<k<=n-2} j (k-j) * b[n,k,j]
// with b/b3 taken from the combinatorial (normative) definitions.
mpz_class arcs_seq(int n, SeqRoute route);
mpz_class dim_seq(int n, SeqRoute route);
mpz_class nst_seq(int n, SeqRoute route);

struct SeqCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

// Cross-checks every sequence identity up to max_n: route agreement for
// arcs/dim/nst, the Aitken row shift b[n,k] = a[n-1,k], the Bell sum rule,
// the span-position independence behind dim(n), and the reconciliation of
// the three-index recursion against the combinatorial values (the recursion
// reproduces the combinatorial table shifted by one row; the comparison
// enumerates max_n + 1 to classify every disagreement).
std::vector<SeqCheck> reconcile_sequences(int max_n);   // max_n >= 1

}  // namespace sct
