#pragma once

// Schur polynomials, hook (super) Schur polynomials, and the
// Littlewood-Richardson rule, all by direct tableau enumeration.

#include <map>
#include <string>
#include <vector>

#include "superdual/partition.hpp"

namespace superdual::symfunc {

// Monomials ordered graded-lex, highest first; no zero coefficients stored.
struct GradedLexDesc {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = 0, db = 0;
        for (auto v : a) da += v;
        for (auto v : b) db += v;
        if (da != db) return da > db;
        return a > b;
    }
};

using Poly = std::map<std::vector<int>, long long, GradedLexDesc>;

Poly poly_mul(const Poly& a, const Poly& b);
std::string poly_str(const Poly& p, const std::vector<std::string>& vars);

// Sum over semistandard tableaux of shape mu with entries in 1..m; zero when
// l(mu) > m.
Poly schur(const Partition& mu, int m);

// Skew version, shape mu/nu (nu inside mu).
Poly skew_schur(const Partition& mu, const Partition& nu, int m);

// Hook Schur polynomial in x_1..x_m; y_1..y_n: sum over (m|n)-supertableaux.
// Exponent vectors have length m+n (x block then y block). Zero iff
// mu_{m+1} > n.
Poly hook_schur(const Partition& mu, int m, int n);

// c^lambda_{mu nu} over all lambda with positive coefficient.
std::map<Partition, long> lr_coefficients(const Partition& mu, const Partition& nu);

// Decompose a symmetric polynomial in m variables as an integer combination
// of Schur polynomials by repeated leading-monomial extraction. Throws if a
// leading monomial is not a partition.
std::map<Partition, long long> schur_decompose(Poly p, int m);

}  // namespace superdual::symfunc
