#pragma once

// Brute-force ground truth from contravariant ranks: root multiplicities of
// symmetrizable SGCMs and Verma/irreducible weight multiplicities through
// exact linear algebra on free slices.

#include <map>
#include <vector>

#include "superdual/freelie.hpp"

namespace superdual::oracle {

struct RootDatum {
    std::vector<long> coords;  // over the diagram vertices
    long mult;
    cartan::Parity parity;
};

// Positive roots of height <= H with multiplicity = rank of the pairing of
// the free Lie slice against all raising monomials. Requires a symmetrizer.
std::vector<RootDatum> root_multiplicities(const cartan::Sgcm& a, int height);

struct WeightMults {
    std::vector<long> offset;  // gamma, in simple-root coordinates
    long verma;
    long irr;
};

// Verma multiplicity (super PBW count) and irreducible multiplicity
// (Shapovalov-type rank) at lambda - gamma for ht(gamma) <= depth.
std::vector<WeightMults> shapovalov_multiplicities(const cartan::Sgcm& a,
                                                   const std::vector<Rat>& lambda_pairings,
                                                   int depth);

// dim U(u^-) per weight offset, from a root list (even roots contribute
// symmetric powers, odd roots exterior ones).
std::map<std::vector<long>, long> pbw_dimensions(const std::vector<RootDatum>& roots,
                                                 int height);

// Hard caps for the desk-scale oracle.
inline constexpr int kMaxDepth = 8;
inline constexpr std::size_t kMaxSlice = 5000;

}  // namespace superdual::oracle
