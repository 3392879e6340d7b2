#pragma once

// Kostant homology of nilradicals of explicit gl models, the u^+ cochain
// side for the duality check, and the KLV polynomials read off the homology.

#include "superdual/glmodel.hpp"
#include "superdual/laurent.hpp"

namespace superdual::oracle {

// Weights are diagonal-coordinate vectors.
using WeightDims = std::map<std::vector<Rat>, long>;

struct KostantResult {
    std::vector<WeightDims> homology;    // H_n(u^-, M) weight dims, n = 0..max
    std::vector<WeightDims> levi_mults;  // levi highest weights per degree
};

// blocks: slot sizes of the block-triangular parabolic (e.g. {2,1} for the
// maximal parabolic of gl(3)); u^- is the strictly lower block part.
KostantResult kostant_homology(const ExplicitModule& M, const std::vector<int>& blocks,
                               int max_degree);

// H^n(u^+, M) weight dims from the cochain complex Hom(Lambda^n u^+, M).
std::vector<WeightDims> u_plus_cohomology(const ExplicitModule& M,
                                          const std::vector<int>& blocks, int max_degree);

// l_{mu lambda}(q) = sum_n (-q)^{-n} [Hom_l(L(l,mu), H_n)], keyed by the levi
// highest weight mu.
std::map<std::vector<Rat>, Laurent> klv_from_homology(const ExplicitModule& M,
                                                      const std::vector<int>& blocks,
                                                      int max_degree);

}  // namespace superdual::oracle
