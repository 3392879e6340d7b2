#pragma once

// R-polynomials, Kazhdan-Lusztig polynomials and Deodhar's parabolic
// variants, plus the block multiplicity tables they induce.
//
// KL polynomials are computed from the canonical basis of the Hecke module
// over Z[v,v^{-1}] with H_s^2 = (v^{-1}-v)H_s + 1: the self-dual element
// b_w = sum_y h_{y,w} H_y has h_{y,w} = v^{l(w)-l(y)} P_{y,w}(v^{-2}).
// R-polynomials use the independent classical recursion and serve as the
// cross-check route.

#include <mutex>

#include "superdual/coxeter.hpp"
#include "superdual/laurent.hpp"

namespace superdual::coxkl {

enum class ParabolicConvention { UMinusOne, UQ };

class KLTable {
  public:
    // levi: generator indices spanning W_J; empty for the ordinary case.
    KLTable(WeylGroup& w, std::vector<int> levi = {},
            ParabolicConvention conv = ParabolicConvention::UMinusOne);

    // x must lie in ^JW (no left descent in J); partial words outside the
    // quotient are rejected.
    bool in_quotient(std::size_t x) const;

    // P^{J,u}_{x,w}(q); zero unless x <= w in the quotient order.
    Laurent kl(std::size_t x, std::size_t w);

    // classical R_{x,w}(q)
    Laurent r_polynomial(std::size_t x, std::size_t w);

    WeylGroup& group() { return w_; }

  private:
    using Elt = std::map<std::size_t, Laurent>;  // module element over n_y, coeffs in v

    Elt mult_hs(const Elt& e, int s) const;      // right action of H_s
    const Elt& bar_of(std::size_t y);            // bar(n_y)
    const Elt& canonical(std::size_t w);         // b_w

    WeylGroup& w_;
    std::vector<int> levi_;
    Laurent sigma_;  // scalar action of H_{s_j}, j in levi
    std::map<std::size_t, Elt> bar_memo_;
    std::map<std::size_t, Elt> canonical_memo_;
    std::map<std::pair<std::size_t, std::size_t>, Laurent> r_memo_;
    std::mutex mu_;
};

// One block entry: mu = target - sum(offset_j alpha_j) with the given
// coroot pairings of mu, and the coefficient m_{mu lambda}.
struct BlockEntry {
    std::vector<long> offset;
    std::vector<long> pairings;
    long m;
};

// m_{mu lambda} for the block of a dot-regular lambda (given by its coroot
// pairings), where the parabolic category is taken with respect to the levi
// generator set. Entries are limited to Weyl elements of length <= cutoff.
std::vector<BlockEntry> multiplicity_table(WeylGroup& w, const std::vector<int>& levi,
                                           const std::vector<long>& lambda_pairings,
                                           int cutoff,
                                           ParabolicConvention conv =
                                               ParabolicConvention::UMinusOne);

// Signed Weyl orbit data for integrable weights: all w with
// ht((lambda+rho) - w(lambda+rho)) <= max_height, optionally restricted to
// minimal coset representatives of W_levi \ W, with sign (-1)^{l(w)}.
struct OrbitTerm {
    std::vector<long> offset;  // (lambda+rho) - w(lambda+rho) in root coords
    std::vector<long> pairings;  // <w(lambda+rho), alpha_i^vee>
    int sign;
};
std::vector<OrbitTerm> weyl_orbit_signs(WeylGroup& w, const std::vector<long>& lam_rho_pairings,
                                        int max_height, const std::vector<int>& levi_min = {});

}  // namespace superdual::coxkl
