#pragma once

// Fundamental systems of the merged diagrams and odd reflections on them.
// Simple roots are tracked as integer combinations of the ORIGINAL vertex
// roots; coroots as exact rational combinations of the original coroot
// symbols plus derivations, so pairings stay computable through any number
// of reflections.

#include <map>
#include <string>
#include <vector>

#include "superdual/head.hpp"
#include "superdual/weight.hpp"

namespace superdual::reflect {

// Integer combination of original simple roots, keyed by vertex id.
using RootExpr = std::map<std::string, long>;

std::string root_expr_str(const RootExpr& e);

struct SimpleRoot {
    RootExpr expr;
    weights::Coroot coroot;
    cartan::Parity parity;
};

class FundamentalSystem {
  public:
    // The standard system of a merged diagram: unit root expressions, the
    // flavor's canonical coroots, pairing matrix equal to the diagram matrix.
    static FundamentalSystem standard(const cartan::DynkinDiagram& d, cartan::Flavor flavor);

    const cartan::Sgcm& diagram_matrix() const { return base_; }
    cartan::Flavor flavor() const { return flavor_; }
    std::size_t size() const { return simples_.size(); }
    const SimpleRoot& simple(std::size_t i) const { return simples_[i]; }
    const std::vector<SimpleRoot>& simples() const { return simples_; }

    // <alpha_j, alpha_i^vee> of the current system.
    const Rat& pairing(std::size_t i, std::size_t j) const { return pairing_[i][j]; }

    // The current system as a Dynkin diagram (vertex ids are kept from the
    // original system; root expressions are reported separately).
    cartan::DynkinDiagram to_diagram() const;

    // Canonical weight of an original vertex root / of a root expression.
    weights::Weight vertex_root_weight(const std::string& id) const;
    weights::Weight root_weight(const RootExpr& e) const;

    // Copy with every stored root weight rewritten through
    // weights::truncate_weight at this rank (derivation weights expanded into
    // epsilons); the pairing matrix is unchanged.
    FundamentalSystem truncated(int rank2, const std::vector<int>& tails) const;

    // Position of the simple root with this expression, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find_simple(const RootExpr& e) const;

    friend FundamentalSystem odd_reflection(const FundamentalSystem& fs, std::size_t s);
    friend FundamentalSystem normalize_diagonal(const FundamentalSystem& fs);

  private:
    void recompute_pairing();

    cartan::Sgcm base_;
    cartan::Flavor flavor_ = cartan::Flavor::dg;
    std::map<std::string, weights::Weight> root_weights_;
    std::vector<SimpleRoot> simples_;
    std::vector<std::vector<Rat>> pairing_;
};

FundamentalSystem odd_reflection(const FundamentalSystem& fs, std::size_t s);
FundamentalSystem normalize_diagonal(const FundamentalSystem& fs);

// The displayed sequences of n(n+1)/2 odd roots (tail vertex ids of the dg
// diagram for the given tail).
std::vector<RootExpr> bc_sequence(int n, int tail = 0);
std::vector<RootExpr> bs_sequence(int n, int tail = 0);

// Applies the odd reflections in order; every element must be a simple
// isotropic odd root of the current system at its turn.
FundamentalSystem apply_sequence(FundamentalSystem fs, const std::vector<RootExpr>& seq);

// Highest-weight tracking along a reflection sequence: at an isotropic step
// alpha_s the weight moves by -alpha_s iff <lambda, alpha_s^vee> != 0.
weights::Weight track_highest_weight(weights::Weight lambda, FundamentalSystem fs,
                                     const std::vector<RootExpr>& seq);

}  // namespace superdual::reflect
