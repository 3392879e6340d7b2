#pragma once

// Character constructions over the merged diagram families: PBW factors,
// Levi irreducibles, parabolic Vermas, Weyl-Kac characters, the super-duality
// transfer, truncation, and integrable tensor decomposition.

#include "superdual/character.hpp"
#include "superdual/kl.hpp"
#include "superdual/oracle.hpp"

namespace superdual::chars {

// Context for a fixed head/flavor/rank.
struct FlavorContext {
    cartan::HeadSpec head;
    cartan::Flavor flavor;
    int rank2;
    std::shared_ptr<const reflect::FundamentalSystem> fs;
    std::vector<int> tail_ids;

    static FlavorContext make(const cartan::HeadSpec& head, cartan::Flavor flavor, int rank2);
};

// Positive roots of the merged diagram up to the height, with multiplicities
// and parities. Uses reflection closure for finite even diagrams, the
// contravariant oracle when a positive symmetrizer exists, and otherwise the
// dg-route (roots of the dg diagram restricted to the flavor sublattice).
std::vector<oracle::RootDatum> flavor_positive_roots(const FlavorContext& ctx, int height);

// Positive roots of a plain even diagram (reflection closure / oracle).
std::vector<oracle::RootDatum> even_positive_roots(const cartan::Sgcm& gcm, int height);

FormalCharacter pbw_factor(std::shared_ptr<const reflect::FundamentalSystem> fs,
                           const std::vector<oracle::RootDatum>& roots, int cutoff);

// Irreducible character of the Levi l = (head restricted to J) + (tail minus
// the attachment vertices) at the flavor-side highest weight.
FormalCharacter levi_irreducible_char(const FlavorContext& ctx,
                                      const std::vector<std::string>& J,
                                      const weights::Weight& lambda, int cutoff);

FormalCharacter parabolic_verma_char(const FlavorContext& ctx,
                                     const std::vector<std::string>& J,
                                     const weights::Weight& lambda, int cutoff);

// Weyl-Kac character of an even symmetrizable diagram at a dominant integral
// weight given by its coroot pairings; anchored at sum_i p_i omega_i.
FormalCharacter weyl_kac_char(const cartan::Sgcm& gcm, const std::vector<long>& pairings,
                              int cutoff);
FormalCharacter weyl_kac_char(const FlavorContext& ctx, const weights::Weight& lambda,
                              int cutoff);

// One multiplicity entry of a character formula: mu (a P-side weight) with
// its integer coefficient.
struct MEntry {
    weights::Weight mu;
    long long m;
};

// The signed sum  sum_mu m_mu ch Delta(target-map(mu))  over entries whose
// mapped weight survives truncation to the target rank.
FormalCharacter superduality_transfer(const FlavorContext& target,
                                      const std::vector<std::string>& J,
                                      const std::vector<MEntry>& table, int cutoff);

// BGG-type table for an integrable dominant P-side weight: mu = w . lambda
// over minimal coset representatives of the Levi, m = (-1)^{l(w)}.
std::vector<MEntry> integrable_mtable(const FlavorContext& gside,
                                      const std::vector<std::string>& J,
                                      const weights::Weight& lambda, int max_height);

// Keeps exactly the terms whose weight passes truncate_weight; the result
// lives on the rank-n diagram of the same flavor.
FormalCharacter truncate_char(const FormalCharacter& ch, const cartan::HeadSpec& head,
                              cartan::Flavor flavor, int rank2);

// Character of the integrable irreducible with highest weight lambda, either
// by Weyl-Kac (flavor g) or through the transfer (sg/dg).
FormalCharacter integrable_char(const FlavorContext& ctx, const std::vector<std::string>& J,
                                const weights::Weight& lambda, int cutoff);

// Tensor product decomposition by iterated leading-term extraction.
std::map<weights::Weight, long long> tensor_decompose_integrable(
    const FlavorContext& ctx, const std::vector<std::string>& J,
    const weights::Weight& lambda, const weights::Weight& mu, int cutoff);

}  // namespace superdual::chars
