#pragma once

// Weyl groups of even GCMs. Elements act on the root lattice and are stored
// by their integer matrices, so equality is exact; normal forms are shortlex
// reduced words discovered by breadth-first enumeration.

#include <cstdint>
#include <map>
#include <vector>

#include "superdual/sgcm.hpp"

namespace superdual::coxkl {

class WeylGroup {
  public:
    explicit WeylGroup(cartan::Sgcm gcm);

    int rank() const { return n_; }
    const cartan::Sgcm& gcm() const { return gcm_; }

    // Enumerates all elements of length <= L (id has index 0).
    void ensure_length(int L);
    int enumerated_length() const { return max_len_; }
    std::size_t size() const { return words_.size(); }

    int length(std::size_t w) const { return static_cast<int>(words_[w].size()); }
    const std::vector<int>& word(std::size_t w) const { return words_[w]; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // w*s; npos if the product exceeds the enumerated length.
    std::size_t mult_gen(std::size_t w, int s) const;
    std::size_t inverse(std::size_t w) const { return inverse_[w]; }
    std::size_t from_word(const std::vector<int>& word) const;

    bool right_descent(std::size_t w, int s) const;
    bool left_descent(std::size_t w, int s) const {
        return right_descent(inverse_[w], s);
    }

    bool bruhat_leq(std::size_t x, std::size_t w) const;

    // Image of a root-lattice vector under w.
    std::vector<long> act(std::size_t w, const std::vector<long>& v) const;

  private:
    std::size_t intern(const std::vector<long>& mat, const std::vector<long>& inv,
                       std::vector<int> word);
    std::vector<long> gen_matrix(int s) const;
    std::vector<long> mat_mul(const std::vector<long>& a, const std::vector<long>& b) const;

    cartan::Sgcm gcm_;
    int n_ = 0;
    int max_len_ = -1;
    std::vector<std::vector<long>> mats_;      // column j = w(alpha_j)
    std::vector<std::vector<long>> inv_mats_;
    std::vector<std::vector<int>> words_;
    std::vector<std::size_t> inverse_;
    std::map<std::vector<long>, std::size_t> index_;
    mutable std::map<std::pair<std::size_t, std::size_t>, bool> bruhat_memo_;
};

}  // namespace superdual::coxkl
