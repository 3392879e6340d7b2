#pragma once

// Explicit gl(m|n) models: matrix-unit structure constants, Verma and
// irreducible weight multiplicities by raising-chain ranks, small explicit
// modules, and the tau-twisted restricted dual.

#include <map>
#include <string>
#include <vector>

#include "superdual/qmatrix.hpp"
#include "superdual/sgcm.hpp"

namespace superdual::oracle {

class GlModel {
  public:
    GlModel(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int slots() const { return m_ + n_; }
    int rank() const { return m_ + n_ - 1; }  // number of simple roots

    bool slot_odd(int a) const { return a >= m_; }
    cartan::Parity unit_parity(int a, int b) const {
        return (slot_odd(a) != slot_odd(b)) ? cartan::Parity::Odd : cartan::Parity::Even;
    }

    // The distinguished SGCM of the simple system E_{k,k+1}.
    cartan::Sgcm sgcm() const;

    // super bracket of matrix units: list of (a, b, coeff) with E_{ab}.
    std::vector<std::tuple<int, int, Rat>> bracket(int a, int b, int c, int d) const;

    // <functional, coroot of alpha_k>; functionals are diagonal-coordinate
    // vectors of length m+n.
    Rat pair_coroot(const std::vector<Rat>& f, int k) const;

    // Verma/irreducible multiplicities at lambda - gamma, gamma in
    // simple-root coordinates of height <= depth; lambda by diagonal coords.
    struct WM {
        std::vector<long> offset;
        long verma;
        long irr;
    };
    std::vector<WM> shapovalov(const std::vector<Rat>& lambda, int depth) const;

  private:
    int m_, n_;
};

// Finite-dimensional module with an explicit basis and matrix-unit actions.
struct ExplicitModule {
    const GlModel* model = nullptr;
    std::size_t dim = 0;
    std::vector<std::vector<Rat>> basis_weights;  // diagonal coords per vector
    std::vector<cartan::Parity> basis_parity;
    // action[(a,b)] = dim x dim matrix of E_{ab}
    std::map<std::pair<int, int>, QMatrix> action;

    QMatrix act(int a, int b) const;
    // checks [E_ab, E_cd] = structure constants on the module
    void verify_is_module() const;
};

ExplicitModule trivial_module(const GlModel& model);
ExplicitModule natural_module(const GlModel& model);

// Restricted dual with the tau-twisted action
// (x.f)(v) = (-1)^{p(x)p(f)+1} f(tau(x) v), tau(E) per the Chevalley
// generators tau(e_i) = -(-1)^{p(e_i)} f_i, tau(f_i) = -e_i, tau(h) = -h.
ExplicitModule dual_module(const ExplicitModule& mod);

}  // namespace superdual::oracle
