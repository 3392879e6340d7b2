#pragma once

// Weight and coroot coordinates for the merged diagram families.
//
// Weights are kept in a canonical sparse form over the symbols
//   Omega           the fundamental weight of the derivation(s), <omega,d>=1
//   TailOmega(t)    per-tail derivation weight omega^{(t)}
//   HeadFw(k)       fundamental weight of head vertex k
//   Eps(t,2r)       epsilon_r^{(t)},  2r in {-2} u N
// The tail fundamental weights omega_r^{(t)} are rewritten into epsilons on
// input (omega_{-1} = eps_{-1}, omega_{1/2} = eps_{-1}-eps_{1/2}, ...).
// Coroots live over {HeadCoroot(k), TailCoroot(t,2r), Derivation(t)}; the
// h_r basis expands into those.
//
// Half-integer indices are stored doubled throughout.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "superdual/head.hpp"
#include "superdual/numeric.hpp"
#include "superdual/partition.hpp"

namespace superdual::weights {

enum class SymKind : unsigned char { Omega = 0, TailOmega = 1, HeadFw = 2, Eps = 3 };

struct Sym {
    SymKind kind = SymKind::Omega;
    int tail = 0;
    int index2 = 0;
    std::string head;

    friend bool operator<(const Sym& a, const Sym& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.tail != b.tail) return a.tail < b.tail;
        if (a.index2 != b.index2) return a.index2 < b.index2;
        return a.head < b.head;
    }
    friend bool operator==(const Sym& a, const Sym& b) {
        return a.kind == b.kind && a.tail == b.tail && a.index2 == b.index2 &&
               a.head == b.head;
    }
};

class Weight {
  public:
    Weight() = default;

    const std::map<Sym, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Sym& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    Rat eps_coeff(int tail, int idx2) const {
        return coeff({SymKind::Eps, tail, idx2, ""});
    }
    Rat head_coeff(const std::string& id) const {
        return coeff({SymKind::HeadFw, 0, 0, id});
    }

    void add(const Sym& s, const Rat& c);
    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rat& c, Weight w);
    friend bool operator<(const Weight& a, const Weight& b) { return a.terms_ < b.terms_; }
    friend bool operator==(const Weight& a, const Weight& b) { return a.terms_ == b.terms_; }

    // Tails whose eps/omega symbols appear.
    std::set<int> tails() const;

    std::string str() const;
    std::string to_json() const;
    static Weight from_json(const std::string& text);

  private:
    std::map<Sym, Rat> terms_;
};

enum class CorKind : unsigned char { HeadCoroot = 0, TailCoroot = 1, Derivation = 2 };

struct CorSym {
    CorKind kind = CorKind::Derivation;
    int tail = 0;
    int index2 = 0;
    std::string head;

    friend bool operator<(const CorSym& a, const CorSym& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.tail != b.tail) return a.tail < b.tail;
        if (a.index2 != b.index2) return a.index2 < b.index2;
        return a.head < b.head;
    }
    friend bool operator==(const CorSym& a, const CorSym& b) {
        return a.kind == b.kind && a.tail == b.tail && a.index2 == b.index2 &&
               a.head == b.head;
    }
};

class Coroot {
  public:
    Coroot() = default;
    const std::map<CorSym, Rat>& terms() const { return terms_; }
    void add(const CorSym& s, const Rat& c);
    Coroot& operator+=(const Coroot& o);
    Coroot& operator-=(const Coroot& o);
    friend Coroot operator+(Coroot a, const Coroot& b) { return a += b; }
    friend Coroot operator-(Coroot a, const Coroot& b) { return a -= b; }
    friend Coroot operator*(const Rat& c, Coroot w);
    friend bool operator==(const Coroot& a, const Coroot& b) { return a.terms_ == b.terms_; }
    std::string str() const;

  private:
    std::map<CorSym, Rat> terms_;
};

// --- basis builders ---
Weight omega();
Weight tail_omega(int tail);
Weight head_fw(const std::string& id);
Weight eps(int tail, int idx2);
Weight tail_fw(int tail, int idx2);  // omega_r, rewritten into epsilons

Coroot head_coroot(const std::string& id);
Coroot tail_coroot(int tail, int idx2);  // alpha_r^vee as an atomic symbol
Coroot derivation(int tail);
Coroot h_coroot(int tail, int idx2);  // h_r over {coroots, derivation}

Rat pair(const Weight& w, const Coroot& c);

// varpi_j: the tail fundamental weights of the g (integers) and sg (halves)
// families; idx2 in {-2} u N.
Weight varpi(int tail, int idx2);

// The interleaved Frobenius sequence (mu'_1, <mu_1-1>, <mu'_2-1>, ...);
// entry k (0-based) is the coefficient of eps_{(k+1)/2}.
std::vector<long> frobenius_theta(const symfunc::Partition& mu);

// Tail partition of lambda at integer indices (eps_{1}, eps_2, ...).
symfunc::Partition tail_partition(const Weight& w, int tail);

Weight natural_map(const Weight& w);
Weight theta_map(const Weight& w);

// lambda in P^+ for the given Levi subset J of head vertices: integer eps
// coefficients per tail form a partition and kappa_i lies in Z+ (2Z+ for odd
// head vertices) for i in J.
bool in_P_plus(const Weight& w, const cartan::Sgcm& head, const std::vector<std::string>& J);

// Integrable sets: P++ for the even-side family (tail tuples
// (c_{-1}, c_1, c_2, ...) are partitions), and the rank -1 script variant
// (support {eps_{-1}, eps_{1/2}}, c_{1/2} != 0 only if c_{-1} != 0).
bool in_P_plusplus_G(const Weight& w, const cartan::Sgcm& head);
bool in_P_plusplus_script(const Weight& w, const cartan::Sgcm& head);

// Allowed eps indices (doubled) for the flavor at doubled rank; includes the
// gl(1|1) slot 1 at rank -1 for sg/dg.
bool eps_index_allowed(cartan::Flavor flavor, int rank2, int idx2);

// Present iff every eps coefficient outside the allowed window vanishes; the
// result has Omega/TailOmega rewritten into the rank-n epsilon expansion.
std::optional<Weight> truncate_weight(const Weight& w, cartan::Flavor flavor, int rank2,
                                      const std::vector<int>& tails);

}  // namespace superdual::weights
