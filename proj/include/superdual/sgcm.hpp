#pragma once

// Super generalized Cartan matrices and their Dynkin diagrams.
//
// Convention used throughout: a[i][j] = <alpha_j, alpha_i^vee>, i.e. row i is
// the coroot of vertex i paired against every simple root. An edge label
// printed as (a_ij, a_ji) between vertices i (left) and j (right) therefore
// reads (a[i][j], a[j][i]).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superdual/numeric.hpp"

namespace superdual::cartan {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline Parity parity_sum(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

struct Sgcm {
    std::vector<std::string> indices;
    std::vector<Parity> parity;
    std::vector<std::vector<long>> entries;

    std::size_t size() const { return indices.size(); }
    long at(std::size_t i, std::size_t j) const { return entries[i][j]; }

    std::size_t find(const std::string& id) const {
        for (std::size_t i = 0; i < indices.size(); ++i)
            if (indices[i] == id) return i;
        throw DomainError("no vertex named '" + id + "'");
    }
    bool has(const std::string& id) const {
        for (auto& s : indices)
            if (s == id) return true;
        return false;
    }

    // Sub-matrix on the given vertex ids, in the given order.
    Sgcm submatrix(const std::vector<std::string>& ids) const;

    bool is_even() const {
        for (auto p : parity)
            if (p == Parity::Odd) return false;
        return true;
    }
};

struct Violation {
    std::string condition;  // "C0".."C3", "C1'", "shape"
    std::string i, j;       // offending vertex id(s); j may be empty
};

struct ValidationReport {
    bool is_sgcm = false;
    bool is_anisotropic = false;
    std::vector<Violation> violations;
};

// Checks (C0)-(C3); is_anisotropic additionally requires (C1').
ValidationReport validate_sgcm(const Sgcm& m);

// Positive rational diagonal D with D*A symmetric, normalized so the first
// entry of every connected component is 1. Absent if none exists.
std::optional<std::vector<Rat>> symmetrizer(const Sgcm& m);

struct DynkinVertex {
    std::string id;
    Parity parity;
    long diag;  // 0 or 2
};

struct DynkinEdge {
    std::string from, to;
    long label_ft, label_tf;  // a[from][to], a[to][from]
};

struct DynkinDiagram {
    std::vector<DynkinVertex> vertices;
    std::vector<DynkinEdge> edges;

    static DynkinDiagram from_sgcm(const Sgcm& m);
    Sgcm to_sgcm() const;

    std::string to_json() const;
    static DynkinDiagram from_json(const std::string& text);
};

}  // namespace superdual::cartan
