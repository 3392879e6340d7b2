#pragma once

// Head diagrams (a base SGCM B with isotropic tail attachment points) and the
// three merged diagram families built from them. Tail vertices are named
// "t<tailId>:<2r>", with half-integer indices stored doubled, so "t0:-2" is
// the attachment vertex indexed -1 of tail 0.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superdual/sgcm.hpp"

namespace superdual::cartan {

enum class Flavor { dg, g, sg };

Flavor flavor_of(const std::string& name);
std::string flavor_name(Flavor f);

struct Attachment {
    std::string target;  // vertex id in the base
    long b, c;           // b = <alpha_{-1}, gamma^vee>, c = <gamma, alpha_{-1}^vee>
};

struct TailSpec {
    int id = 0;
    std::vector<Attachment> attachments;
};

struct CrossEdge {
    int tail_i, tail_j;
    long dij, dji;  // labels on the edge between the two attachment vertices
};

struct HeadSpec {
    Sgcm base;
    std::vector<TailSpec> tails;
    std::vector<CrossEdge> cross;

    // The matrix A^hd: base plus one isotropic odd row/column per tail.
    Sgcm head_matrix() const;
    static std::string tail_vertex_id(int tail, int idx2);
};

// Condition (A): every attachment label pair is nonzero, with b constrained
// by the parity/diagonal of the target vertex. is_sgcm mirrors whether A^hd
// validates.
ValidationReport check_head_condition(const HeadSpec& h);

// rank2 maps tail id -> doubled rank: dg wants 2r with r in {-1} u (1/2)N,
// g wants 2n with n >= 1, sg wants 2n with n in N u {-1}.
DynkinDiagram build_merged_diagram(const HeadSpec& h, const std::map<int, int>& rank2,
                                   Flavor flavor);
DynkinDiagram build_merged_diagram(const HeadSpec& h, int rank2, Flavor flavor);

// Drops tail vertices beyond the new rank; the diagram must have been built
// at a rank >= n.
DynkinDiagram truncate_diagram(const DynkinDiagram& d, Flavor flavor, int rank2);

// Named head specs with exactly the labels printed for them: G3, F31,
// D21a(<alpha>), gl(<m>|1), osp(2<m>+1|2) etc., affineB, affineD, affineA.
HeadSpec preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace superdual::cartan
