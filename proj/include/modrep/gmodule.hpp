#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modrep/fp.hpp"
#include "modrep/partition.hpp"

namespace modrep::grp {

// Permutation on {0..d-1} as its image vector.
using Perm = std::vector<int>;

Perm perm_identity(int d);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& a);
Perm adjacent_transposition(int d, int i);  // s_i swaps i-1 and i (1-based i)
int perm_sign(const Perm& a);
std::vector<int> cycle_type(const Perm& a);  // decreasing cycle lengths

// Reduced word of g in the adjacent transpositions s_1..s_{d-1}.
std::vector<int> adjacent_word(const Perm& g);

// All elements of S_d in a BFS order where each element is parent * s_gen.
struct GroupTree {
    int degree = 0;
    std::vector<Perm> elems;    // elems[0] = identity
    std::vector<int> parent;    // parent[0] = -1
    std::vector<int> gen;       // generator index (1-based) applied on the left
};
GroupTree build_group_tree(int d);

// Module over kS_d given by the action matrices of s_1..s_{d-1}.
struct GModule {
    std::uint32_t prime = 3;
    std::size_t dim = 0;
    std::vector<fp::FpMatrix> gens;
    std::string origin;

    int degree() const { return static_cast<int>(gens.size()) + 1; }
    fp::FpMatrix act(const Perm& g) const;
    std::vector<std::uint8_t> act_vec(const Perm& g, const std::vector<std::uint8_t>& v) const;
};

// Involution, braid and distant-commutation relations hold exactly.
bool verify_symmetric_relations(const GModule& m);

struct PermModuleData {
    GModule mod;
    part::Partition lambda;
    // tabloid r: row index of each element; tabloids holds all of them in
    // lexicographic order, reach[r] maps the canonical tabloid to tabloid r
    std::vector<std::vector<std::uint8_t>> tabloids;
    std::vector<Perm> reach;

    std::size_t index_of(const std::vector<std::uint8_t>& tab) const;
};

PermModuleData perm_module(const part::Partition& lam, std::uint32_t p);

struct SpechtModuleData {
    GModule mod;
    fp::FpMatrix embedding;  // dim M x dim S, columns are standard polytabloids
};

SpechtModuleData specht_module(const part::Partition& lam, std::uint32_t p);

GModule tensor_space(int n, int d, std::uint32_t p);

// Indices of basis tensors with the given content (composition of d).
std::vector<std::size_t> tensor_weight_space(int n, int d, const std::vector<int>& content);

// Simple preserving duality: transposed generator matrices.
GModule dual_natural(const GModule& m);

GModule induce(const GModule& m);     // kS_{d-1}-module -> kS_d-module
GModule restrict_down(const GModule& m);

// Basis of Hom_{kS_d}(m, n) as matrices X with X g_m = g_n X.
std::vector<fp::FpMatrix> hom_space(const GModule& m, const GModule& n);

// Fast path via fixed points of the Young subgroup.
std::vector<fp::FpMatrix> hom_from_perm(const PermModuleData& m, const GModule& n);

// Sum of the action matrices over one conjugacy class (a central operator).
fp::FpMatrix class_sum_operator(const GModule& m, const std::vector<int>& cycle_type_of_class);

// All d-cycles-type list of S_d conjugacy classes.
std::vector<std::vector<int>> conjugacy_classes(int d);

GModule submodule(const GModule& m, const fp::FpMatrix& basis_cols, const std::string& origin);
GModule quotient_module(const GModule& m, const fp::FpMatrix& sub_basis_cols, const std::string& origin);
GModule direct_sum(const GModule& a, const GModule& b);

}  // namespace modrep::grp
