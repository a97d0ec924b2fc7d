#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modrep::part {

struct PartitionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Weakly decreasing sequence of positive integers. The empty partition is
// allowed and denotes the partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-indexed

    Partition conjugate() const;

    bool operator==(const Partition& o) const = default;
    auto operator<=>(const Partition& o) const = default;

    std::string to_string() const;                  // "8,1,1"; "" for empty
    static Partition parse(const std::string& s);

private:
    std::vector<int> parts_;
};

// Abacus display with `prime` runners; bead positions are the beta numbers.
// Runner of position q is (q mod p) + 1, numbered 1..p.
struct AbacusDisplay {
    std::uint32_t prime = 3;
    std::set<int> beads;

    int runner(int pos) const { return pos % static_cast<int>(prime) + 1; }
    bool principal_weight2() const;  // 2p beads, two per runner in the core sense
    std::string to_string() const;   // row-by-row picture, '.' gap / 'o' bead
};

// Case (a) single <v>, case (b) pair <u,v> with u > v, case (c) repeat <v,v>.
struct BlockLabel {
    enum Kind { Single, Pair, Repeat } kind = Single;
    int u = 0;  // Pair: larger runner; unused for Single/Repeat
    int v = 0;

    bool operator==(const BlockLabel& o) const = default;
    auto operator<=>(const BlockLabel& o) const = default;

    std::string to_string() const;  // "<v>", "<u,v>", "<v,v>"
    static BlockLabel parse(const std::string& s);
    static BlockLabel single(int v) { return {Single, 0, v}; }
    static BlockLabel pair(int u, int v);
    static BlockLabel repeat(int v) { return {Repeat, 0, v}; }
};

// beta_i = lambda_i - i + 2p for i <= #parts, padding with -i + 2p beyond.
// Requires |lambda| = 2p and at most 2p parts.
std::vector<int> beta_numbers(const Partition& lam, std::uint32_t p);

AbacusDisplay abacus_display(const Partition& lam, std::uint32_t p);
Partition partition_of(const AbacusDisplay& display);

// p-core and p-weight of an arbitrary partition (display re-sized as needed).
std::pair<Partition, int> p_core_and_weight(const Partition& lam, std::uint32_t p);

// Classification of a weight-2 empty-core partition of 2p by its movable beads.
BlockLabel block_label(const Partition& lam, std::uint32_t p);
Partition label_to_partition(const BlockLabel& label, std::uint32_t p);

bool is_p_regular(const Partition& lam, std::uint32_t p);

// True iff a <= b in the dominance order. Requires |a| = |b|.
bool dominance_leq(const Partition& a, const Partition& b);

// Undirected graph on the p-regular block labels.
struct LabelGraph {
    std::vector<BlockLabel> vertices;
    std::set<std::pair<std::size_t, std::size_t>> edges;  // index pairs, i < j

    bool has_edge(const BlockLabel& a, const BlockLabel& b) const;
    std::size_t index_of(const BlockLabel& l) const;
};

// Gabriel quiver of the principal weight-2 block as a graph on labels.
// Edge families are inferred from the drawn p = 5 picture; the rule is
// validated against the computed Ext^1 quiver at p = 3 (see tests) and is
// exact data, not a theorem, for p > 5.
LabelGraph principal_block_quiver(std::uint32_t p);

// Number of standard Young tableaux (hook length formula, exact integers).
unsigned long long std_tableaux_count(const Partition& lam);

// dim M^lambda = |lambda|! / prod(lambda_i!). Throws on 64-bit overflow.
unsigned long long young_perm_dim(const Partition& lam);

// All partitions of d with at most n parts, in descending graded-lex order
// (which refines dominance: earlier entries are more dominant).
std::vector<Partition> partitions_in(int n, int d);

std::vector<Partition> all_partitions(int d);

}  // namespace modrep::part
