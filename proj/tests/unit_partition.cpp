#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "modrep/partition.hpp"

using namespace modrep;
using part::BlockLabel;
using part::Partition;

TEST_CASE("beta numbers") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        int ip = static_cast<int>(p);
        // lam = (2p): beta_1 = 4p-1, beta_i = 2p-i for i >= 2
        Partition row({2 * ip});
        auto beta = part::beta_numbers(row, p);
        CHECK(beta[0] == 4 * ip - 1);
        for (int i = 2; i <= 2 * ip; ++i) CHECK(beta[i - 1] == 2 * ip - i);
        // lam = (1^{2p}): beta_i = 2p + 1 - i
        Partition col(std::vector<int>(2 * ip, 1));
        auto beta2 = part::beta_numbers(col, p);
        for (int i = 1; i <= 2 * ip; ++i) CHECK(beta2[i - 1] == 2 * ip + 1 - i);
        // padding: s parts => beta_{s+1} = 2p - s - 1
        Partition lam({ip + 1, ip - 1});
        auto beta3 = part::beta_numbers(lam, p);
        CHECK(beta3[2] == 2 * ip - 3);
    }
    CHECK_THROWS_AS(part::beta_numbers(Partition({3}), 3), part::PartitionError);
}

TEST_CASE("abacus round trip over all block partitions") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (const auto& lam : part::all_partitions(2 * static_cast<int>(p))) {
            if (lam.length() > 2 * static_cast<int>(p)) continue;
            auto d = part::abacus_display(lam, p);
            CHECK(part::partition_of(d) == lam);
        }
    }
}

TEST_CASE("p-core and weight") {
    // principal block of 2p: core empty, weight 2
    auto [core, w] = part::p_core_and_weight(Partition({6}), 3);
    CHECK(core.length() == 0);
    CHECK(w == 2);
    // a p-core maps to itself with weight 0
    auto [c2, w2] = part::p_core_and_weight(Partition({4, 2}), 3);
    CHECK(c2 == Partition({4, 2}));
    CHECK(w2 == 0);
    // (8,2) at p=5: core (3,2), weight 1
    auto [c3, w3] = part::p_core_and_weight(Partition({8, 2}), 5);
    CHECK(c3 == Partition({3, 2}));
    CHECK(w3 == 1);
    // |lam| = |core| + p*weight across small cases
    for (int d = 1; d <= 9; ++d)
        for (const auto& lam : part::all_partitions(d)) {
            auto [c, wt] = part::p_core_and_weight(lam, 3);
            CHECK(lam.size() == c.size() + 3 * wt);
        }
}

TEST_CASE("block labels") {
    // (2^p) -> <2,1>
    for (std::uint32_t p : {3u, 5u, 7u}) {
        Partition two_col(std::vector<int>(p, 2));
        auto l = part::block_label(two_col, p);
        CHECK(l == BlockLabel::pair(2, 1));
        // <u> = (p+u, 1^{p-u})
        for (int u = 1; u <= static_cast<int>(p); ++u) {
            std::vector<int> parts{static_cast<int>(p) + u};
            for (int k = 0; k < static_cast<int>(p) - u; ++k) parts.push_back(1);
            CHECK(part::block_label(Partition(parts), p) == BlockLabel::single(u));
            CHECK(part::label_to_partition(BlockLabel::single(u), p) == Partition(parts));
        }
    }
    // <p> -> (2p)
    CHECK(part::label_to_partition(BlockLabel::single(5), 5) == Partition({10}));
    // <2,1> -> (2^p)
    CHECK(part::label_to_partition(BlockLabel::pair(2, 1), 5) == Partition({2, 2, 2, 2, 2}));
    // <3> at p=5 -> (8,1,1)
    CHECK(part::label_to_partition(BlockLabel::single(3), 5) == Partition({8, 1, 1}));
    CHECK_THROWS_AS(part::block_label(Partition({4, 2}), 3), part::PartitionError);
}

TEST_CASE("label round trip for all weight-2 partitions, p up to 13") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        int count = 0;
        for (const auto& lam : part::all_partitions(2 * static_cast<int>(p))) {
            auto [core, w] = part::p_core_and_weight(lam, p);
            if (core.length() != 0 || w != 2) continue;
            auto l = part::block_label(lam, p);
            CHECK(part::label_to_partition(l, p) == lam);
            ++count;
        }
        // labels <v>, <u,v>, <v,v> exhaust the block
        int ip = static_cast<int>(p);
        CHECK(count == ip + ip * (ip - 1) / 2 + ip);
    }
}

TEST_CASE("p-regularity") {
    CHECK_FALSE(part::is_p_regular(Partition({2, 2, 2}), 3));
    CHECK(part::is_p_regular(Partition({6}), 3));
    // block classification: singular iff <2,1> or <u,u>, over labels with <= p parts
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        for (const auto& lam : part::partitions_in(static_cast<int>(p), 2 * static_cast<int>(p))) {
            auto [core, w] = part::p_core_and_weight(lam, p);
            if (core.length() != 0 || w != 2) continue;
            auto l = part::block_label(lam, p);
            bool singular_by_label =
                (l.kind == BlockLabel::Repeat) || (l == BlockLabel::pair(2, 1));
            CHECK(part::is_p_regular(lam, p) == !singular_by_label);
        }
    }
}

TEST_CASE("dominance order") {
    CHECK(part::dominance_leq(Partition({6, 4}), Partition({8, 2})));
    CHECK_FALSE(part::dominance_leq(Partition({8, 2}), Partition({6, 4})));
    CHECK(part::dominance_leq(Partition({3, 2, 1}), Partition({3, 2, 1})));
    CHECK_THROWS_AS(part::dominance_leq(Partition({2}), Partition({3})), part::PartitionError);
}

TEST_CASE("dominance lemma items for labels, p up to 13") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        int ip = static_cast<int>(p);
        auto lab = [p](const BlockLabel& l) { return part::label_to_partition(l, p); };
        // (1) <u> >= <v> iff u >= v
        for (int u = 1; u <= ip; ++u)
            for (int v = 1; v <= ip; ++v)
                CHECK(part::dominance_leq(lab(BlockLabel::single(v)), lab(BlockLabel::single(u))) ==
                      (u >= v));
        for (int u = 2; u <= ip; ++u)
            for (int v = 1; v < u; ++v) {
                // (2) <u,v> > <u,v-1>
                if (v >= 2 && !(u == v)) {
                    auto hi = lab(BlockLabel::pair(u, v));
                    auto lo = lab(BlockLabel::pair(u, v - 1));
                    CHECK(part::dominance_leq(lo, hi));
                    CHECK(lo != hi);
                }
                // (3) <u,v> > <u-1,v> when u-1 > v
                if (u - 1 > v) {
                    auto hi = lab(BlockLabel::pair(u, v));
                    auto lo = lab(BlockLabel::pair(u - 1, v));
                    CHECK(part::dominance_leq(lo, hi));
                    CHECK(lo != hi);
                }
            }
        // (4) <u> > <p,u> for u != p
        for (int u = 1; u < ip; ++u) {
            auto hi = lab(BlockLabel::single(u));
            auto lo = lab(BlockLabel::pair(ip, u));
            CHECK(part::dominance_leq(lo, hi));
            CHECK(lo != hi);
        }
    }
}

TEST_CASE("dominance is a partial order on partitions of d <= 8") {
    for (int d = 1; d <= 8; ++d) {
        auto all = part::all_partitions(d);
        for (const auto& a : all)
            for (const auto& b : all) {
                if (part::dominance_leq(a, b) && part::dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : all)
                    if (part::dominance_leq(a, b) && part::dominance_leq(b, c))
                        CHECK(part::dominance_leq(a, c));
            }
    }
}

TEST_CASE("standard tableaux counts") {
    CHECK(part::std_tableaux_count(Partition({6})) == 1);
    CHECK(part::std_tableaux_count(Partition({2, 2, 2})) == 5);
    CHECK(part::std_tableaux_count(Partition({3, 2, 1})) == 16);
    // sum of squares = d!
    unsigned long long fact = 1;
    for (int d = 1; d <= 8; ++d) {
        fact *= d;
        unsigned long long s = 0;
        for (const auto& lam : part::all_partitions(d)) {
            unsigned long long f = part::std_tableaux_count(lam);
            s += f * f;
        }
        CHECK(s == fact);
    }
}

TEST_CASE("young permutation dims") {
    CHECK(part::young_perm_dim(Partition({6})) == 1);
    CHECK(part::young_perm_dim(Partition({2, 2, 2})) == 90);
    CHECK(part::young_perm_dim(Partition({5, 1})) == 6);
}

TEST_CASE("partitions_in") {
    auto l36 = part::partitions_in(3, 6);
    CHECK(l36.size() == 7);
    CHECK(l36.front() == Partition({6}));
    CHECK(l36.back() == Partition({2, 2, 2}));
    CHECK(part::partitions_in(1, 5) == std::vector<Partition>{Partition({5})});
    CHECK(part::partitions_in(6, 6).size() == 11);
    // order refines dominance
    for (std::size_t i = 0; i < l36.size(); ++i)
        for (std::size_t j = i + 1; j < l36.size(); ++j)
            CHECK_FALSE((part::dominance_leq(l36[i], l36[j]) && l36[i] != l36[j]));
}

TEST_CASE("principal block quiver p=3") {
    auto g = part::principal_block_quiver(3);
    CHECK(g.vertices.size() == 5);
    CHECK(g.edges.size() == 6);
    CHECK(g.has_edge(BlockLabel::single(3), BlockLabel::single(2)));
    CHECK(g.has_edge(BlockLabel::single(2), BlockLabel::single(1)));
    CHECK(g.has_edge(BlockLabel::single(3), BlockLabel::pair(3, 1)));
    CHECK(g.has_edge(BlockLabel::pair(3, 2), BlockLabel::pair(3, 1)));
    CHECK(g.has_edge(BlockLabel::single(2), BlockLabel::pair(3, 2)));
    CHECK(g.has_edge(BlockLabel::single(1), BlockLabel::pair(3, 1)));
}

TEST_CASE("principal block quiver p=5 matches the drawn 14-vertex diagram") {
    auto g = part::principal_block_quiver(5);
    CHECK(g.vertices.size() == 14);
    // golden edge list transcribed from the drawn quiver
    std::set<std::pair<std::string, std::string>> expected = {
        {"<5>", "<4>"},     {"<5>", "<5,3>"},   {"<5,4>", "<5,3>"}, {"<5,4>", "<4,2>"},
        {"<4,3>", "<4,2>"}, {"<4,3>", "<3,1>"}, {"<3,2>", "<3,1>"}, {"<4>", "<5,4>"},
        {"<4>", "<3>"},     {"<5,3>", "<5,2>"}, {"<5,3>", "<4,3>"}, {"<4,2>", "<4,1>"},
        {"<4,2>", "<3,2>"}, {"<3>", "<2>"},     {"<3>", "<5,3>"},   {"<5,2>", "<5,1>"},
        {"<5,2>", "<4,2>"}, {"<4,1>", "<3,1>"}, {"<2>", "<5,2>"},   {"<2>", "<1>"},
        {"<5,1>", "<4,1>"}, {"<1>", "<5,1>"},
    };
    CHECK(g.edges.size() == expected.size());
    for (const auto& [a, b] : expected)
        CHECK(g.has_edge(BlockLabel::parse(a), BlockLabel::parse(b)));
    // every edge joins two p-regular vertices
    for (const auto& [i, j] : g.edges) {
        CHECK(part::is_p_regular(part::label_to_partition(g.vertices[i], 5), 5));
        CHECK(part::is_p_regular(part::label_to_partition(g.vertices[j], 5), 5));
    }
}

TEST_CASE("label serialization") {
    CHECK(BlockLabel::single(3).to_string() == "<3>");
    CHECK(BlockLabel::pair(5, 2).to_string() == "<5,2>");
    CHECK(BlockLabel::repeat(4).to_string() == "<4,4>");
    CHECK(BlockLabel::parse("<5,2>") == BlockLabel::pair(5, 2));
    CHECK(BlockLabel::parse("<4,4>") == BlockLabel::repeat(4));
    CHECK(Partition::parse("8,1,1") == Partition({8, 1, 1}));
    CHECK(Partition({8, 1, 1}).to_string() == "8,1,1");
}
