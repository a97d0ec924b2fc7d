#include "modrep/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace modrep::part {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw PartitionError("parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw PartitionError("parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int part : parts_)
        for (int j = 0; j < part; ++j) ++conj[j];
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

bool AbacusDisplay::principal_weight2() const {
    std::vector<int> per_runner(prime, 0);
    for (int b : beads) ++per_runner[b % prime];
    return beads.size() == 2 * prime &&
           std::all_of(per_runner.begin(), per_runner.end(), [](int c) { return c == 2; });
}

std::string AbacusDisplay::to_string() const {
    if (beads.empty()) return "";
    int last = *beads.rbegin();
    int rows = last / static_cast<int>(prime) + 1;
    std::ostringstream os;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < static_cast<int>(prime); ++c)
            os << (beads.count(r * prime + c) ? 'o' : '.');
        if (r + 1 < rows) os << '\n';
    }
    return os.str();
}

std::string BlockLabel::to_string() const {
    std::ostringstream os;
    os << '<';
    switch (kind) {
        case Single: os << v; break;
        case Pair: os << u << ',' << v; break;
        case Repeat: os << v << ',' << v; break;
    }
    os << '>';
    return os.str();
}

BlockLabel BlockLabel::parse(const std::string& s) {
    if (s.size() < 3 || s.front() != '<' || s.back() != '>')
        throw PartitionError("bad label: " + s);
    std::string body = s.substr(1, s.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string::npos) return single(std::stoi(body));
    int a = std::stoi(body.substr(0, comma));
    int b = std::stoi(body.substr(comma + 1));
    if (a == b) return repeat(a);
    return pair(a, b);
}

BlockLabel BlockLabel::pair(int u, int v) {
    if (!(v >= 1 && v < u)) throw PartitionError("pair label needs u > v >= 1");
    return {Pair, u, v};
}

std::vector<int> beta_numbers(const Partition& lam, std::uint32_t p) {
    int two_p = 2 * static_cast<int>(p);
    if (lam.size() != two_p)
        throw PartitionError("partition size must be 2p");
    if (lam.length() > two_p) throw PartitionError("too many parts for a 2p-bead display");
    std::vector<int> beta(two_p);
    for (int i = 1; i <= two_p; ++i) beta[i - 1] = lam.part(i - 1) - i + two_p;
    return beta;
}

AbacusDisplay abacus_display(const Partition& lam, std::uint32_t p) {
    AbacusDisplay d;
    d.prime = p;
    for (int b : beta_numbers(lam, p)) d.beads.insert(b);
    if (d.beads.size() != 2 * p) throw PartitionError("beta numbers not distinct");
    return d;
}

Partition partition_of(const AbacusDisplay& display) {
    std::vector<int> beta(display.beads.begin(), display.beads.end());
    std::sort(beta.rbegin(), beta.rend());
    int n = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) {
        int part = beta[i - 1] + i - n;
        if (part > 0) parts.push_back(part);
        else if (part < 0) throw PartitionError("invalid bead set");
    }
    return Partition(std::move(parts));
}

std::pair<Partition, int> p_core_and_weight(const Partition& lam, std::uint32_t p) {
    // Display on enough beads, stack every runner upward, read off the core.
    int s = lam.length();
    int nbeads = s + static_cast<int>(p);  // any count >= s works; fix s + p
    std::set<int> beads;
    for (int i = 1; i <= nbeads; ++i) beads.insert(lam.part(i - 1) - i + nbeads);
    int weight = 0;
    std::set<int> core_beads;
    for (std::uint32_t r = 0; r < p; ++r) {
        std::vector<int> rows;
        for (int b : beads)
            if (b % static_cast<int>(p) == static_cast<int>(r)) rows.push_back(b / static_cast<int>(p));
        std::sort(rows.begin(), rows.end());
        for (std::size_t k = 0; k < rows.size(); ++k) {
            weight += rows[k] - static_cast<int>(k);
            core_beads.insert(static_cast<int>(k) * static_cast<int>(p) + static_cast<int>(r));
        }
    }
    AbacusDisplay core_display{p, core_beads};
    return {partition_of(core_display), weight};
}

namespace {
// Gap counts above each bead, grouped by runner: list of (runner, gaps) for
// beads with at least one free spot directly reachable above them.
std::vector<std::pair<int, int>> movable_beads(const AbacusDisplay& d) {
    std::vector<std::pair<int, int>> out;
    int p = static_cast<int>(d.prime);
    for (int b : d.beads) {
        int gaps = 0;
        for (int q = b - p; q >= 0; q -= p)
            if (!d.beads.count(q)) ++gaps;
        if (gaps) out.push_back({b % p + 1, gaps});
    }
    return out;
}
}  // namespace

BlockLabel block_label(const Partition& lam, std::uint32_t p) {
    auto [core, weight] = p_core_and_weight(lam, p);
    if (core.length() != 0 || weight != 2)
        throw PartitionError("partition is not in the principal weight-2 block");
    AbacusDisplay d = abacus_display(lam, p);
    auto mov = movable_beads(d);
    if (mov.size() == 1 && mov[0].second == 2) return BlockLabel::single(mov[0].first);
    if (mov.size() == 2 && mov[0].second == 1 && mov[1].second == 1) {
        int a = mov[0].first, b = mov[1].first;
        if (a == b) return BlockLabel::repeat(a);
        return BlockLabel::pair(std::max(a, b), std::min(a, b));
    }
    throw PartitionError("unexpected movable-bead pattern");
}

Partition label_to_partition(const BlockLabel& label, std::uint32_t p) {
    int ip = static_cast<int>(p);
    if (label.v < 1 || label.v > ip || (label.kind == BlockLabel::Pair && (label.u < 1 || label.u > ip)))
        throw PartitionError("label index out of range");
    std::set<int> beads;
    for (int q = 0; q < 2 * ip; ++q) beads.insert(q);
    switch (label.kind) {
        case BlockLabel::Single:
            beads.erase(label.v - 1 + ip);
            beads.insert(label.v - 1 + 3 * ip);
            break;
        case BlockLabel::Pair:
            beads.erase(label.u - 1 + ip);
            beads.erase(label.v - 1 + ip);
            beads.insert(label.u - 1 + 2 * ip);
            beads.insert(label.v - 1 + 2 * ip);
            break;
        case BlockLabel::Repeat:
            beads.erase(label.v - 1);
            beads.insert(label.v - 1 + 2 * ip);
            break;
    }
    return partition_of(AbacusDisplay{p, beads});
}

bool is_p_regular(const Partition& lam, std::uint32_t p) {
    int run = 1;
    for (int i = 1; i < lam.length(); ++i) {
        if (lam.parts()[i] == lam.parts()[i - 1]) {
            if (++run >= static_cast<int>(p)) return false;
        } else {
            run = 1;
        }
    }
    return run < static_cast<int>(p);
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw PartitionError("dominance needs equal sizes");
    int n = std::max(a.length(), b.length());
    long sa = 0, sb = 0;
    for (int i = 0; i < n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

bool LabelGraph::has_edge(const BlockLabel& a, const BlockLabel& b) const {
    std::size_t i = index_of(a), j = index_of(b);
    if (i > j) std::swap(i, j);
    return edges.count({i, j}) > 0;
}

std::size_t LabelGraph::index_of(const BlockLabel& l) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == l) return i;
    throw PartitionError("label not a vertex: " + l.to_string());
}

LabelGraph principal_block_quiver(std::uint32_t p) {
    if (p < 3) throw PartitionError("quiver needs p >= 3");
    int ip = static_cast<int>(p);
    LabelGraph g;
    for (int v = ip; v >= 1; --v) g.vertices.push_back(BlockLabel::single(v));
    for (int u = ip; u >= 2; --u)
        for (int v = u - 1; v >= 1; --v)
            if (!(u == 2 && v == 1)) g.vertices.push_back(BlockLabel::pair(u, v));

    auto add = [&g](const BlockLabel& a, const BlockLabel& b) {
        std::size_t i = g.index_of(a), j = g.index_of(b);
        if (i > j) std::swap(i, j);
        g.edges.insert({i, j});
    };
    auto regular_pair = [ip](int u, int v) {
        return u <= ip && v >= 1 && u > v && !(u == 2 && v == 1);
    };

    // Six edge families read off the drawn weight-2 quiver.
    for (int u = 2; u <= ip; ++u)  // <u> -- <u-1>
        add(BlockLabel::single(u), BlockLabel::single(u - 1));
    for (int u = 3; u <= ip; ++u)  // <u,v> -- <u,v-1>
        for (int v = 2; v < u; ++v)
            if (regular_pair(u, v) && regular_pair(u, v - 1))
                add(BlockLabel::pair(u, v), BlockLabel::pair(u, v - 1));
    for (int u = 3; u <= ip; ++u)  // <u,v> -- <u-1,v> when u-1 > v
        for (int v = 1; v < u - 1; ++v)
            if (regular_pair(u, v) && regular_pair(u - 1, v))
                add(BlockLabel::pair(u, v), BlockLabel::pair(u - 1, v));
    for (int u = 1; u < ip; ++u)  // <u> -- <p,u>
        if (regular_pair(ip, u)) add(BlockLabel::single(u), BlockLabel::pair(ip, u));
    if (ip >= 3)                  // <p> -- <p,p-2>
        add(BlockLabel::single(ip), BlockLabel::pair(ip, ip - 2));
    for (int u = 4; u <= ip; ++u)  // <u,u-1> -- <u-1,u-3>
        if (regular_pair(u, u - 1) && regular_pair(u - 1, u - 3))
            add(BlockLabel::pair(u, u - 1), BlockLabel::pair(u - 1, u - 3));
    return g;
}

unsigned long long std_tableaux_count(const Partition& lam) {
    int d = lam.size();
    if (d == 0) return 1;
    Partition conj = lam.conjugate();
    __int128 num = 1;
    for (int k = 2; k <= d; ++k) num *= k;
    __int128 den = 1;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts()[i]; ++j) {
            int hook = (lam.parts()[i] - j - 1) + (conj.parts()[j] - i - 1) + 1;
            den *= hook;
        }
    __int128 q = num / den;
    if (q * den != num) throw PartitionError("hook length formula did not divide");
    if (q > static_cast<__int128>(~0ULL)) throw PartitionError("tableaux count overflow");
    return static_cast<unsigned long long>(q);
}

unsigned long long young_perm_dim(const Partition& lam) {
    int d = lam.size();
    __int128 num = 1;
    for (int k = 2; k <= d; ++k) num *= k;
    for (int part : lam.parts())
        for (int k = 2; k <= part; ++k) num /= k;
    if (num > static_cast<__int128>(~0ULL)) throw PartitionError("permutation dim overflow");
    return static_cast<unsigned long long>(num);
}

namespace {
void enumerate(int remaining, int max_part, int slots, std::vector<int>& acc,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if (slots == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        enumerate(remaining - part, part, slots - 1, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_in(int n, int d) {
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate(d, d, n, acc, out);
    return out;  // descending lex by construction
}

std::vector<Partition> all_partitions(int d) { return partitions_in(d, d); }

}  // namespace modrep::part
