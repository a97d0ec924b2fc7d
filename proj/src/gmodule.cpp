#include "modrep/gmodule.hpp"

#include <algorithm>
#include <numeric>

namespace modrep::grp {

using fp::FpMatrix;

Perm perm_identity(int d) {
    Perm p(d);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<int>(x);
    return r;
}

Perm adjacent_transposition(int d, int i) {
    Perm p = perm_identity(d);
    std::swap(p[i - 1], p[i]);
    return p;
}

int perm_sign(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    int sign = 1;
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (std::size_t y = x; !seen[y]; y = a[y]) {
            seen[y] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::vector<int> cycle_type(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    std::vector<int> type;
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (std::size_t y = x; !seen[y]; y = a[y]) {
            seen[y] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::vector<int> adjacent_word(const Perm& g) {
    // Bubble sort records g ∘ s_{j1} ∘ ... ∘ s_{jm} = id, so
    // g = s_{jm} ∘ ... ∘ s_{j1}; act() and act_vec() consume this order.
    Perm w = g;
    std::vector<int> word;
    int d = static_cast<int>(w.size());
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 1; i < d; ++i) {
            if (w[i - 1] > w[i]) {
                std::swap(w[i - 1], w[i]);
                word.push_back(i);
                moved = true;
            }
        }
    }
    return word;
}

GroupTree build_group_tree(int d) {
    GroupTree t;
    t.degree = d;
    std::map<Perm, int> seen;
    t.elems.push_back(perm_identity(d));
    t.parent.push_back(-1);
    t.gen.push_back(0);
    seen[t.elems[0]] = 0;
    for (std::size_t head = 0; head < t.elems.size(); ++head) {
        for (int i = 1; i < d; ++i) {
            Perm next = perm_compose(adjacent_transposition(d, i), t.elems[head]);
            if (seen.count(next)) continue;
            seen[next] = static_cast<int>(t.elems.size());
            t.elems.push_back(next);
            t.parent.push_back(static_cast<int>(head));
            t.gen.push_back(i);
        }
    }
    return t;
}

FpMatrix GModule::act(const Perm& g) const {
    FpMatrix r = FpMatrix::identity(prime, dim);
    for (int i : adjacent_word(g)) r = gens[i - 1] * r;
    return r;
}

std::vector<std::uint8_t> GModule::act_vec(const Perm& g, const std::vector<std::uint8_t>& v) const {
    std::vector<int> word = adjacent_word(g);
    std::vector<std::uint8_t> cur = v;
    for (auto it = word.begin(); it != word.end(); ++it) {
        const FpMatrix& m = gens[*it - 1];
        std::vector<std::uint8_t> next(dim, 0);
        for (std::size_t i = 0; i < dim; ++i) {
            std::uint64_t acc = 0;
            const std::uint8_t* row = m.row_ptr(i);
            for (std::size_t j = 0; j < dim; ++j) acc += static_cast<std::uint64_t>(row[j]) * cur[j];
            next[i] = static_cast<std::uint8_t>(acc % prime);
        }
        cur = std::move(next);
    }
    return cur;
}

bool verify_symmetric_relations(const GModule& m) {
    const auto id = FpMatrix::identity(m.prime, m.dim);
    for (std::size_t i = 0; i < m.gens.size(); ++i) {
        if (m.gens[i] * m.gens[i] != id) return false;
        if (i + 1 < m.gens.size()) {
            FpMatrix ab = m.gens[i] * m.gens[i + 1];
            if (ab * ab * ab != id) return false;
        }
        for (std::size_t j = i + 2; j < m.gens.size(); ++j)
            if (m.gens[i] * m.gens[j] != m.gens[j] * m.gens[i]) return false;
    }
    return true;
}

std::size_t PermModuleData::index_of(const std::vector<std::uint8_t>& tab) const {
    auto it = std::lower_bound(tabloids.begin(), tabloids.end(), tab);
    if (it == tabloids.end() || *it != tab) throw part::PartitionError("tabloid not found");
    return static_cast<std::size_t>(it - tabloids.begin());
}

PermModuleData perm_module(const part::Partition& lam, std::uint32_t p) {
    int d = lam.size();
    unsigned long long dim = part::young_perm_dim(lam);
    if (dim > fp::dim_cap()) throw fp::CapExceeded("permutation module too large");
    PermModuleData out;
    out.lambda = lam;
    // canonical tabloid: elements in order, row r gets the next lam_r of them
    std::vector<std::uint8_t> canonical(d);
    {
        int e = 0;
        for (int r = 0; r < lam.length(); ++r)
            for (int k = 0; k < lam.parts()[r]; ++k) canonical[e++] = static_cast<std::uint8_t>(r);
    }
    std::vector<std::uint8_t> tab = canonical;
    std::sort(tab.begin(), tab.end());
    do {
        out.tabloids.push_back(tab);
    } while (std::next_permutation(tab.begin(), tab.end()));
    if (out.tabloids.size() != dim) throw part::PartitionError("tabloid count mismatch");

    for (const auto& t : out.tabloids) {
        // permutation taking the canonical tabloid to t, rowwise in order
        Perm g(d);
        std::vector<std::vector<int>> rows_canonical(lam.length()), rows_t(lam.length());
        for (int e = 0; e < d; ++e) rows_canonical[canonical[e]].push_back(e);
        for (int e = 0; e < d; ++e) rows_t[t[e]].push_back(e);
        for (int r = 0; r < lam.length(); ++r)
            for (std::size_t k = 0; k < rows_canonical[r].size(); ++k)
                g[rows_canonical[r][k]] = rows_t[r][k];
        out.reach.push_back(g);
    }

    GModule m;
    m.prime = p;
    m.dim = static_cast<std::size_t>(dim);
    m.origin = "M^(" + lam.to_string() + ")";
    for (int i = 1; i < d; ++i) {
        FpMatrix g(p, m.dim, m.dim);
        for (std::size_t c = 0; c < out.tabloids.size(); ++c) {
            std::vector<std::uint8_t> t = out.tabloids[c];
            std::swap(t[i - 1], t[i]);
            g.set(out.index_of(t), c, 1);
        }
        m.gens.push_back(std::move(g));
    }
    out.mod = std::move(m);
    return out;
}

namespace {

void standard_tableaux_rec(const part::Partition& lam, std::vector<std::vector<int>>& t,
                           std::vector<int>& fill, int next,
                           std::vector<std::vector<std::vector<int>>>& out) {
    int d = lam.size();
    if (next == d) {
        out.push_back(t);
        return;
    }
    for (int r = 0; r < lam.length(); ++r) {
        int c = fill[r];
        if (c >= lam.parts()[r]) continue;
        if (r > 0 && fill[r - 1] <= c) continue;  // column must already be longer above
        t[r].push_back(next);
        ++fill[r];
        standard_tableaux_rec(lam, t, fill, next + 1, out);
        --fill[r];
        t[r].pop_back();
    }
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const part::Partition& lam) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> t(lam.length());
    std::vector<int> fill(lam.length(), 0);
    standard_tableaux_rec(lam, t, fill, 0, out);
    return out;
}

// Iterate the column stabilizer of t, calling f(sign, row_of_element).
template <typename F>
void for_column_group(const part::Partition& lam, const std::vector<std::vector<int>>& t, F&& f) {
    part::Partition conj = lam.conjugate();
    int ncols = lam.part(0);
    // columns[c] = entries down column c
    std::vector<std::vector<int>> columns(ncols);
    for (int r = 0; r < lam.length(); ++r)
        for (int c = 0; c < lam.parts()[r]; ++c) columns[c].push_back(t[r][c]);

    unsigned long long total = 1;
    for (int c = 0; c < ncols; ++c) {
        unsigned long long fact = 1;
        for (int k = 2; k <= conj.parts()[c]; ++k) fact *= k;
        total *= fact;
        if (total > 2'000'000ULL) throw fp::CapExceeded("column stabilizer too large");
    }

    int d = lam.size();
    std::vector<std::uint8_t> row_of(d);
    for (int r = 0; r < lam.length(); ++r)
        for (int c = 0; c < lam.parts()[r]; ++c) row_of[t[r][c]] = static_cast<std::uint8_t>(r);

    // odometer over per-column permutations
    std::vector<std::vector<int>> perms(ncols);
    std::vector<std::vector<std::vector<int>>> all_perms(ncols);
    for (int c = 0; c < ncols; ++c) {
        std::vector<int> base(columns[c].size());
        std::iota(base.begin(), base.end(), 0);
        std::sort(base.begin(), base.end());
        do {
            all_perms[c].push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));
    }
    std::vector<std::size_t> idx(ncols, 0);
    for (;;) {
        int sign = 1;
        std::vector<std::uint8_t> rows = row_of;
        for (int c = 0; c < ncols; ++c) {
            const std::vector<int>& pi = all_perms[c][idx[c]];
            Perm as_perm(pi.begin(), pi.end());
            sign *= perm_sign(as_perm);
            for (std::size_t k = 0; k < pi.size(); ++k)
                rows[columns[c][pi[k]]] = static_cast<std::uint8_t>(k);
        }
        f(sign, rows);
        int c = 0;
        while (c < ncols) {
            if (++idx[c] < all_perms[c].size()) break;
            idx[c] = 0;
            ++c;
        }
        if (c == ncols) break;
    }
}

}  // namespace

SpechtModuleData specht_module(const part::Partition& lam, std::uint32_t p) {
    PermModuleData m = perm_module(lam, p);
    auto tableaux = standard_tableaux(lam);
    unsigned long long syt = part::std_tableaux_count(lam);
    if (tableaux.size() != syt) throw part::PartitionError("standard tableau count mismatch");

    FpMatrix emb(p, m.mod.dim, tableaux.size());
    for (std::size_t col = 0; col < tableaux.size(); ++col) {
        for_column_group(lam, tableaux[col], [&](int sign, const std::vector<std::uint8_t>& rows) {
            emb.add_at(m.index_of(rows), col, sign);
        });
    }
    if (fp::rank(emb) != tableaux.size()) throw part::PartitionError("polytabloids not independent");

    SpechtModuleData out;
    out.embedding = emb;
    GModule s;
    s.prime = p;
    s.dim = tableaux.size();
    s.origin = "S^(" + lam.to_string() + ")";
    for (const auto& g : m.mod.gens) {
        auto x = fp::solve(emb, g * emb);
        if (!x) throw part::PartitionError("specht span not generator stable");
        s.gens.push_back(std::move(*x));
    }
    out.mod = std::move(s);
    return out;
}

GModule tensor_space(int n, int d, std::uint32_t p) {
    unsigned long long dim = 1;
    for (int i = 0; i < d; ++i) {
        dim *= static_cast<unsigned long long>(n);
        if (dim > fp::dim_cap()) throw fp::CapExceeded("tensor space too large");
    }
    GModule m;
    m.prime = p;
    m.dim = static_cast<std::size_t>(dim);
    m.origin = "V(" + std::to_string(n) + ")^x" + std::to_string(d);
    std::vector<unsigned long long> stride(d, 1);
    for (int i = 1; i < d; ++i) stride[i] = stride[i - 1] * n;
    for (int i = 1; i < d; ++i) {
        FpMatrix g(p, m.dim, m.dim);
        for (std::size_t w = 0; w < m.dim; ++w) {
            unsigned long long a = (w / stride[i - 1]) % n;
            unsigned long long b = (w / stride[i]) % n;
            unsigned long long w2 = w - a * stride[i - 1] - b * stride[i] + b * stride[i - 1] + a * stride[i];
            g.set(w2, w, 1);
        }
        m.gens.push_back(std::move(g));
    }
    return m;
}

std::vector<std::size_t> tensor_weight_space(int n, int d, const std::vector<int>& content) {
    std::vector<std::size_t> out;
    unsigned long long dim = 1;
    for (int i = 0; i < d; ++i) dim *= n;
    for (unsigned long long w = 0; w < dim; ++w) {
        std::vector<int> cnt(n, 0);
        unsigned long long x = w;
        for (int i = 0; i < d; ++i) {
            ++cnt[x % n];
            x /= n;
        }
        bool match = true;
        for (int v = 0; v < n; ++v)
            if (cnt[v] != (v < static_cast<int>(content.size()) ? content[v] : 0)) match = false;
        if (match) out.push_back(static_cast<std::size_t>(w));
    }
    return out;
}

GModule dual_natural(const GModule& m) {
    GModule r;
    r.prime = m.prime;
    r.dim = m.dim;
    r.origin = "dual(" + m.origin + ")";
    for (const auto& g : m.gens) r.gens.push_back(g.transpose());
    return r;
}

GModule induce(const GModule& m) {
    int d = m.degree() + 1;
    GModule r;
    r.prime = m.prime;
    r.dim = m.dim * d;
    r.origin = "ind(" + m.origin + ")";
    // coset reps r_j = cycle (j, j+1, ..., d-1): r_j sends d-1 to j
    std::vector<Perm> reps;
    for (int j = 0; j < d; ++j) {
        Perm g = perm_identity(d);
        for (int x = j; x < d - 1; ++x) g[x] = x + 1;
        g[d - 1] = j;
        reps.push_back(g);
    }
    for (int i = 1; i < d; ++i) {
        Perm s = adjacent_transposition(d, i);
        FpMatrix gmat(m.prime, r.dim, r.dim);
        for (int j = 0; j < d; ++j) {
            Perm q = perm_compose(s, reps[j]);
            int k = q[d - 1];
            Perm h = perm_compose(perm_inverse(reps[k]), q);
            if (h[d - 1] != d - 1) throw part::PartitionError("coset decomposition failed");
            h.pop_back();
            FpMatrix hm = m.act(h);
            for (std::size_t a = 0; a < m.dim; ++a)
                for (std::size_t b = 0; b < m.dim; ++b) {
                    auto v = hm.at(a, b);
                    if (v) gmat.set(static_cast<std::size_t>(k) * m.dim + a,
                                    static_cast<std::size_t>(j) * m.dim + b, v);
                }
        }
        r.gens.push_back(std::move(gmat));
    }
    return r;
}

GModule restrict_down(const GModule& m) {
    if (m.gens.empty()) throw part::PartitionError("cannot restrict below S_1");
    GModule r = m;
    r.gens.pop_back();
    r.origin = "res(" + m.origin + ")";
    return r;
}

std::vector<fp::FpMatrix> hom_space(const GModule& m, const GModule& n) {
    if (m.prime != n.prime || m.gens.size() != n.gens.size())
        throw fp::DimensionMismatch("hom_space: incompatible modules");
    const std::uint32_t p = m.prime;
    const std::size_t nm = m.dim * n.dim;
    // current solution space as explicit matrices
    std::vector<FpMatrix> basis;
    bool first = true;
    for (std::size_t g = 0; g < m.gens.size(); ++g) {
        const FpMatrix& A = m.gens[g];
        const FpMatrix& B = n.gens[g];
        if (first) {
            first = false;
            FpMatrix cond(p, nm, nm);
            // X A - B X = 0; unknown X_{ik}, row index (i,j)
            for (std::size_t i = 0; i < n.dim; ++i)
                for (std::size_t j = 0; j < m.dim; ++j) {
                    std::size_t row = i * m.dim + j;
                    for (std::size_t k = 0; k < m.dim; ++k) {
                        auto v = A.at(k, j);
                        if (v) cond.add_at(row, i * m.dim + k, v);
                    }
                    for (std::size_t k = 0; k < n.dim; ++k) {
                        auto v = B.at(i, k);
                        if (v) cond.add_at(row, k * m.dim + j, -static_cast<std::int64_t>(v));
                    }
                }
            FpMatrix ker = fp::nullspace(cond);
            for (std::size_t c = 0; c < ker.cols(); ++c) {
                FpMatrix x(p, n.dim, m.dim);
                for (std::size_t e = 0; e < nm; ++e) x.data()[e] = ker.at(e, c);
                basis.push_back(std::move(x));
            }
            continue;
        }
        if (basis.empty()) break;
        // impose X A = B X on the current span
        FpMatrix cond(p, nm, basis.size());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            FpMatrix r = basis[b] * A - B * basis[b];
            for (std::size_t e = 0; e < nm; ++e) cond.set(e, b, r.data()[e]);
        }
        FpMatrix ker = fp::nullspace(cond);
        std::vector<FpMatrix> next;
        for (std::size_t c = 0; c < ker.cols(); ++c) {
            FpMatrix x(p, n.dim, m.dim);
            for (std::size_t b = 0; b < basis.size(); ++b) {
                auto coef = ker.at(b, c);
                if (!coef) continue;
                for (std::size_t e = 0; e < nm; ++e)
                    x.data()[e] = static_cast<std::uint8_t>((x.data()[e] + coef * basis[b].data()[e]) % p);
            }
            next.push_back(std::move(x));
        }
        basis = std::move(next);
    }
    return basis;
}

std::vector<fp::FpMatrix> hom_from_perm(const PermModuleData& m, const GModule& n) {
    const std::uint32_t p = n.prime;
    // fixed points of the Young subgroup of lambda inside n
    int e = 0;
    FpMatrix stacked(p, 0, n.dim);
    bool any = false;
    for (int r = 0; r < m.lambda.length(); ++r) {
        for (int k = 1; k < m.lambda.parts()[r]; ++k) {
            int i = e + k;  // s_i swaps i-1, i inside row r
            FpMatrix c = n.gens[i - 1];
            for (std::size_t x = 0; x < n.dim; ++x) c.add_at(x, x, -1);
            stacked = any ? stacked.vstack(c) : c;
            any = true;
        }
        e += m.lambda.parts()[r];
    }
    FpMatrix fixed = any ? fp::nullspace(stacked) : FpMatrix::identity(p, n.dim);
    std::vector<FpMatrix> out;
    for (std::size_t c = 0; c < fixed.cols(); ++c) {
        std::vector<std::uint8_t> v(n.dim);
        for (std::size_t i = 0; i < n.dim; ++i) v[i] = fixed.at(i, c);
        FpMatrix x(p, n.dim, m.mod.dim);
        for (std::size_t t = 0; t < m.tabloids.size(); ++t) {
            std::vector<std::uint8_t> img = n.act_vec(m.reach[t], v);
            for (std::size_t i = 0; i < n.dim; ++i) x.set(i, t, img[i]);
        }
        out.push_back(std::move(x));
    }
    return out;
}

fp::FpMatrix class_sum_operator(const GModule& m, const std::vector<int>& type) {
    GroupTree tree = build_group_tree(m.degree());
    std::vector<FpMatrix> mats(tree.elems.size());
    mats[0] = FpMatrix::identity(m.prime, m.dim);
    FpMatrix acc(m.prime, m.dim, m.dim);
    for (std::size_t i = 0; i < tree.elems.size(); ++i) {
        if (i) mats[i] = m.gens[tree.gen[i] - 1] * mats[tree.parent[i]];
        if (cycle_type(tree.elems[i]) == type) acc = acc + mats[i];
    }
    return acc;
}

std::vector<std::vector<int>> conjugacy_classes(int d) {
    std::vector<std::vector<int>> out;
    for (const auto& lam : part::all_partitions(d)) out.push_back(lam.parts());
    return out;
}

GModule submodule(const GModule& m, const FpMatrix& basis_cols, const std::string& origin) {
    GModule r;
    r.prime = m.prime;
    r.dim = basis_cols.cols();
    r.origin = origin;
    for (const auto& g : m.gens) {
        auto x = fp::solve(basis_cols, g * basis_cols);
        if (!x) throw part::PartitionError("subspace not generator stable: " + origin);
        r.gens.push_back(std::move(*x));
    }
    return r;
}

GModule quotient_module(const GModule& m, const FpMatrix& sub_basis_cols, const std::string& origin) {
    const std::uint32_t p = m.prime;
    // complement coordinates: rows of a projection along the subspace
    fp::RrefResult rr = fp::rref(sub_basis_cols.transpose());
    std::vector<bool> is_pivot(m.dim, false);
    for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.dim; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    // basis of quotient: images of free coordinates; projection matrix Q with
    // Q v = coordinates of v mod subspace
    FpMatrix proj(p, free_cols.size(), m.dim);
    for (std::size_t k = 0; k < free_cols.size(); ++k) proj.set(k, free_cols[k], 1);
    // subtract pivot components: v mod span: for pivot row i with pivot col c:
    // e_c == -sum_{free j} R(i,j) e_j modulo the subspace
    for (std::size_t i = 0; i < rr.rank; ++i) {
        std::size_t c = rr.pivot_columns[i];
        for (std::size_t k = 0; k < free_cols.size(); ++k) {
            auto v = rr.reduced.at(i, free_cols[k]);
            if (v) proj.add_at(k, c, -static_cast<std::int64_t>(v));
        }
    }
    GModule r;
    r.prime = p;
    r.dim = free_cols.size();
    r.origin = origin;
    FpMatrix sect(p, m.dim, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) sect.set(free_cols[k], k, 1);
    for (const auto& g : m.gens) r.gens.push_back(proj * (g * sect));
    return r;
}

GModule direct_sum(const GModule& a, const GModule& b) {
    if (a.prime != b.prime || a.gens.size() != b.gens.size())
        throw fp::DimensionMismatch("direct_sum: incompatible modules");
    GModule r;
    r.prime = a.prime;
    r.dim = a.dim + b.dim;
    r.origin = a.origin + "+" + b.origin;
    for (std::size_t g = 0; g < a.gens.size(); ++g) {
        FpMatrix m(a.prime, r.dim, r.dim);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) m.set(i, j, a.gens[g].at(i, j));
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) m.set(a.dim + i, a.dim + j, b.gens[g].at(i, j));
        r.gens.push_back(std::move(m));
    }
    return r;
}

}  // namespace modrep::grp
