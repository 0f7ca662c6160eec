#include "advlin/graph.hpp"

#include <algorithm>
#include <numeric>

#include "advlin/det.hpp"

namespace advlin::graphs {

BigInt loop_count(const Graph& g, int base, int k) {
    if (base < 0 || base >= g.n()) throw DomainError("base vertex out of range");
    if (k < 0) throw DomainError("loop length must be nonnegative");
    ZMat p = matpow(g.adjacency(), static_cast<unsigned long>(k));
    return p(base, base);
}

spectra::AtomicLaw loop_measure(const Graph& g, int base, double merge_tol) {
    if (base < 0 || base >= g.n()) throw DomainError("base vertex out of range");
    auto [vals, vecs] = spectra::hermitian_eigen(to_cmat(g.adjacency()));
    spectra::AtomicLaw law;
    std::vector<bool> used(vals.size(), false);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (used[i]) continue;
        double loc = vals[i], w = 0.0;
        double acc = 0.0;
        int cnt = 0;
        for (std::size_t j = i; j < vals.size(); ++j) {
            if (used[j] || std::abs(vals[j] - loc) > merge_tol) continue;
            used[j] = true;
            acc += vals[j];
            ++cnt;
            w += std::norm(vecs(base, j));
        }
        law.atoms.emplace_back(Scalar(acc / cnt, 0.0), w);
    }
    std::sort(law.atoms.begin(), law.atoms.end(),
              [](const auto& a, const auto& b) { return a.first.real() < b.first.real(); });
    return law;
}

ZMat laplacian(const Graph& g) {
    const int n = g.n();
    ZMat l(n, n);
    for (auto [i, j] : g.edges()) {
        l(i, j) -= 1;
        l(j, i) -= 1;
        l(i, i) += 1;
        l(j, j) += 1;
    }
    return l;
}

ZMat incidence_matrix(const Graph& g) {
    ZMat e(g.n(), g.edges().size());
    std::size_t c = 0;
    for (auto [i, j] : g.edges()) {
        e(i, c) = 1;
        e(j, c) = -1;
        ++c;
    }
    return e;
}

BigInt spanning_tree_count(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    if (n == 1) return 1;
    ZMat l = laplacian(g);
    return det(l.minor_matrix(0, 0));
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

BigInt spanning_tree_bruteforce(const Graph& g, std::size_t edge_budget) {
    const int n = g.n();
    std::vector<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
    if (edges.size() > edge_budget) throw BudgetError("brute-force spanning tree budget exceeded");
    if (n == 0) return 0;
    if (n == 1) return 1;
    const int need = n - 1;
    if (static_cast<int>(edges.size()) < need) return 0;
    BigInt count = 0;
    std::vector<int> pick(need);
    std::iota(pick.begin(), pick.end(), 0);
    const int m = static_cast<int>(edges.size());
    while (true) {
        UnionFind uf(n);
        bool acyclic = true;
        for (int idx : pick)
            if (!uf.unite(edges[idx].first, edges[idx].second)) {
                acyclic = false;
                break;
            }
        if (acyclic) ++count;  // n-1 acyclic edges on n vertices span
        int i = need - 1;
        while (i >= 0 && pick[i] == m - need + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }
    return count;
}

int component_count(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    int by_rank = n - static_cast<int>(rank_exact(to_qmat(laplacian(g))));
    UnionFind uf(n);
    int by_traversal = n;
    for (auto [i, j] : g.edges())
        if (uf.unite(i, j)) --by_traversal;
    if (by_rank != by_traversal)
        throw DomainError("kernel dimension disagrees with traversal component count");
    return by_rank;
}

}  // namespace advlin::graphs
