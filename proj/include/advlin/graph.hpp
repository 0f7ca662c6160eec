#pragma once

#include <set>
#include <utility>
#include <vector>

#include "advlin/matrix.hpp"
#include "advlin/spectra.hpp"

namespace advlin::graphs {

// Simple undirected graph on vertices 0..n-1.
class Graph {
  public:
    explicit Graph(int n) : n_(n) {
        if (n < 0) throw DomainError("graph needs a nonnegative vertex count");
    }

    void add_edge(int i, int j) {
        if (i < 0 || j < 0 || i >= n_ || j >= n_) throw DomainError("edge endpoint out of range");
        if (i == j) throw DomainError("loops are not allowed");
        edges_.insert(i < j ? std::pair{i, j} : std::pair{j, i});
    }

    int n() const { return n_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

    ZMat adjacency() const {
        ZMat d(n_, n_);
        for (auto [i, j] : edges_) {
            d(i, j) = 1;
            d(j, i) = 1;
        }
        return d;
    }

    int degree(int v) const {
        int c = 0;
        for (auto [i, j] : edges_)
            if (i == v || j == v) ++c;
        return c;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }

    static Graph cycle(int n) {
        Graph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        return g;
    }

  private:
    int n_;
    std::set<std::pair<int, int>> edges_;
};

// Closed length-k walks based at the given vertex, exact.
BigInt loop_count(const Graph& g, int base, int k);

// Atoms at adjacency eigenvalues with weights U_{base,i}^2.
spectra::AtomicLaw loop_measure(const Graph& g, int base, double merge_tol = 1e-8);

// L = v - d.
ZMat laplacian(const Graph& g);

// Ordered incidence matrix, edges oriented low to high; L = E E^t.
ZMat incidence_matrix(const Graph& g);

// Any signed cofactor of the Laplacian, exact.
BigInt spanning_tree_count(const Graph& g);

// Enumeration over (n-1)-edge subsets, as the independent route.
BigInt spanning_tree_bruteforce(const Graph& g, std::size_t edge_budget = 24);

// dim ker L by exact rank, cross-checked against union-find traversal.
int component_count(const Graph& g);

}  // namespace advlin::graphs
