#pragma once

#include <cstdint>
#include <vector>

#include "burn/errors.hpp"

namespace burn {

// Undirected simple graph on vertex ids 0..n-1. Adjacency lists are kept
// sorted and deduplicated so every traversal order is reproducible.
class ExplicitGraph {
public:
    ExplicitGraph() = default;
    explicit ExplicitGraph(int vertex_count);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;

    // Rejects self-loops and out-of-range ids; duplicate edges are ignored.
    void add_edge(int u, int v);

    bool operator==(const ExplicitGraph&) const = default;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::int64_t edge_count_ = 0;
};

ExplicitGraph path_graph(int n);
ExplicitGraph cycle_graph(int n);  // n >= 3
ExplicitGraph complete_graph(int n);

// Pairwise shortest-path lengths; kUnreachable marks disconnected pairs.
class DistanceMatrix {
public:
    static constexpr std::uint16_t kUnreachable = 0xFFFF;

    explicit DistanceMatrix(int vertex_count)
        : n_(vertex_count),
          d_(static_cast<std::size_t>(vertex_count) * vertex_count, kUnreachable) {}

    int vertex_count() const { return n_; }
    std::uint16_t at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    void set(int u, int v, std::uint16_t value) { d_[static_cast<std::size_t>(u) * n_ + v] = value; }

private:
    int n_ = 0;
    std::vector<std::uint16_t> d_;
};

// Ordered sources x_0..x_b; the source at position i burns with radius b-i.
// Repeating a source is legal (it just wastes the later, smaller radius).
struct BurningSchedule {
    std::vector<int> sources;

    int length() const { return static_cast<int>(sources.size()); }
    int radius_at(int position) const { return length() - 1 - position; }

    bool operator==(const BurningSchedule&) const = default;
};

struct CoverageCheck {
    bool covered = false;
    std::vector<int> uncovered;  // ascending
};

DistanceMatrix all_pairs_distances(const ExplicitGraph& g);

// Vertices within distance k of x, ascending. k may exceed the diameter.
std::vector<int> ball(const ExplicitGraph& g, int x, int k);

// Does the union of the schedule's balls cover every vertex?
CoverageCheck verify_schedule(const ExplicitGraph& g, const BurningSchedule& s);

// Fixed-length schedule built source by source, each step taking the vertex
// that covers the most new ground at its radius. Ties go to the smallest id,
// and a vertex is never chosen twice: a repeat burns with a smaller radius
// than before, so it can only cover a subset of what it already covered.
// The result need not cover the whole graph.
BurningSchedule greedy_schedule(const ExplicitGraph& g, int length);
BurningSchedule greedy_schedule(const DistanceMatrix& dist, int length);

bool is_connected(const ExplicitGraph& g);

}  // namespace burn
