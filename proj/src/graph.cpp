#include "burn/graph.hpp"

#include <algorithm>
#include <string>

namespace burn {

ExplicitGraph::ExplicitGraph(int vertex_count) {
    if (vertex_count < 0) throw InputError("vertex count must be nonnegative");
    adj_.resize(vertex_count);
}

void ExplicitGraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                         std::to_string(vertex_count()) + ")");
}

const std::vector<int>& ExplicitGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool ExplicitGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void ExplicitGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loops are not allowed");
    auto insert_sorted = [](std::vector<int>& list, int x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it != list.end() && *it == x) return false;
        list.insert(it, x);
        return true;
    };
    if (insert_sorted(adj_[u], v)) {
        insert_sorted(adj_[v], u);
        ++edge_count_;
    }
}

ExplicitGraph path_graph(int n) {
    if (n < 1) throw InputError("path graph needs at least one vertex");
    ExplicitGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

ExplicitGraph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle graph needs at least three vertices");
    ExplicitGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

ExplicitGraph complete_graph(int n) {
    if (n < 1) throw InputError("complete graph needs at least one vertex");
    ExplicitGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

DistanceMatrix all_pairs_distances(const ExplicitGraph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dist(n);
    std::vector<int> frontier;
    std::vector<int> next;
    for (int s = 0; s < n; ++s) {
        dist.set(s, s, 0);
        frontier.assign(1, s);
        std::uint16_t depth = 0;
        while (!frontier.empty()) {
            ++depth;
            next.clear();
            for (int v : frontier)
                for (int w : g.neighbors(v))
                    if (dist.at(s, w) == DistanceMatrix::kUnreachable) {
                        dist.set(s, w, depth);
                        next.push_back(w);
                    }
            frontier.swap(next);
        }
    }
    return dist;
}

std::vector<int> ball(const ExplicitGraph& g, int x, int k) {
    const int n = g.vertex_count();
    if (x < 0 || x >= n) throw InputError("ball: center vertex out of range");
    if (k < 0) throw InputError("ball: radius must be nonnegative");
    std::vector<char> seen(n, 0);
    seen[x] = 1;
    std::vector<int> result{x};
    std::vector<int> frontier{x};
    std::vector<int> next;
    for (int depth = 1; depth <= k && !frontier.empty(); ++depth) {
        next.clear();
        for (int v : frontier)
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    result.push_back(w);
                    next.push_back(w);
                }
        frontier.swap(next);
    }
    std::sort(result.begin(), result.end());
    return result;
}

CoverageCheck verify_schedule(const ExplicitGraph& g, const BurningSchedule& s) {
    const int n = g.vertex_count();
    if (s.length() == 0) throw InputError("schedule must contain at least one source");
    for (int v : s.sources)
        if (v < 0 || v >= n) throw InputError("schedule source " + std::to_string(v) + " out of range");
    std::vector<char> covered(n, 0);
    for (int i = 0; i < s.length(); ++i)
        for (int v : ball(g, s.sources[i], s.radius_at(i))) covered[v] = 1;
    CoverageCheck out;
    for (int v = 0; v < n; ++v)
        if (!covered[v]) out.uncovered.push_back(v);
    out.covered = out.uncovered.empty();
    return out;
}

BurningSchedule greedy_schedule(const DistanceMatrix& dist, int length) {
    const int n = dist.vertex_count();
    if (length < 1) throw InputError("greedy schedule length must be positive");
    if (n == 0) throw InputError("greedy schedule needs a nonempty graph");
    std::vector<char> covered(n, 0);
    std::vector<char> used(n, 0);
    BurningSchedule out;
    for (int pos = 0; pos < length; ++pos) {
        const int radius = length - 1 - pos;
        int best = -1;
        int best_gain = -1;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            int gain = 0;
            for (int u = 0; u < n; ++u)
                gain += (!covered[u] && dist.at(v, u) <= radius);
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        if (best < 0) best = 0;  // length > n: every vertex used, any repeat is dominated
        used[best] = 1;
        for (int u = 0; u < n; ++u)
            if (dist.at(best, u) <= radius) covered[u] = 1;
        out.sources.push_back(best);
    }
    return out;
}

BurningSchedule greedy_schedule(const ExplicitGraph& g, int length) {
    if (g.vertex_count() == 0) throw InputError("greedy schedule needs a nonempty graph");
    return greedy_schedule(all_pairs_distances(g), length);
}

bool is_connected(const ExplicitGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::vector<int> stack{0};
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

}  // namespace burn
