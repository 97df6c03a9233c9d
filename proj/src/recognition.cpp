#include "paireddom/recognition.hpp"

#include "paireddom/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace paireddom {

namespace {

    // Shortest path in g - removed, smallest-id tie-breaking.
    Path path_avoiding(const Graph& g, Vertex from, Vertex to, const VertexSet& removed)
    {
        constexpr Vertex none = ~Vertex{0};
        std::vector<Vertex> parent(g.order(), none);
        std::vector<char> seen(g.order(), 0);
        std::deque<Vertex> queue{from};
        seen[from] = 1;
        while (!queue.empty() && !seen[to]) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u))
                if (!seen[w] && !removed.contains(w)) {
                    seen[w] = 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
        }
        if (!seen[to])
            throw StructureError("witness path vanished between " + std::to_string(from) + " and " + std::to_string(to));
        Path p;
        for (Vertex v = to; v != from; v = parent[v])
            p.vertices.push_back(v);
        p.vertices.push_back(from);
        std::reverse(p.vertices.begin(), p.vertices.end());
        return p;
    }

} // namespace

AtFreeResult is_at_free(const Graph& g)
{
    if (!is_connected(g))
        throw DisconnectedError("asteroidal-triple test requires a connected graph");
    const std::size_t n = g.order();

    // without[r][v]: component of v in g - N[r] (-1 when v is in N[r]).
    std::vector<std::vector<int>> without(n);
    for (Vertex r = 0; r < n; ++r)
        without[r] = component_labels(g, g.closed_neighborhood(r));

    auto joined = [&](Vertex a, Vertex b, Vertex avoid) {
        const int ca = without[avoid][a];
        return ca >= 0 && ca == without[avoid][b];
    };

    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b))
                continue;
            for (Vertex c = b + 1; c < n; ++c) {
                if (g.adjacent(a, c) || g.adjacent(b, c))
                    continue;
                if (joined(a, b, c) && joined(b, c, a) && joined(a, c, b)) {
                    AsteroidalWitness w;
                    w.triple = {a, b, c};
                    w.paths[0] = path_avoiding(g, a, b, g.closed_neighborhood(c));
                    w.paths[1] = path_avoiding(g, b, c, g.closed_neighborhood(a));
                    w.paths[2] = path_avoiding(g, a, c, g.closed_neighborhood(b));
                    return {false, std::move(w)};
                }
            }
        }
    return {true, std::nullopt};
}

bool verify_dominating_pair(const Graph& g, Vertex x, Vertex y)
{
    require_vertex(g, x);
    require_vertex(g, y);
    if (!is_connected(g))
        throw DisconnectedError("dominating-pair verification requires a connected graph");
    // An x-y path misses N[w] exactly when x and y stay connected in g - N[w].
    for (Vertex w = 0; w < g.order(); ++w) {
        const VertexSet closed = g.closed_neighborhood(w);
        if (closed.contains(x) || closed.contains(y))
            continue;
        const auto labels = component_labels(g, closed);
        if (labels[x] == labels[y])
            return false;
    }
    return true;
}

std::vector<Vertex> lex_bfs(const Graph& g, Vertex start)
{
    require_vertex(g, start);
    const std::size_t n = g.order();
    std::vector<std::vector<int>> label(n);
    std::vector<char> visited(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);

    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = start;
        if (step > 0 || visited[start]) {
            bool found = false;
            for (Vertex v = 0; v < n; ++v) {
                if (visited[v])
                    continue;
                if (!found || label[v] > label[pick]) {
                    pick = v;
                    found = true;
                }
            }
        }
        visited[pick] = 1;
        order.push_back(pick);
        const int stamp = static_cast<int>(n - step);
        for (Vertex w : g.neighbors(pick))
            if (!visited[w])
                label[w].push_back(stamp);
    }
    return order;
}

DominatingPair find_dominating_pair(const Graph& g)
{
    if (g.order() == 0)
        throw DomainError("empty graph has no dominating pair");
    if (!is_connected(g))
        throw DisconnectedError("dominating pair requires a connected graph");
    if (g.order() == 1)
        return {0, 0, false};

    const Vertex first_end = lex_bfs(g, 0).back();
    const Vertex second_end = lex_bfs(g, first_end).back();
    if (first_end != second_end && verify_dominating_pair(g, first_end, second_end))
        return {first_end, second_end, false};

    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = x + 1; y < g.order(); ++y)
            if (verify_dominating_pair(g, x, y))
                return {x, y, true};
    throw NotAtFreeError("no dominating pair exists; the graph is not AT-free");
}

Path backbone_path(const Graph& g, Vertex x, Vertex y, const LevelStructure& levels)
{
    require_vertex(g, x);
    require_vertex(g, y);
    if (levels.root != x || levels.level_of.size() != g.order())
        throw DomainError("level structure is not rooted at x");
    const int d = levels.level_of[y];
    if (d < 0)
        throw NoPathError("y is not reachable from x");
    const std::size_t depth = levels.depth();
    if (depth > static_cast<std::size_t>(d) + 1)
        throw StructureError("levels beyond L_" + std::to_string(d + 1) + " cannot be dominated by an x-y path");

    constexpr Vertex none = ~Vertex{0};
    std::vector<Vertex> parent(g.order(), none);
    std::vector<char> reachable(g.order(), 0);
    reachable[x] = 1;
    for (std::size_t i = 1; i <= static_cast<std::size_t>(d); ++i) {
        const VertexSet& level = levels.level(i);
        const auto previous = levels.level(i - 1).members();
        level.for_each([&](Vertex v) {
            for (Vertex u : previous) {
                if (!reachable[u] || !g.adjacent(u, v))
                    continue;
                VertexSet pair{u, v};
                if (level.is_subset_of(g.closed_neighborhood(pair))) {
                    reachable[v] = 1;
                    parent[v] = u;
                    break;
                }
            }
        });
    }
    if (!reachable[y])
        throw StructureError("no backbone path from " + std::to_string(x) + " to " + std::to_string(y));
    if (depth == static_cast<std::size_t>(d) + 1 && !levels.level(depth).is_subset_of(g.neighbor_set(y)))
        throw StructureError("last level is not dominated by y");

    Path p;
    for (Vertex v = y; v != x; v = parent[v])
        p.vertices.push_back(v);
    p.vertices.push_back(x);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

bool is_backbone_path(const Graph& g, const Path& p, const LevelStructure& levels)
{
    if (p.vertices.empty() || p.vertices.front() != levels.root)
        return false;
    const std::size_t d = p.length();
    for (std::size_t i = 0; i <= d; ++i) {
        const Vertex v = p.vertices[i];
        if (v >= g.order() || levels.level_of[v] != static_cast<int>(i))
            return false;
        if (i > 0 && !g.adjacent(p.vertices[i - 1], v))
            return false;
    }
    for (std::size_t i = 1; i <= levels.depth(); ++i) {
        VertexSet picks;
        picks.insert(p.vertices[std::min(i - 1, d)]);
        if (i <= d)
            picks.insert(p.vertices[i]);
        if (!levels.level(i).is_subset_of(g.closed_neighborhood(picks)))
            return false;
    }
    return true;
}

} // namespace paireddom
