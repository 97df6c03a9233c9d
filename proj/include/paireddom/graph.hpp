#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace paireddom {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Set of vertex ids backed by a growable bitset.
///
/// Membership is O(1). Iteration and members() yield ids in ascending order.
/// Ordering (operator<=>) is lexicographic on the sorted member lists, which
/// is the canonical tie-break used throughout the library.
class VertexSet
{
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids);
    explicit VertexSet(std::span<const Vertex> ids);

    static VertexSet range(Vertex first, Vertex last); // [first, last)

    bool contains(Vertex v) const noexcept;
    void insert(Vertex v);
    void erase(Vertex v) noexcept;
    void clear() noexcept { words_.clear(); }

    std::size_t size() const noexcept;
    bool empty() const noexcept { return words_.empty(); }
    bool is_even() const noexcept { return size() % 2 == 0; }

    // Largest member + 1, or 0 when empty.
    Vertex bound() const noexcept;

    std::vector<Vertex> members() const;

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    bool is_subset_of(const VertexSet& other) const noexcept;
    bool intersects(const VertexSet& other) const noexcept;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& other) const noexcept { return words_ == other.words_; }
    std::strong_ordering operator<=>(const VertexSet& other) const;

    std::size_t hash() const noexcept;

    std::string to_string() const; // "{0,2,5}"

private:
    void trim() noexcept;

    std::vector<std::uint64_t> words_;
};

struct VertexSetHash
{
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

/// Ordered vertex sequence; consecutive vertices adjacent, no repeats.
struct Path
{
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
    std::size_t order() const noexcept { return vertices.size(); }
    VertexSet vertex_set() const { return VertexSet(std::span<const Vertex>(vertices)); }
};

/// Undirected simple graph on the dense id range 0..n-1. Immutable once built.
class Graph
{
public:
    Graph() = default;

    // Throws DomainError on self-loops or out-of-range endpoints; duplicates are merged.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    const VertexSet& neighbor_set(Vertex v) const { return neighbor_sets_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool adjacent(Vertex u, Vertex v) const { return neighbor_sets_.at(u).contains(v); }

    VertexSet closed_neighborhood(Vertex v) const;
    VertexSet closed_neighborhood(const VertexSet& s) const;
    VertexSet vertices() const { return VertexSet::range(0, static_cast<Vertex>(order())); }

    // Sorted (u < v) edge list.
    std::vector<Edge> edges() const;

    bool has_isolated_vertex() const;
    std::size_t max_degree() const;

    bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> neighbor_sets_;
    std::size_t edge_count_ = 0;
};

/// BFS levels from a root: levels[i] holds the vertices at distance i.
struct LevelStructure
{
    Vertex root = 0;
    std::vector<VertexSet> levels;
    std::vector<int> level_of;     // -1 for vertices not reachable from root
    VertexSet unreachable;

    std::size_t depth() const noexcept { return levels.empty() ? 0 : levels.size() - 1; }
    const VertexSet& level(std::size_t i) const { return levels.at(i); }
};

struct InducedSubgraph
{
    Graph graph;
    std::vector<Vertex> to_original;  // new id -> old id
    std::vector<int> to_induced;      // old id -> new id, -1 when dropped
};

// Throws DomainError if any member of s is >= g.order().
void require_within(const Graph& g, const VertexSet& s);
void require_vertex(const Graph& g, Vertex v);

Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
std::string serialize(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
LevelStructure bfs_levels(const Graph& g, Vertex root);
Path shortest_path(const Graph& g, Vertex x, Vertex y);
bool is_connected(const Graph& g);

// Connected-component label per vertex of g - removed; removed vertices get -1.
std::vector<int> component_labels(const Graph& g, const VertexSet& removed);

// Throws DomainError/DisconnectedError unless g is connected with n >= 2 (hence no isolated vertex).
void require_connected_no_isolated(const Graph& g);

} // namespace paireddom
