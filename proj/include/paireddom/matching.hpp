#pragma once

#include "paireddom/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace paireddom {

/// Set of vertex-disjoint edges, stored as sorted (u < v) pairs.
struct Matching
{
    std::vector<Edge> pairs;

    std::size_t size() const noexcept { return pairs.size(); }
    VertexSet matched_vertices() const;
    bool operator==(const Matching&) const = default;
};

// True if every pair is an edge of g and no vertex is used twice.
bool is_valid_matching(const Graph& g, const Matching& m);

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// algorithm, O(n^3)). Vertices are scanned in ascending id order so the
/// returned pairs are reproducible.
Matching maximum_matching(const Graph& g);

// Perfect matching of g[s] expressed in g's ids, or nullopt.
std::optional<Matching> perfect_matching(const Graph& g, const VertexSet& s);

bool has_perfect_matching(const Graph& g, const VertexSet& s);

inline constexpr std::size_t bitmask_matching_cap = 20;

// Subset dynamic program; independent of the blossom code. n <= 20.
std::size_t maximum_matching_size_bitmask(const Graph& g);

} // namespace paireddom
