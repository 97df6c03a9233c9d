#pragma once

#include "paireddom/graph.hpp"

#include <array>
#include <optional>

namespace paireddom {

/// Independent triple {a, b, c} plus, for each pair, a path between them
/// that avoids the closed neighbourhood of the third vertex.
/// paths[0] joins triple[0]-triple[1], paths[1] joins triple[1]-triple[2],
/// paths[2] joins triple[0]-triple[2].
struct AsteroidalWitness
{
    std::array<Vertex, 3> triple{};
    std::array<Path, 3> paths;
};

struct AtFreeResult
{
    bool at_free = true;
    std::optional<AsteroidalWitness> witness;

    explicit operator bool() const noexcept { return at_free; }
};

struct DominatingPair
{
    Vertex x = 0;
    Vertex y = 0;
    // Set when the LexBFS candidate failed verification and the exhaustive
    // pair search produced the answer.
    bool from_fallback = false;
};

// Requires a connected graph (DisconnectedError otherwise). The witness, if
// any, is the lexicographically first asteroidal triple.
AtFreeResult is_at_free(const Graph& g);

// True iff every x-y path dominates g.
bool verify_dominating_pair(const Graph& g, Vertex x, Vertex y);

// Lexicographic BFS order starting at `start`; ties go to the smallest id.
std::vector<Vertex> lex_bfs(const Graph& g, Vertex start);

// Throws NotAtFreeError when no dominating pair exists.
DominatingPair find_dominating_pair(const Graph& g);

/// Shortest x-y path (x_0 = x, ..., x_d = y) with x_i in L_i such that every
/// vertex of L_i is adjacent to x_{i-1} or x_i. `levels` must be
/// bfs_levels(g, x). Throws StructureError when no such path exists.
Path backbone_path(const Graph& g, Vertex x, Vertex y, const LevelStructure& levels);

// True iff p satisfies the backbone property against `levels`.
bool is_backbone_path(const Graph& g, const Path& p, const LevelStructure& levels);

} // namespace paireddom
