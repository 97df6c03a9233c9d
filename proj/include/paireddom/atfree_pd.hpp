#pragma once

#include "paireddom/graph.hpp"
#include "paireddom/pd_core.hpp"
#include "paireddom/recognition.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace paireddom {

// ---- 2-approximation ----------------------------------------------------

struct ApproxPd
{
    PDCertificate certificate;
    DominatingPair pair;
    Path path;                  // shortest path between the dominating pair
    std::size_t lower_bound;    // 2 * ceil(t / 4) with t = path.order()
};

/// PD-set of size at most 2 * gamma_pr for a connected AT-free graph, built
/// from a shortest path between a dominating pair. Throws NotAtFreeError when
/// no dominating pair exists.
ApproxPd approx_pd(const Graph& g);

// 2 * ceil(t / 4).
constexpr std::size_t path_lower_bound(std::size_t t) noexcept { return 2 * ((t + 3) / 4); }

// ---- exact level-sweep dynamic program ----------------------------------

inline constexpr std::size_t window_pick_limit = 6;

/// Queue entry: `frontier` is the part of `solution` in the last two
/// explored levels, `size` the solution's cardinality.
struct LevelTuple
{
    VertexSet frontier;
    VertexSet solution;
    std::size_t size = 0;
};

/// Queue key. `exposable` is only used in strict mode: bit k is set when the
/// solution minus the k-th subset of its last-level picks is perfectly
/// matchable. In the default mode it stays 0 and entries are keyed by the
/// frontier alone.
struct LevelKey
{
    VertexSet frontier;
    std::uint64_t exposable = 0;

    auto operator<=>(const LevelKey&) const = default;
    bool operator==(const LevelKey&) const = default;
};

/// Q_i: one entry per key, holding the smallest solution seen for it.
struct LevelQueue
{
    std::size_t level = 0;
    std::map<LevelKey, LevelTuple> entries;

    // Inserts, or replaces an existing entry whose size is strictly larger.
    void offer(LevelKey key, LevelTuple tuple);
};

struct ExactOptions
{
    bool strict = false;
};

struct ExactDiagnostics
{
    DominatingPair pair;
    std::size_t depth = 0;                 // index of the last BFS level
    std::vector<std::size_t> queue_sizes;  // |Q_1| .. |Q_l|
    std::size_t transitions = 0;           // accepted (entry, U) transitions
    std::size_t matching_calls = 0;
    bool strict = false;
};

struct ExactPd
{
    PDCertificate certificate;
    ExactDiagnostics diagnostics;
};

/// Minimum PD-set of a connected AT-free graph by sweeping the BFS levels of
/// a dominating-pair endpoint, keeping at most six picks in any three
/// consecutive levels. Throws AlgorithmFailure (with diagnostics in the
/// message) if the final queue has no qualifying entry.
ExactPd exact_pd(const Graph& g, const ExactOptions& options = {});

/// True iff |d ∩ (L_i ∪ ... ∪ L_{i+j})| <= j + 4 for every window of BFS
/// levels rooted at x.
bool check_level_bound(const Graph& g, Vertex x, const VertexSet& d);

} // namespace paireddom
