#pragma once

#include "paireddom/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace paireddom {

Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);
// n vertices in total; vertex 0 is the centre.
Graph gen_star(std::size_t n);

inline constexpr std::size_t connect_retry_limit = 10000;

/// Intersection graph of n random intervals whose 2n endpoints are a seeded
/// shuffle of 0..2n-1. Resamples until connected.
Graph gen_interval_graph(std::size_t n, std::uint64_t seed);

/// Permutation graph of a seeded random permutation (edge iff the pair is
/// inverted). Resamples until connected.
Graph gen_permutation_graph(std::size_t n, std::uint64_t seed);

// Permutation graph of an explicit permutation (no connectivity requirement).
Graph permutation_graph(const std::vector<std::size_t>& perm);

struct NamedGraph
{
    std::string name;
    Graph graph;
    bool planar = true;
};

/// K_4, triangular prism, cube Q_3, and the (non-planar) Petersen graph.
std::vector<NamedGraph> catalog_cubic();

inline constexpr std::size_t enumeration_cap = 7;

/// Streams every labelled connected graph on n vertices in increasing
/// edge-bitmask order, where bit k stands for the k-th pair (i < j) in
/// lexicographic order. Returns the number of graphs visited.
std::size_t enumerate_connected_graphs(std::size_t n, const std::function<void(const Graph&)>& visit);

/// Deterministic batch description: `count` graphs of `family` with orders
/// cycling through [n_min, n_max].
struct CorpusSpec
{
    std::string family; // path | cycle | complete | star | interval | permutation
    std::size_t n_min = 2;
    std::size_t n_max = 12;
    std::uint64_t seed = 0;
    std::size_t count = 1;
};

struct CorpusItem
{
    std::string id;       // content address: 16 hex digits
    std::size_t n = 0;
    std::uint64_t seed = 0;
    Graph graph;
};

std::vector<CorpusItem> generate_corpus(const CorpusSpec& spec);

// Writes <root>/<family>/<id>.edges for every item and returns the paths.
std::vector<std::filesystem::path> write_corpus(const CorpusSpec& spec, const std::filesystem::path& root);

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

} // namespace paireddom
