#include "paireddom/generators.hpp"

#include "paireddom/errors.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>

namespace paireddom {

namespace {

    void require_order(std::size_t n, std::size_t minimum, const char* what)
    {
        if (n < minimum)
            throw DomainError(std::string(what) + " needs n >= " + std::to_string(minimum) + ", got "
                              + std::to_string(n));
    }

    // Uniform in [0, bound). std::uniform_int_distribution is not specified
    // bit-for-bit, so seeded corpora use plain rejection sampling instead.
    std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound)
    {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t r;
        do {
            r = rng();
        } while (r >= limit);
        return r % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& items, std::mt19937_64& rng)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[bounded(rng, i)]);
    }

    std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    Graph interval_sample(std::size_t n, std::mt19937_64& rng)
    {
        std::vector<std::size_t> endpoints(2 * n);
        std::iota(endpoints.begin(), endpoints.end(), std::size_t{0});
        shuffle(endpoints, rng);
        std::vector<std::pair<std::size_t, std::size_t>> intervals(n);
        for (std::size_t k = 0; k < n; ++k)
            intervals[k] = std::minmax(endpoints[2 * k], endpoints[2 * k + 1]);
        std::vector<Edge> edges;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (intervals[a].first <= intervals[b].second && intervals[b].first <= intervals[a].second)
                    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        return Graph(n, edges);
    }

    template <typename Sampler>
    Graph sample_connected(std::size_t n, std::uint64_t seed, const char* family, Sampler sample)
    {
        require_order(n, 1, family);
        std::mt19937_64 rng(seed);
        for (std::size_t attempt = 0; attempt < connect_retry_limit; ++attempt) {
            Graph g = sample(n, rng);
            if (is_connected(g))
                return g;
        }
        throw GenerationError(std::string(family) + " generator found no connected sample in "
                              + std::to_string(connect_retry_limit) + " attempts (n=" + std::to_string(n) + ")");
    }

} // namespace

Graph gen_path(std::size_t n)
{
    require_order(n, 1, "path");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(v - 1, v);
    return Graph(n, edges);
}

Graph gen_cycle(std::size_t n)
{
    require_order(n, 3, "cycle");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph(n, edges);
}

Graph gen_complete(std::size_t n)
{
    require_order(n, 1, "complete graph");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_star(std::size_t n)
{
    require_order(n, 1, "star");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(0, v);
    return Graph(n, edges);
}

Graph gen_interval_graph(std::size_t n, std::uint64_t seed)
{
    return sample_connected(n, seed, "interval", interval_sample);
}

Graph permutation_graph(const std::vector<std::size_t>& perm)
{
    const std::size_t n = perm.size();
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (perm[a] > perm[b])
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    return Graph(n, edges);
}

Graph gen_permutation_graph(std::size_t n, std::uint64_t seed)
{
    return sample_connected(n, seed, "permutation", [](std::size_t k, std::mt19937_64& rng) {
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        shuffle(perm, rng);
        return permutation_graph(perm);
    });
}

std::vector<NamedGraph> catalog_cubic()
{
    std::vector<NamedGraph> out;
    out.push_back({"K4", gen_complete(4), true});
    out.push_back({"prism", Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}), true});

    std::vector<Edge> cube;
    for (Vertex u = 0; u < 8; ++u)
        for (Vertex bit = 1; bit < 8; bit <<= 1)
            if ((u ^ bit) > u)
                cube.emplace_back(u, u ^ bit);
    out.push_back({"cube", Graph(8, cube), true});

    std::vector<Edge> petersen;
    for (Vertex i = 0; i < 5; ++i) {
        petersen.emplace_back(i, (i + 1) % 5);
        petersen.emplace_back(i, i + 5);
        petersen.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    out.push_back({"petersen", Graph(10, petersen), false});
    return out;
}

std::size_t enumerate_connected_graphs(std::size_t n, const std::function<void(const Graph&)>& visit)
{
    if (n > enumeration_cap)
        throw CapExceededError("exhaustive enumeration capped at n=" + std::to_string(enumeration_cap) + ", got "
                               + std::to_string(n));
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);

    std::size_t visited = 0;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<std::uint32_t> adj(n);
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(adj.begin(), adj.end(), 0U);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U) {
                adj[pairs[k].first] |= 1U << pairs[k].second;
                adj[pairs[k].second] |= 1U << pairs[k].first;
            }
        if (n > 0) {
            std::uint32_t reached = 1;
            std::uint32_t frontier = 1;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::uint32_t f = frontier; f; f &= f - 1)
                    next |= adj[static_cast<std::size_t>(__builtin_ctz(f))];
                frontier = next & ~reached;
                reached |= next;
            }
            if (reached != (std::uint32_t{1} << n) - 1)
                continue;
        }
        edges.clear();
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U)
                edges.push_back(pairs[k]);
        visit(Graph(n, edges));
        ++visited;
    }
    return visited;
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t value)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xF];
        value >>= 4;
    }
    return out;
}

std::vector<CorpusItem> generate_corpus(const CorpusSpec& spec)
{
    if (spec.n_min > spec.n_max)
        throw DomainError("n_min exceeds n_max");
    const bool seeded = spec.family == "interval" || spec.family == "permutation";
    const std::size_t span = spec.n_max - spec.n_min + 1;

    std::vector<CorpusItem> items;
    items.reserve(spec.count);
    for (std::size_t k = 0; k < spec.count; ++k) {
        CorpusItem item;
        item.n = spec.n_min + k % span;
        item.seed = seeded ? splitmix64(spec.seed + k) : 0;
        if (spec.family == "path")
            item.graph = gen_path(item.n);
        else if (spec.family == "cycle")
            item.graph = gen_cycle(item.n);
        else if (spec.family == "complete")
            item.graph = gen_complete(item.n);
        else if (spec.family == "star")
            item.graph = gen_star(item.n);
        else if (spec.family == "interval")
            item.graph = gen_interval_graph(item.n, item.seed);
        else if (spec.family == "permutation")
            item.graph = gen_permutation_graph(item.n, item.seed);
        else
            throw DomainError("unknown family '" + spec.family + "'");
        item.id = hex64(fnv1a64(spec.family + ":" + std::to_string(item.n) + ":" + std::to_string(item.seed)));
        items.push_back(std::move(item));
    }
    return items;
}

std::vector<std::filesystem::path> write_corpus(const CorpusSpec& spec, const std::filesystem::path& root)
{
    const auto dir = root / spec.family;
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    for (const auto& item : generate_corpus(spec)) {
        auto file = dir / (item.id + ".edges");
        std::ofstream out(file, std::ios::binary);
        if (!out)
            throw DomainError("cannot write '" + file.string() + "'");
        out << serialize(item.graph);
        written.push_back(std::move(file));
    }
    return written;
}

} // namespace paireddom
