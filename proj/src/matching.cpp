#include "paireddom/matching.hpp"

#include "paireddom/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

namespace paireddom {

VertexSet Matching::matched_vertices() const
{
    VertexSet s;
    for (auto [u, v] : pairs) {
        s.insert(u);
        s.insert(v);
    }
    return s;
}

bool is_valid_matching(const Graph& g, const Matching& m)
{
    VertexSet used;
    for (auto [u, v] : m.pairs) {
        if (u >= g.order() || v >= g.order() || !g.adjacent(u, v))
            return false;
        if (used.contains(u) || used.contains(v))
            return false;
        used.insert(u);
        used.insert(v);
    }
    return true;
}

namespace {

    constexpr int unmatched = -1;

    class Blossom
    {
    public:
        explicit Blossom(const Graph& g)
            : g_(g), n_(static_cast<int>(g.order())), mate_(g.order(), unmatched), parent_(g.order()),
              base_(g.order()), in_queue_(g.order()), in_blossom_(g.order()), used_(g.order())
        {
        }

        std::vector<int> run()
        {
            for (int root = 0; root < n_; ++root)
                if (mate_[root] == unmatched) {
                    const int end = find_augmenting_path(root);
                    if (end != unmatched)
                        augment(end);
                }
            return mate_;
        }

    private:
        int lca(int a, int b)
        {
            std::fill(used_.begin(), used_.end(), false);
            for (;;) {
                a = base_[a];
                used_[a] = true;
                if (mate_[a] == unmatched)
                    break;
                a = parent_[mate_[a]];
            }
            for (;;) {
                b = base_[b];
                if (used_[b])
                    return b;
                b = parent_[mate_[b]];
            }
        }

        void mark_path(int v, int b, int child)
        {
            while (base_[v] != b) {
                in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = true;
                parent_[v] = child;
                child = mate_[v];
                v = parent_[mate_[v]];
            }
        }

        int find_augmenting_path(int root)
        {
            std::fill(used_.begin(), used_.end(), false);
            std::fill(parent_.begin(), parent_.end(), unmatched);
            std::fill(in_queue_.begin(), in_queue_.end(), false);
            for (int i = 0; i < n_; ++i)
                base_[i] = i;

            std::deque<int> queue{root};
            in_queue_[root] = true;
            while (!queue.empty()) {
                const int v = queue.front();
                queue.pop_front();
                for (Vertex wv : g_.neighbors(static_cast<Vertex>(v))) {
                    const int to = static_cast<int>(wv);
                    if (base_[v] == base_[to] || mate_[v] == to)
                        continue;
                    if (to == root || (mate_[to] != unmatched && parent_[mate_[to]] != unmatched)) {
                        // Odd cycle: contract the blossom.
                        const int cur = lca(v, to);
                        std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                        mark_path(v, cur, to);
                        mark_path(to, cur, v);
                        for (int i = 0; i < n_; ++i)
                            if (in_blossom_[base_[i]]) {
                                base_[i] = cur;
                                if (!in_queue_[i]) {
                                    in_queue_[i] = true;
                                    queue.push_back(i);
                                }
                            }
                    }
                    else if (parent_[to] == unmatched) {
                        parent_[to] = v;
                        if (mate_[to] == unmatched)
                            return to;
                        const int next = mate_[to];
                        in_queue_[next] = true;
                        queue.push_back(next);
                    }
                }
            }
            return unmatched;
        }

        void augment(int v)
        {
            while (v != unmatched) {
                const int pv = parent_[v];
                const int ppv = mate_[pv];
                mate_[v] = pv;
                mate_[pv] = v;
                v = ppv;
            }
        }

        const Graph& g_;
        int n_;
        std::vector<int> mate_;
        std::vector<int> parent_;
        std::vector<int> base_;
        std::vector<char> in_queue_;
        std::vector<char> in_blossom_;
        std::vector<char> used_;
    };

} // namespace

Matching maximum_matching(const Graph& g)
{
    const auto mate = Blossom(g).run();
    Matching m;
    for (std::size_t v = 0; v < mate.size(); ++v)
        if (mate[v] != unmatched && static_cast<std::size_t>(mate[v]) > v)
            m.pairs.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(mate[v]));
    return m;
}

std::optional<Matching> perfect_matching(const Graph& g, const VertexSet& s)
{
    require_within(g, s);
    const std::size_t k = s.size();
    if (k % 2 != 0)
        return std::nullopt;
    if (k == 0)
        return Matching{};
    const auto sub = induced_subgraph(g, s);
    if (sub.graph.has_isolated_vertex())
        return std::nullopt;
    const auto local = maximum_matching(sub.graph);
    if (2 * local.size() != k)
        return std::nullopt;
    Matching m;
    for (auto [u, v] : local.pairs) {
        Vertex a = sub.to_original[u];
        Vertex b = sub.to_original[v];
        if (a > b)
            std::swap(a, b);
        m.pairs.emplace_back(a, b);
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

bool has_perfect_matching(const Graph& g, const VertexSet& s)
{
    return perfect_matching(g, s).has_value();
}

std::size_t maximum_matching_size_bitmask(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > bitmask_matching_cap)
        throw CapExceededError("bitmask matching oracle limited to " + std::to_string(bitmask_matching_cap)
                               + " vertices, got " + std::to_string(n));
    std::vector<std::uint32_t> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= 1U << v;
        nbr[v] |= 1U << u;
    }
    // best[mask] = maximum matching of g[mask]; the lowest vertex of mask is
    // either left exposed or matched to one of its neighbours in mask.
    const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    std::vector<std::uint8_t> best(std::size_t{full} + 1, 0);
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        const int low = __builtin_ctz(mask);
        const std::uint32_t rest = mask & (mask - 1);
        std::uint8_t value = best[rest];
        std::uint32_t cand = nbr[static_cast<std::size_t>(low)] & rest;
        while (cand) {
            const int w = __builtin_ctz(cand);
            cand &= cand - 1;
            value = std::max<std::uint8_t>(value, static_cast<std::uint8_t>(1 + best[rest & ~(1U << w)]));
        }
        best[mask] = value;
        if (mask == full)
            break;
    }
    return best[full];
}

} // namespace paireddom
