#include "paireddom/atfree_pd.hpp"

#include "paireddom/errors.hpp"
#include "paireddom/matching.hpp"

#include <algorithm>
#include <sstream>

namespace paireddom {

// ---- 2-approximation ----------------------------------------------------

ApproxPd approx_pd(const Graph& g)
{
    require_connected_no_isolated(g);
    const DominatingPair pair = find_dominating_pair(g);
    Path path = shortest_path(g, pair.x, pair.y);
    const auto& p = path.vertices;
    const std::size_t t = p.size();

    VertexSet set = path.vertex_set();
    Matching pairing;
    auto add_pair = [&](Vertex a, Vertex b) { pairing.pairs.emplace_back(std::min(a, b), std::max(a, b)); };

    for (std::size_t i = 0; i + 1 < t; i += 2)
        add_pair(p[i], p[i + 1]);
    if (t % 2 != 0) {
        const Vertex last = p.back();
        Vertex partner = last;
        for (Vertex w : g.neighbors(last))
            if (!set.contains(w)) {
                partner = w;
                break;
            }
        if (partner == last) {
            // Every neighbour of the last vertex lies on the path, so dropping
            // it keeps the set dominating.
            set.erase(last);
        }
        else {
            set.insert(partner);
            add_pair(last, partner);
        }
    }
    std::sort(pairing.pairs.begin(), pairing.pairs.end());
    auto certificate = certify_pd_set(g, set, pairing);
    return ApproxPd{std::move(certificate), pair, std::move(path), path_lower_bound(t)};
}

// ---- exact level sweep --------------------------------------------------

void LevelQueue::offer(LevelKey key, LevelTuple tuple)
{
    auto it = entries.find(key);
    if (it == entries.end())
        entries.emplace(std::move(key), std::move(tuple));
    else if (tuple.size < it->second.size)
        it->second = std::move(tuple);
}

namespace {

    class LevelSweep
    {
    public:
        LevelSweep(const Graph& g, const ExactOptions& options)
            : g_(g), options_(options)
        {
            diagnostics_.pair = find_dominating_pair(g);
            diagnostics_.strict = options.strict;
            levels_ = bfs_levels(g, diagnostics_.pair.x);
            diagnostics_.depth = levels_.depth();
            closed_.reserve(g.order());
            for (Vertex v = 0; v < g.order(); ++v)
                closed_.push_back(g.closed_neighborhood(v));
        }

        ExactPd run()
        {
            LevelQueue queue = seed();
            diagnostics_.queue_sizes.push_back(queue.entries.size());
            for (std::size_t i = 2; i <= levels_.depth() && !queue.entries.empty(); ++i) {
                queue = advance(queue, i);
                diagnostics_.queue_sizes.push_back(queue.entries.size());
            }
            return finish(queue);
        }

    private:
        bool matchable(const VertexSet& s)
        {
            ++diagnostics_.matching_calls;
            return has_perfect_matching(g_, s);
        }

        VertexSet dominated_by(const VertexSet& s) const
        {
            VertexSet out;
            s.for_each([&](Vertex v) { out |= closed_[v]; });
            return out;
        }

        // Strict-mode fingerprint of a solution's future matchability.
        std::uint64_t exposable_family(const VertexSet& solution, std::size_t level)
        {
            if (!options_.strict)
                return 0;
            const auto last = (solution & levels_.level(level)).members();
            std::uint64_t family = 0;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << last.size()); ++mask) {
                VertexSet rest = solution;
                for (std::size_t k = 0; k < last.size(); ++k)
                    if ((mask >> k) & 1U)
                        rest.erase(last[k]);
                if (rest.is_even() && matchable(rest))
                    family |= std::uint64_t{1} << mask;
            }
            return family;
        }

        LevelQueue seed()
        {
            LevelQueue q;
            q.level = 1;
            const auto candidates = closed_[levels_.root].members();
            const std::size_t limit = std::min(window_pick_limit, candidates.size());
            for (std::size_t k = 1; k <= limit; ++k)
                for_each_combination(candidates.size(), k, [&](const std::vector<Vertex>& idx) {
                    VertexSet x;
                    for (Vertex i : idx)
                        x.insert(candidates[i]);
                    LevelKey key{x, exposable_family(x, 1)};
                    q.offer(std::move(key), LevelTuple{x, x, k});
                    return false;
                });
            return q;
        }

        LevelQueue advance(const LevelQueue& previous, std::size_t i)
        {
            LevelQueue next;
            next.level = i;
            const VertexSet& level = levels_.level(i);
            const VertexSet& before = levels_.level(i - 1);
            const VertexSet& two_before = levels_.level(i - 2);
            const auto level_members = level.members();

            for (const auto& [key, entry] : previous.entries) {
                const std::size_t room = window_pick_limit - std::min(window_pick_limit, entry.frontier.size());
                const std::size_t max_pick = std::min(room, level_members.size());
                const VertexSet frontier_cover = dominated_by(entry.frontier);
                for (std::size_t k = 0; k <= max_pick; ++k)
                    for_each_combination(level_members.size(), k, [&](const std::vector<Vertex>& idx) {
                        std::vector<Vertex> picks;
                        picks.reserve(idx.size());
                        for (Vertex j : idx)
                            picks.push_back(level_members[j]);
                        const auto u = VertexSet(std::span<const Vertex>(picks));

                        if (!before.is_subset_of(frontier_cover | dominated_by(u)))
                            return false;
                        if (!some_subset_matchable(entry.solution, picks))
                            return false;

                        ++diagnostics_.transitions;
                        VertexSet y = (entry.frontier | u) - two_before;
                        VertexSet y_solution = entry.solution | u;
                        LevelKey next_key{y, exposable_family(y_solution, i)};
                        next.offer(std::move(next_key), LevelTuple{std::move(y), std::move(y_solution),
                                                                   entry.size + picks.size()});
                        return false;
                    });
            }
            return next;
        }

        // Is there U' ⊆ picks with G[solution ∪ U'] perfectly matchable?
        bool some_subset_matchable(const VertexSet& solution, const std::vector<Vertex>& picks)
        {
            const std::size_t parity = solution.size() % 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << picks.size()); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountll(mask)) % 2 != parity)
                    continue;
                VertexSet candidate = solution;
                for (std::size_t k = 0; k < picks.size(); ++k)
                    if ((mask >> k) & 1U)
                        candidate.insert(picks[k]);
                if (matchable(candidate))
                    return true;
            }
            return false;
        }

        ExactPd finish(const LevelQueue& last)
        {
            const VertexSet& final_level = levels_.level(levels_.depth());
            const LevelTuple* best = nullptr;
            if (last.level == levels_.depth())
                for (const auto& [key, entry] : last.entries) {
                    if (!final_level.is_subset_of(dominated_by(entry.frontier)))
                        continue;
                    if (best && (entry.size > best->size || (entry.size == best->size && !(entry.solution < best->solution))))
                        continue;
                    if (!entry.solution.is_even() || !matchable(entry.solution))
                        continue;
                    best = &entry;
                }
            if (!best)
                throw AlgorithmFailure(failure_report(last));

            auto check = is_pd_set(g_, best->solution);
            if (!check.certificate)
                throw AlgorithmFailure("level sweep returned " + best->solution.to_string()
                                       + ", which is not a paired dominating set: "
                                       + std::string(to_string(*check.reason)));
            return ExactPd{std::move(*check.certificate), diagnostics_};
        }

        std::string failure_report(const LevelQueue& last) const
        {
            std::ostringstream out;
            out << "level sweep found no paired dominating set (root " << levels_.root << ", depth "
                << levels_.depth() << ", stopped at level " << last.level << ", queue sizes";
            for (auto s : diagnostics_.queue_sizes)
                out << ' ' << s;
            out << ")";
            return out.str();
        }

        const Graph& g_;
        ExactOptions options_;
        LevelStructure levels_;
        std::vector<VertexSet> closed_;
        ExactDiagnostics diagnostics_;
    };

} // namespace

ExactPd exact_pd(const Graph& g, const ExactOptions& options)
{
    require_connected_no_isolated(g);
    return LevelSweep(g, options).run();
}

bool check_level_bound(const Graph& g, Vertex x, const VertexSet& d)
{
    const auto levels = bfs_levels(g, x);
    const std::size_t count = levels.levels.size();
    std::vector<std::size_t> prefix(count + 1, 0);
    for (std::size_t i = 0; i < count; ++i)
        prefix[i + 1] = prefix[i] + (d & levels.level(i)).size();
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; i + j < count; ++j)
            if (prefix[i + j + 1] - prefix[i] > j + 4)
                return false;
    return true;
}

} // namespace paireddom
