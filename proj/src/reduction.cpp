#include "paireddom/reduction.hpp"

#include "paireddom/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace paireddom {

namespace {

    using R = GadgetRole;

    // Left block {v^1, x^1, y^1, y^2, z^1}, right block {v^2, x^2, y^3, y^4, z^3},
    // centre {v^3, z^2, a^1, a^2} joined to both blocks through z^1 and z^3.
    constexpr std::array<std::pair<GadgetRole, GadgetRole>, 17> edge_table{{
        {R::V1, R::Y1},
        {R::X1, R::Y1},
        {R::X1, R::Y2},
        {R::Y1, R::Y2},
        {R::Y2, R::Z1},

        {R::V2, R::Y4},
        {R::X2, R::Y4},
        {R::X2, R::Y3},
        {R::Y3, R::Y4},
        {R::Y3, R::Z3},

        {R::Z1, R::Z2},
        {R::Z2, R::Z3},
        {R::Z1, R::A1},
        {R::Z2, R::A1},
        {R::Z2, R::A2},
        {R::Z3, R::A2},
        {R::V3, R::Z2},
    }};

    // Pairings of the cover / non-cover picks.
    constexpr std::array<std::pair<GadgetRole, GadgetRole>, 3> cover_pairs{{
        {R::V1, R::Y1},
        {R::V2, R::Y4},
        {R::V3, R::Z2},
    }};
    constexpr std::array<std::pair<GadgetRole, GadgetRole>, 2> non_cover_pairs{{
        {R::Y2, R::Z1},
        {R::Y3, R::Z3},
    }};

    std::size_t index_of(GadgetRole role) { return static_cast<std::size_t>(role); }

} // namespace

std::string_view role_name(GadgetRole role)
{
    static constexpr std::array<std::string_view, gadget_order> names{
        "v^1", "v^2", "v^3", "x^1", "x^2", "y^1", "y^2", "y^3", "y^4", "z^1", "z^2", "z^3", "a^1", "a^2",
    };
    return names[index_of(role)];
}

std::span<const std::pair<GadgetRole, GadgetRole>> gadget_edges()
{
    return edge_table;
}

// ---- GadgetMap ----------------------------------------------------------

Vertex GadgetMap::vertex(Vertex original, GadgetRole role) const
{
    if (original >= original_order_)
        throw DomainError("original vertex " + std::to_string(original) + " out of range");
    return static_cast<Vertex>(original * gadget_order + index_of(role));
}

std::array<Vertex, 3> GadgetMap::ports(Vertex original) const
{
    return {vertex(original, R::V1), vertex(original, R::V2), vertex(original, R::V3)};
}

VertexSet GadgetMap::gadget(Vertex original) const
{
    const Vertex first = vertex(original, R::V1);
    return VertexSet::range(first, static_cast<Vertex>(first + gadget_order));
}

Vertex GadgetMap::owner(Vertex transformed) const
{
    const Vertex o = static_cast<Vertex>(transformed / gadget_order);
    if (o >= original_order_)
        throw DomainError("transformed vertex " + std::to_string(transformed) + " out of range");
    return o;
}

GadgetRole GadgetMap::role_of(Vertex transformed) const
{
    owner(transformed);
    return all_gadget_roles[transformed % gadget_order];
}

std::string GadgetMap::label(Vertex transformed) const
{
    const auto name = role_name(role_of(transformed));
    return std::string(1, name[0]) + std::to_string(owner(transformed)) + std::string(name.substr(1));
}

// ---- construction -------------------------------------------------------

ReductionInstance reduce_vc_to_pd(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3)
            throw DomainError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v))
                              + "; the reduction needs a cubic graph");

    GadgetMap map(g.order());
    std::vector<Edge> edges;
    edges.reserve(g.order() * edge_table.size() + g.size());
    for (Vertex v = 0; v < g.order(); ++v)
        for (auto [a, b] : edge_table)
            edges.emplace_back(map.vertex(v, a), map.vertex(v, b));

    // neighbors() is sorted, so the k-th neighbour of v attaches to port k.
    auto port_towards = [&](Vertex v, Vertex w) {
        const auto nbrs = g.neighbors(v);
        const auto k = static_cast<std::size_t>(std::find(nbrs.begin(), nbrs.end(), w) - nbrs.begin());
        return map.ports(v)[k];
    };
    for (auto [u, w] : g.edges())
        edges.emplace_back(port_towards(u, w), port_towards(w, u));

    ReductionInstance inst{g, Graph(g.order() * gadget_order, edges), map};
    if (inst.transformed.max_degree() > 5)
        throw DiscrepancyError("transformed graph has a vertex of degree " + std::to_string(inst.transformed.max_degree()));
    return inst;
}

PDCertificate pd_from_vc(const ReductionInstance& inst, const VertexSet& cover)
{
    require_within(inst.original, cover);
    for (auto [u, v] : inst.original.edges())
        if (!cover.contains(u) && !cover.contains(v))
            throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not covered");

    VertexSet set;
    Matching pairing;
    auto take = [&](Vertex v, GadgetRole a, GadgetRole b) {
        const Vertex p = inst.map.vertex(v, a);
        const Vertex q = inst.map.vertex(v, b);
        set.insert(p);
        set.insert(q);
        pairing.pairs.emplace_back(std::min(p, q), std::max(p, q));
    };
    for (Vertex v = 0; v < inst.original.order(); ++v) {
        if (cover.contains(v))
            for (auto [a, b] : cover_pairs)
                take(v, a, b);
        else
            for (auto [a, b] : non_cover_pairs)
                take(v, a, b);
    }
    std::sort(pairing.pairs.begin(), pairing.pairs.end());
    return certify_pd_set(inst.transformed, set, pairing);
}

VertexSet vc_from_pd(const ReductionInstance& inst, const PDCertificate& pd)
{
    require_within(inst.transformed, pd.set());
    if (!is_dominating_set(inst.transformed, pd.set()) || !is_valid_matching(inst.transformed, pd.pairing()))
        throw DomainError("certificate is not a paired dominating set of the transformed graph");

    VertexSet cover;
    for (Vertex v = 0; v < inst.original.order(); ++v) {
        const std::size_t count = (pd.set() & inst.map.gadget(v)).size();
        if (count == 5)
            throw NotNormalizedError("gadget of vertex " + std::to_string(v) + " holds 5 picks");
        if (count < 4)
            throw DiscrepancyError("gadget of vertex " + std::to_string(v) + " holds only " + std::to_string(count)
                                   + " picks");
        if (count >= 6)
            cover.insert(v);
    }
    for (auto [u, v] : inst.original.edges())
        if (!cover.contains(u) && !cover.contains(v))
            throw DiscrepancyError("extracted set misses edge " + std::to_string(u) + "-" + std::to_string(v));
    return cover;
}

ReductionReport verify_reduction_identity(const ReductionInstance& inst, const OracleCaps& caps)
{
    ReductionReport report;
    const std::size_t n = inst.original.order();
    report.original_order = n;
    report.transformed_order = inst.transformed.order();
    report.transformed_size = inst.transformed.size();
    report.max_degree = inst.transformed.max_degree();
    if (report.max_degree > 5)
        report.discrepancies.push_back("maximum degree " + std::to_string(report.max_degree) + " exceeds 5");

    report.cover = min_vc_brute(inst.original, caps);
    report.beta = report.cover.size();
    report.upper_bound = 4 * n + 2 * report.beta;

    const auto certificate = pd_from_vc(inst, report.cover);
    report.certificate_size = certificate.size();
    const auto check = is_pd_set(inst.transformed, certificate.set());
    if (!check.certificate)
        report.discrepancies.push_back("constructed set rejected: " + std::string(to_string(*check.reason)));
    if (certificate.size() != report.upper_bound)
        report.discrepancies.push_back("constructed set has size " + std::to_string(certificate.size())
                                       + ", expected " + std::to_string(report.upper_bound));

    const auto back = vc_from_pd(inst, certificate);
    if (!(back == report.cover))
        report.discrepancies.push_back("cover round trip returned " + back.to_string());

    report.upper_bound_certified = report.discrepancies.empty();
    if (inst.transformed.order() <= caps.pd_max_vertices) {
        report.lower_bound_checked = true;
        const auto best = min_pd_brute(inst.transformed, caps);
        if (best.size() != report.upper_bound)
            report.discrepancies.push_back("gamma_pr of the transformed graph is " + std::to_string(best.size()));
    }
    return report;
}

std::string roles_json(const ReductionInstance& inst)
{
    nlohmann::ordered_json doc;
    doc["original_order"] = inst.original.order();
    doc["gadget_order"] = gadget_order;
    nlohmann::ordered_json roles = nlohmann::ordered_json::object();
    for (Vertex v = 0; v < inst.transformed.order(); ++v)
        roles[inst.map.label(v)] = v;
    doc["roles"] = std::move(roles);
    return doc.dump(2) + "\n";
}

} // namespace paireddom
