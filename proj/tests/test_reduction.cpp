#include "paireddom/errors.hpp"
#include "paireddom/generators.hpp"
#include "paireddom/reduction.hpp"

#include <doctest.h>
#include <json.hpp>

#include <map>

using namespace paireddom;

namespace {

const Graph& cubic(const std::string& name)
{
    static const auto catalog = catalog_cubic();
    for (const auto& g : catalog)
        if (g.name == name)
            return g.graph;
    throw std::logic_error("no cubic graph " + name);
}

Graph single_gadget()
{
    std::vector<Edge> edges;
    for (auto [a, b] : gadget_edges())
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    return Graph(gadget_order, edges);
}

VertexSet roles_to_set(std::span<const GadgetRole> roles)
{
    VertexSet s;
    for (auto r : roles)
        s.insert(static_cast<Vertex>(r));
    return s;
}

} // namespace

TEST_CASE("gadget neighbourhoods")
{
    const Graph g = single_gadget();
    auto closed = [&](GadgetRole r) { return g.closed_neighborhood(static_cast<Vertex>(r)); };
    auto set = [](std::initializer_list<GadgetRole> roles) {
        return roles_to_set(std::span<const GadgetRole>(roles.begin(), roles.size()));
    };
    using R = GadgetRole;
    CHECK(closed(R::X1) == set({R::X1, R::Y1, R::Y2}));
    CHECK(closed(R::X2) == set({R::X2, R::Y3, R::Y4}));
    CHECK(closed(R::A1) == set({R::A1, R::Z1, R::Z2}));
    CHECK(closed(R::A2) == set({R::A2, R::Z2, R::Z3}));
    // Each port hangs off one interior vertex.
    CHECK(closed(R::V1) == set({R::V1, R::Y1}));
    CHECK(closed(R::V2) == set({R::V2, R::Y4}));
    CHECK(closed(R::V3) == set({R::V3, R::Z2}));
    CHECK(g.degree(static_cast<Vertex>(R::Z2)) == 5);
    CHECK(g.max_degree() == 5);
    CHECK(is_connected(g));
    CHECK(role_name(R::Y4) == "y^4");
}

TEST_CASE("single gadget: the 4-vertex interior choice is forced")
{
    // Among PD-sets of the gadget's own subgraph that dominate every
    // non-port vertex, the minimum has size 4 and is unique.
    const Graph g = single_gadget();
    const VertexSet ports = roles_to_set(gadget_ports);
    const VertexSet interior = g.vertices() - ports;
    std::size_t best = gadget_order + 1;
    std::vector<VertexSet> minima;
    for (std::uint32_t mask = 1; mask < (1U << gadget_order); ++mask) {
        VertexSet d;
        for (Vertex v = 0; v < gadget_order; ++v)
            if ((mask >> v) & 1U)
                d.insert(v);
        if (d.size() > best || !d.is_even())
            continue;
        if (!interior.is_subset_of(g.closed_neighborhood(d)) || !has_perfect_matching(g, d))
            continue;
        if (d.size() < best) {
            best = d.size();
            minima.clear();
        }
        minima.push_back(d);
    }
    CHECK(best == 4);
    REQUIRE(minima.size() == 1);
    CHECK(minima.front() == roles_to_set(non_cover_picks));

    // Dominating the ports too costs six vertices.
    CHECK(min_pd_brute(g).size() == 6);
    CHECK(is_pd_set(g, roles_to_set(cover_picks)).certificate.has_value());
}

TEST_CASE("structure of the transformed graph")
{
    for (const std::string name : {"K4", "prism", "cube"}) {
        const Graph& g = cubic(name);
        const auto inst = reduce_vc_to_pd(g);
        const Graph& t = inst.transformed;
        CHECK(t.order() == g.order() * gadget_order);
        CHECK(t.size() == g.order() * gadget_edges().size() + g.size());
        CHECK(t.max_degree() <= 5);

        std::size_t inter = 0;
        for (auto [u, v] : t.edges())
            if (inst.map.owner(u) != inst.map.owner(v)) {
                ++inter;
                CHECK(g.adjacent(inst.map.owner(u), inst.map.owner(v)));
            }
        CHECK(inter == g.size());

        for (Vertex o = 0; o < g.order(); ++o) {
            const auto ports = inst.map.ports(o);
            for (std::size_t k = 0; k < 3; ++k) {
                std::size_t external = 0;
                for (Vertex w : t.neighbors(ports[k]))
                    if (inst.map.owner(w) != o) {
                        ++external;
                        // k-th smallest neighbour of o owns the other end.
                        CHECK(inst.map.owner(w) == g.neighbors(o)[k]);
                    }
                CHECK(external == 1);
            }
        }
    }
}

TEST_CASE("non-cubic input is rejected with the offending vertex")
{
    try {
        reduce_vc_to_pd(gen_path(3));
        FAIL("expected a domain error");
    }
    catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("vertex 0 has degree 1") != std::string::npos);
    }
}

TEST_CASE("gadget map labels and roles")
{
    const GadgetMap map(4);
    const Vertex v = map.vertex(3, GadgetRole::V2);
    CHECK(v == 3 * gadget_order + 1);
    CHECK(map.owner(v) == 3);
    CHECK(map.role_of(v) == GadgetRole::V2);
    CHECK(map.label(v) == "v3^2");
    CHECK(map.label(map.vertex(0, GadgetRole::Z3)) == "z0^3");
    CHECK(map.gadget(1) == VertexSet::range(14, 28));
    CHECK_THROWS_AS(map.owner(56), DomainError);
}

TEST_CASE("forward construction sizes")
{
    const auto k4 = reduce_vc_to_pd(cubic("K4"));
    const auto c3 = pd_from_vc(k4, VertexSet{0, 1, 2});
    CHECK(c3.size() == 22);
    CHECK(is_pd_set(k4.transformed, c3.set()).certificate.has_value());
    const auto c4 = pd_from_vc(k4, VertexSet{0, 1, 2, 3});
    CHECK(c4.size() == 24);
    CHECK(is_pd_set(k4.transformed, c4.set()).certificate.has_value());
    CHECK_THROWS_AS(pd_from_vc(k4, VertexSet{0, 1}), DomainError);

    const auto prism = reduce_vc_to_pd(cubic("prism"));
    const auto cover = min_vc_brute(prism.original);
    CHECK(cover.size() == 4);
    CHECK(pd_from_vc(prism, cover).size() == 32);
}

TEST_CASE("round trip on every vertex cover")
{
    for (const std::string name : {"K4", "prism", "cube"}) {
        const auto inst = reduce_vc_to_pd(cubic(name));
        const std::size_t n = inst.original.order();
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            VertexSet c;
            for (Vertex v = 0; v < n; ++v)
                if ((mask >> v) & 1U)
                    c.insert(v);
            if (!is_vertex_cover(inst.original, c))
                continue;
            const auto pd = pd_from_vc(inst, c);
            CHECK(pd.size() == 4 * n + 2 * c.size());
            CHECK(vc_from_pd(inst, pd) == c);
        }
    }
}

TEST_CASE("a gadget holding five vertices is reported as not normalized")
{
    // Start from the cover {0,1,2} of K_4, switch gadget 0 to its interior
    // picks, and pair the port joining gadgets 0 and 3 across the edge.
    const auto inst = reduce_vc_to_pd(cubic("K4"));
    const auto& m = inst.map;
    VertexSet d = pd_from_vc(inst, VertexSet{0, 1, 2}).set() - m.gadget(0);
    for (auto r : non_cover_picks)
        d.insert(m.vertex(0, r));
    const Vertex p0 = m.vertex(0, GadgetRole::V3); // 0's third neighbour is 3
    const Vertex p3 = m.vertex(3, GadgetRole::V1); // 3's first neighbour is 0
    REQUIRE(inst.transformed.adjacent(p0, p3));
    d.insert(p0);
    d.insert(p3);

    const auto check = is_pd_set(inst.transformed, d);
    REQUIRE(check.certificate.has_value());
    CHECK((d & m.gadget(0)).size() == 5);
    CHECK_THROWS_AS(vc_from_pd(inst, *check.certificate), NotNormalizedError);
}

TEST_CASE("identity report")
{
    const std::map<std::string, std::size_t> expected{{"K4", 22}, {"prism", 32}, {"cube", 40}};
    for (const auto& [name, bound] : expected) {
        const auto report = verify_reduction_identity(reduce_vc_to_pd(cubic(name)));
        CHECK(report.upper_bound == bound);
        CHECK(report.certificate_size == bound);
        CHECK(report.upper_bound_certified);
        CHECK_FALSE(report.lower_bound_checked);
        CHECK(report.discrepancies.empty());
    }
}

TEST_CASE("roles file lists every transformed vertex")
{
    const auto inst = reduce_vc_to_pd(cubic("K4"));
    const auto doc = nlohmann::json::parse(roles_json(inst));
    CHECK(doc["original_order"] == 4);
    CHECK(doc["gadget_order"] == 14);
    CHECK(doc["roles"].size() == 56);
    CHECK(doc["roles"]["v0^1"] == 0);
    CHECK(doc["roles"]["a3^2"] == 55);
}
