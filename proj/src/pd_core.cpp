#include "paireddom/pd_core.hpp"

#include "paireddom/errors.hpp"

#include <charconv>
#include <cstdlib>

namespace paireddom {

PDCertificate::PDCertificate(VertexSet set, Matching pairing)
    : set_(std::move(set)), pairing_(std::move(pairing)), size_(set_.size())
{
    if (size_ % 2 != 0)
        throw DiscrepancyError("paired dominating set of odd size " + std::to_string(size_));
    if (2 * pairing_.size() != size_ || !(pairing_.matched_vertices() == set_))
        throw DiscrepancyError("pairing does not cover the set " + set_.to_string());
}

std::string_view to_string(PdRejection r)
{
    switch (r) {
    case PdRejection::NotDominating:
        return "not-dominating";
    case PdRejection::OddSize:
        return "odd-size";
    case PdRejection::NoPerfectMatching:
        return "no-perfect-matching";
    }
    return "unknown";
}

OracleCaps OracleCaps::parse(std::string_view text)
{
    OracleCaps caps;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        const auto item = text.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw DomainError("cap entry '" + std::string(item) + "' is not key=value");
        const auto key = item.substr(0, eq);
        const auto value_text = item.substr(eq + 1);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
        if (ec != std::errc{} || ptr != value_text.data() + value_text.size())
            throw DomainError("cap value '" + std::string(value_text) + "' is not an integer");
        if (key == "pd")
            caps.pd_max_vertices = value;
        else if (key == "vc")
            caps.vc_max_vertices = value;
        else
            throw DomainError("unknown cap '" + std::string(key) + "'");
    }
    return caps;
}

OracleCaps OracleCaps::from_env()
{
    const char* env = std::getenv("PAIREDDOM_CAPS");
    return env ? parse(env) : OracleCaps{};
}

bool is_dominating_set(const Graph& g, const VertexSet& d)
{
    require_within(g, d);
    return g.closed_neighborhood(d).size() == g.order();
}

PdCheck is_pd_set(const Graph& g, const VertexSet& d)
{
    require_within(g, d);
    PdCheck out;
    const VertexSet covered = g.closed_neighborhood(d);
    if (covered.size() != g.order()) {
        out.reason = PdRejection::NotDominating;
        for (Vertex v = 0; v < g.order(); ++v)
            if (!covered.contains(v)) {
                out.undominated = v;
                break;
            }
        return out;
    }
    if (!d.is_even()) {
        out.reason = PdRejection::OddSize;
        return out;
    }
    auto pairing = perfect_matching(g, d);
    if (!pairing) {
        out.reason = PdRejection::NoPerfectMatching;
        return out;
    }
    out.certificate.emplace(d, std::move(*pairing));
    return out;
}

PDCertificate certify_pd_set(const Graph& g, const VertexSet& d, const Matching& pairing)
{
    require_within(g, d);
    if (!is_dominating_set(g, d))
        throw DiscrepancyError("set " + d.to_string() + " does not dominate the graph");
    if (!is_valid_matching(g, pairing))
        throw DiscrepancyError("pairing uses a non-edge or repeats a vertex");
    return PDCertificate(d, pairing);
}

namespace {

    void require_pd_oracle_input(const Graph& g, const OracleCaps& caps)
    {
        if (g.order() > caps.pd_max_vertices)
            throw CapExceededError("PD oracle capped at " + std::to_string(caps.pd_max_vertices) + " vertices, got "
                                   + std::to_string(g.order()));
        if (g.order() == 0)
            throw DomainError("empty graph");
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) == 0)
                throw DomainError("vertex " + std::to_string(v) + " is isolated");
        if (!is_connected(g))
            throw DisconnectedError("PD oracle requires a connected graph");
    }

    // Smallest even k with a PD-set of size k, returning the first hit in
    // lexicographic order.
    std::optional<PDCertificate> first_pd_of_size(const Graph& g, std::size_t k)
    {
        std::optional<PDCertificate> hit;
        for_each_combination(g.order(), k, [&](const std::vector<Vertex>& members) {
            auto check = is_pd_set(g, VertexSet(std::span<const Vertex>(members)));
            if (check.certificate) {
                hit = std::move(check.certificate);
                return true;
            }
            return false;
        });
        return hit;
    }

} // namespace

PDCertificate min_pd_brute(const Graph& g, const OracleCaps& caps)
{
    require_pd_oracle_input(g, caps);
    for (std::size_t k = 2; k <= g.order(); k += 2)
        if (auto hit = first_pd_of_size(g, k))
            return std::move(*hit);
    // Without isolated vertices a maximal matching's vertex set is always a PD-set.
    throw DiscrepancyError("no paired dominating set found");
}

std::vector<PDCertificate> enumerate_min_pd_sets(const Graph& g, const OracleCaps& caps)
{
    const std::size_t k = min_pd_brute(g, caps).size();
    std::vector<PDCertificate> out;
    for_each_combination(g.order(), k, [&](const std::vector<Vertex>& members) {
        auto check = is_pd_set(g, VertexSet(std::span<const Vertex>(members)));
        if (check.certificate)
            out.push_back(std::move(*check.certificate));
        return false;
    });
    return out;
}

bool is_vertex_cover(const Graph& g, const VertexSet& c)
{
    require_within(g, c);
    for (auto [u, v] : g.edges())
        if (!c.contains(u) && !c.contains(v))
            return false;
    return true;
}

VertexSet min_vc_brute(const Graph& g, const OracleCaps& caps)
{
    if (g.order() > caps.vc_max_vertices)
        throw CapExceededError("vertex-cover oracle capped at " + std::to_string(caps.vc_max_vertices)
                               + " vertices, got " + std::to_string(g.order()));
    const auto edges = g.edges();
    for (std::size_t k = 0; k <= g.order(); ++k) {
        std::optional<VertexSet> hit;
        for_each_combination(g.order(), k, [&](const std::vector<Vertex>& members) {
            const auto c = VertexSet(std::span<const Vertex>(members));
            for (auto [u, v] : edges)
                if (!c.contains(u) && !c.contains(v))
                    return false;
            hit = c;
            return true;
        });
        if (hit)
            return *hit;
    }
    return g.vertices();
}

} // namespace paireddom
