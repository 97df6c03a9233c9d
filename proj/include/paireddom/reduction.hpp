#pragma once

#include "paireddom/graph.hpp"
#include "paireddom/pd_core.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paireddom {

/// Vertex roles of the per-vertex gadget. V1..V3 are the attachment ports.
enum class GadgetRole : std::uint8_t
{
    V1,
    V2,
    V3,
    X1,
    X2,
    Y1,
    Y2,
    Y3,
    Y4,
    Z1,
    Z2,
    Z3,
    A1,
    A2,
};

inline constexpr std::size_t gadget_order = 14;

inline constexpr std::array<GadgetRole, gadget_order> all_gadget_roles{
    GadgetRole::V1, GadgetRole::V2, GadgetRole::V3, GadgetRole::X1, GadgetRole::X2,
    GadgetRole::Y1, GadgetRole::Y2, GadgetRole::Y3, GadgetRole::Y4, GadgetRole::Z1,
    GadgetRole::Z2, GadgetRole::Z3, GadgetRole::A1, GadgetRole::A2,
};

// "v^1", "y^4", ...
std::string_view role_name(GadgetRole role);

/// Internal edges of one gadget, as role pairs.
std::span<const std::pair<GadgetRole, GadgetRole>> gadget_edges();

/// Ports get one external edge each; everything else is internal.
inline constexpr std::array<GadgetRole, 3> gadget_ports{GadgetRole::V1, GadgetRole::V2, GadgetRole::V3};

// Gadget picks used when the original vertex is (is not) in the cover, and
// their pairings.
inline constexpr std::array<GadgetRole, 6> cover_picks{GadgetRole::V1, GadgetRole::Y1, GadgetRole::V2,
                                                       GadgetRole::Y4, GadgetRole::V3, GadgetRole::Z2};
inline constexpr std::array<GadgetRole, 4> non_cover_picks{GadgetRole::Y2, GadgetRole::Z1, GadgetRole::Y3,
                                                           GadgetRole::Z3};

/// Vertex ids of every gadget in the transformed graph. Gadget i occupies
/// the id block [14 i, 14 i + 14) in role order.
class GadgetMap
{
public:
    explicit GadgetMap(std::size_t original_order = 0) : original_order_(original_order) {}

    std::size_t original_order() const noexcept { return original_order_; }
    Vertex vertex(Vertex original, GadgetRole role) const;
    std::array<Vertex, 3> ports(Vertex original) const;
    VertexSet gadget(Vertex original) const;
    Vertex owner(Vertex transformed) const;
    GadgetRole role_of(Vertex transformed) const;
    // Role label "<letter><original>^<k>", e.g. "v3^2".
    std::string label(Vertex transformed) const;

private:
    std::size_t original_order_;
};

struct ReductionInstance
{
    Graph original;
    Graph transformed;
    GadgetMap map;
};

/// Replaces each vertex of a cubic graph by a gadget. Each vertex's incident
/// edges, sorted by neighbour id, attach to ports v^1, v^2, v^3 in order.
/// Throws DomainError naming the first vertex whose degree is not 3.
ReductionInstance reduce_vc_to_pd(const Graph& g);

/// PD-set of size 4n + 2|cover| built from a vertex cover of the original graph.
PDCertificate pd_from_vc(const ReductionInstance& inst, const VertexSet& cover);

/// Cover {v : |pd ∩ gadget(v)| >= 6}. Throws NotNormalizedError when some
/// gadget holds exactly 5 picks, DiscrepancyError when the result is not a cover.
VertexSet vc_from_pd(const ReductionInstance& inst, const PDCertificate& pd);

struct ReductionReport
{
    std::size_t original_order = 0;
    std::size_t transformed_order = 0;
    std::size_t transformed_size = 0;
    std::size_t max_degree = 0;
    std::size_t beta = 0;
    VertexSet cover;
    std::size_t upper_bound = 0;         // 4n + 2 beta
    std::size_t certificate_size = 0;
    bool upper_bound_certified = false;
    bool lower_bound_checked = false;    // only when G' fits the PD oracle
    std::vector<std::string> discrepancies;
};

ReductionReport verify_reduction_identity(const ReductionInstance& inst, const OracleCaps& caps = {});

// JSON side-file mapping role labels to transformed vertex ids.
std::string roles_json(const ReductionInstance& inst);

} // namespace paireddom
