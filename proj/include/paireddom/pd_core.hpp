#pragma once

#include "paireddom/graph.hpp"
#include "paireddom/matching.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paireddom {

/// A paired dominating set together with a perfect matching of G[set].
/// The constructor enforces that `pairing` covers exactly `set` (hence the
/// size is even); domination is established by the factory that builds it.
class PDCertificate
{
public:
    PDCertificate(VertexSet set, Matching pairing);

    const VertexSet& set() const noexcept { return set_; }
    const Matching& pairing() const noexcept { return pairing_; }
    std::size_t size() const noexcept { return size_; }

private:
    VertexSet set_;
    Matching pairing_;
    std::size_t size_;
};

enum class PdRejection
{
    NotDominating,
    OddSize,
    NoPerfectMatching,
};

std::string_view to_string(PdRejection r);

struct PdCheck
{
    std::optional<PDCertificate> certificate;
    std::optional<PdRejection> reason;
    std::optional<Vertex> undominated; // first undominated vertex, for NotDominating

    explicit operator bool() const noexcept { return certificate.has_value(); }
};

/// Oracle size limits. Exceeding them is refused rather than attempted.
struct OracleCaps
{
    std::size_t pd_max_vertices = 16;
    std::size_t vc_max_vertices = 20;

    // Parses "pd=<n>,vc=<n>" (either key optional). Throws DomainError.
    static OracleCaps parse(std::string_view text);
    // Reads PAIREDDOM_CAPS, falling back to the defaults.
    static OracleCaps from_env();
};

bool is_dominating_set(const Graph& g, const VertexSet& d);
PdCheck is_pd_set(const Graph& g, const VertexSet& d);

// Certifies an explicit pairing; throws DiscrepancyError if it is not a PD-set.
PDCertificate certify_pd_set(const Graph& g, const VertexSet& d, const Matching& pairing);

PDCertificate min_pd_brute(const Graph& g, const OracleCaps& caps = {});
std::vector<PDCertificate> enumerate_min_pd_sets(const Graph& g, const OracleCaps& caps = {});
VertexSet min_vc_brute(const Graph& g, const OracleCaps& caps = {});

bool is_vertex_cover(const Graph& g, const VertexSet& c);

/// Calls f(members) for every k-subset of {0..n-1} in lexicographic order;
/// stops early when f returns true. Returns whether it stopped early.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f)
{
    if (k > n)
        return false;
    std::vector<Vertex> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = static_cast<Vertex>(i);
    for (;;) {
        if (f(static_cast<const std::vector<Vertex>&>(idx)))
            return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace paireddom
