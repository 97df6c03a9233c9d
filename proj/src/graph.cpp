#include "paireddom/graph.hpp"

#include "paireddom/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>

namespace paireddom {

// ---- VertexSet ----------------------------------------------------------

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
{
    for (Vertex v : ids)
        insert(v);
}

VertexSet::VertexSet(std::span<const Vertex> ids)
{
    for (Vertex v : ids)
        insert(v);
}

VertexSet VertexSet::range(Vertex first, Vertex last)
{
    VertexSet s;
    for (Vertex v = first; v < last; ++v)
        s.insert(v);
    return s;
}

bool VertexSet::contains(Vertex v) const noexcept
{
    const std::size_t w = v / 64;
    return w < words_.size() && ((words_[w] >> (v % 64)) & 1U);
}

void VertexSet::insert(Vertex v)
{
    const std::size_t w = v / 64;
    if (w >= words_.size())
        words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) noexcept
{
    const std::size_t w = v / 64;
    if (w < words_.size()) {
        words_[w] &= ~(std::uint64_t{1} << (v % 64));
        trim();
    }
}

std::size_t VertexSet::size() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(__builtin_popcountll(w));
    return total;
}

Vertex VertexSet::bound() const noexcept
{
    if (words_.empty())
        return 0;
    const std::uint64_t top = words_.back();
    return static_cast<Vertex>((words_.size() - 1) * 64 + 64 - static_cast<std::size_t>(__builtin_clzll(top)));
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept
{
    if (words_.size() > other.words_.size())
        return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept
{
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    if (other.words_.size() > words_.size())
        words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    if (words_.size() > other.words_.size())
        words_.resize(other.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    trim();
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
        words_[i] &= ~other.words_[i];
    trim();
    return *this;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const
{
    // Lexicographic on ascending member lists. Let d be the smallest element
    // of the symmetric difference. If d belongs to *this, then *this sorts
    // first exactly when `other` still has an element above d (otherwise
    // `other` is a proper prefix).
    const std::size_t n = std::max(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t a = i < words_.size() ? words_[i] : 0;
        const std::uint64_t b = i < other.words_.size() ? other.words_[i] : 0;
        if (a == b)
            continue;
        const std::uint64_t diff = a ^ b;
        const std::uint64_t lowest = diff & (~diff + 1);
        const bool mine = (a & lowest) != 0;
        const auto& rest = mine ? other.words_ : words_;
        const std::uint64_t above = ~((lowest << 1) - 1);
        bool rest_has_more = i < rest.size() && (rest[i] & above) != 0;
        for (std::size_t j = i + 1; !rest_has_more && j < rest.size(); ++j)
            rest_has_more = rest[j] != 0;
        if (mine)
            return rest_has_more ? std::strong_ordering::less : std::strong_ordering::greater;
        return rest_has_more ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::size_t VertexSet::hash() const noexcept
{
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

std::string VertexSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for_each([&](Vertex v) {
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    });
    out += '}';
    return out;
}

void VertexSet::trim() noexcept
{
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

// ---- Graph --------------------------------------------------------------

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : adjacency_(n), neighbor_sets_(n)
{
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) + " outside vertex range 0.."
                              + std::to_string(n == 0 ? 0 : n - 1));
        if (u == v)
            throw DomainError("self-loop at vertex " + std::to_string(u));
        if (neighbor_sets_[u].contains(v))
            continue;
        neighbor_sets_[u].insert(v);
        neighbor_sets_[v].insert(u);
        ++edge_count_;
    }
    for (std::size_t v = 0; v < n; ++v)
        adjacency_[v] = neighbor_sets_[v].members();
}

VertexSet Graph::closed_neighborhood(Vertex v) const
{
    VertexSet s = neighbor_sets_.at(v);
    s.insert(v);
    return s;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const
{
    VertexSet out = s;
    s.for_each([&](Vertex v) { out |= neighbor_sets_.at(v); });
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool Graph::has_isolated_vertex() const
{
    return std::any_of(adjacency_.begin(), adjacency_.end(), [](const auto& a) { return a.empty(); });
}

std::size_t Graph::max_degree() const
{
    std::size_t d = 0;
    for (const auto& a : adjacency_)
        d = std::max(d, a.size());
    return d;
}

// ---- validation ---------------------------------------------------------

void require_vertex(const Graph& g, Vertex v)
{
    if (v >= g.order())
        throw DomainError("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(g.order()) + ")");
}

void require_within(const Graph& g, const VertexSet& s)
{
    if (s.bound() > g.order())
        throw DomainError("vertex " + std::to_string(s.bound() - 1) + " out of range (n=" + std::to_string(g.order())
                          + ")");
}

void require_connected_no_isolated(const Graph& g)
{
    if (g.order() < 2)
        throw DomainError("graph needs at least 2 vertices (a single vertex is isolated)");
    if (!is_connected(g))
        throw DisconnectedError("graph is disconnected");
}

// ---- parsing ------------------------------------------------------------

namespace {

    std::vector<std::string_view> split_tokens(std::string_view line)
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                out.push_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    }

    std::uint64_t parse_id(std::string_view tok, std::size_t line_no)
    {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError(line_no, "malformed token '" + std::string(tok) + "'");
        if (value > 0xFFFFFFFEULL)
            throw ParseError(line_no, "vertex id too large '" + std::string(tok) + "'");
        return value;
    }

} // namespace

Graph load_graph(std::string_view text)
{
    struct Line
    {
        std::size_t number;
        std::string_view first;
        std::string_view second;
    };

    // Collect content lines; "# n=<n>" comments pin the vertex count.
    std::vector<Line> lines;
    std::size_t declared_n = 0;
    std::size_t line_no = 0;
    for (std::size_t pos = 0; pos <= text.size();) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        const auto tokens = split_tokens(line);
        if (tokens.empty())
            continue;
        if (tokens.front().front() == '#') {
            for (auto tok : tokens)
                if (tok.starts_with("n="))
                    declared_n = std::max<std::size_t>(declared_n, parse_id(tok.substr(2), line_no));
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected two integers, got " + std::to_string(tokens.size()) + " tokens");
        lines.push_back({line_no, tokens[0], tokens[1]});
    }

    std::vector<Edge> edges;
    std::size_t max_id_plus_one = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> values;
    values.reserve(lines.size());
    for (const auto& l : lines)
        values.emplace_back(parse_id(l.first, l.number), parse_id(l.second, l.number));

    // An "n m" header is recognised when it is consistent with the body:
    // exactly m edge lines follow and every id is below n.
    std::size_t first_edge = 0;
    if (!values.empty() && values.front().first != values.front().second) {
        const auto [hn, hm] = values.front();
        std::uint64_t body_max = 0;
        for (std::size_t i = 1; i < values.size(); ++i)
            body_max = std::max({body_max, values[i].first + 1, values[i].second + 1});
        if (hm == values.size() - 1 && hm > 0 && hn >= body_max) {
            declared_n = std::max<std::size_t>(declared_n, hn);
            first_edge = 1;
        }
    }
    for (std::size_t i = first_edge; i < values.size(); ++i) {
        const auto [a, b] = values[i];
        if (a == b)
            throw SelfLoopError(lines[i].number, "self-loop at vertex " + std::to_string(a));
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(a, b) + 1);
    }
    return Graph(std::max(declared_n, max_id_plus_one), edges);
}

Graph load_graph_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

std::string serialize(const Graph& g)
{
    std::ostringstream out;
    out << "# n=" << g.order() << " m=" << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

// ---- traversal ----------------------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    require_within(g, s);
    InducedSubgraph out;
    out.to_original = s.members();
    out.to_induced.assign(g.order(), -1);
    for (std::size_t i = 0; i < out.to_original.size(); ++i)
        out.to_induced[out.to_original[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.to_original.size(); ++i) {
        const Vertex u = out.to_original[i];
        for (Vertex w : g.neighbors(u))
            if (w > u && s.contains(w))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(out.to_induced[w]));
    }
    out.graph = Graph(out.to_original.size(), edges);
    return out;
}

LevelStructure bfs_levels(const Graph& g, Vertex root)
{
    require_vertex(g, root);
    LevelStructure ls;
    ls.root = root;
    ls.level_of.assign(g.order(), -1);
    ls.level_of[root] = 0;
    ls.levels.push_back(VertexSet{root});

    std::vector<Vertex> frontier{root};
    while (!frontier.empty()) {
        std::vector<Vertex> next;
        const int depth = static_cast<int>(ls.levels.size());
        for (Vertex u : frontier)
            for (Vertex w : g.neighbors(u))
                if (ls.level_of[w] < 0) {
                    ls.level_of[w] = depth;
                    next.push_back(w);
                }
        if (next.empty())
            break;
        ls.levels.emplace_back(std::span<const Vertex>(next));
        frontier = std::move(next);
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (ls.level_of[v] < 0)
            ls.unreachable.insert(v);
    return ls;
}

Path shortest_path(const Graph& g, Vertex x, Vertex y)
{
    require_vertex(g, x);
    require_vertex(g, y);
    constexpr Vertex none = ~Vertex{0};
    std::vector<Vertex> parent(g.order(), none);
    std::vector<bool> seen(g.order(), false);
    std::deque<Vertex> queue{x};
    seen[x] = true;
    while (!queue.empty() && !seen[y]) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
    }
    if (!seen[y])
        throw NoPathError("no path between " + std::to_string(x) + " and " + std::to_string(y));
    Path p;
    for (Vertex v = y; v != x; v = parent[v])
        p.vertices.push_back(v);
    p.vertices.push_back(x);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

std::vector<int> component_labels(const Graph& g, const VertexSet& removed)
{
    std::vector<int> label(g.order(), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[s] >= 0 || removed.contains(s))
            continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (label[w] < 0 && !removed.contains(w)) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    const auto labels = component_labels(g, {});
    return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
}

} // namespace paireddom
