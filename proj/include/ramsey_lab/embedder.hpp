#ifndef RAMSEY_LAB_EMBEDDER_HPP
#define RAMSEY_LAB_EMBEDDER_HPP

// Monochromatic loose path/cycle embeddings: complete backtracking search,
// copy enumeration in the complete host, independent verification, and the
// one-step maximality predicate for red paths.

#include <ramsey_lab/coloring.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ramsey_lab {

enum class ColorClaim { red, blue, any };

inline auto claim_of(Color c) -> ColorClaim { return c == Color::red ? ColorClaim::red : ColorClaim::blue; }

inline auto to_string(ColorClaim c) -> std::string
{
    switch (c) {
        case ColorClaim::red: return "red";
        case ColorClaim::blue: return "blue";
        case ColorClaim::any: return "any";
    }
    return "any";
}

/// Template vertex j (1-based) is sent to assignment[j-1].
struct Embedding {
    LooseTemplate shape;
    std::vector<Vertex> assignment;
    ColorClaim claimed_color = ColorClaim::any;

    [[nodiscard]] auto image(int j) const -> Vertex { return assignment.at(static_cast<std::size_t>(j - 1)); }

    /// Host edge realizing template edge i.
    [[nodiscard]] auto host_edge(int i) const -> Edge
    {
        std::vector<Vertex> vs;
        for (int p : shape.edge_walk(i))
            vs.push_back(image(p));
        return Edge(std::move(vs));
    }

    /// Host vertices of template edge i in walk order (first, interior..., last).
    [[nodiscard]] auto host_walk(int i) const -> std::vector<Vertex>
    {
        std::vector<Vertex> vs;
        for (int p : shape.edge_walk(i))
            vs.push_back(image(p));
        return vs;
    }

    [[nodiscard]] auto host_edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (int i = 1; i <= shape.length(); ++i)
            result.push_back(host_edge(i));
        return result;
    }

    [[nodiscard]] auto vertex_set() const -> std::vector<Vertex>
    {
        auto vs = assignment;
        std::sort(vs.begin(), vs.end());
        return vs;
    }
};

enum class SearchStatus { found, absent, unknown };

inline auto to_string(SearchStatus s) -> std::string
{
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::absent: return "absent";
        case SearchStatus::unknown: return "unknown";
    }
    return "unknown";
}

struct SearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<Embedding> embedding;
    std::uint64_t nodes = 0;
};

/// Partial assignment: template vertex j (1-based) -> host vertex.
using FixedAssignment = std::vector<std::pair<int, Vertex>>;

namespace detail {

    /// Edge-by-edge backtracking over a loose template. Each template edge is
    /// anchored on the connector shared with the previous edge; free vertices
    /// are tried in ascending label order. Degree-one template vertices of the
    /// same edge are interchangeable, so unfixed ones are kept ascending.
    class TemplateSearch {
    public:
        using Visitor = std::function<bool(const std::vector<Vertex> &)>;

        TemplateSearch(int n_vertices, const LooseTemplate & t, const TwoColoring * coloring, ColorClaim color,
                const FixedAssignment & fixed, std::uint64_t node_budget) :
            _n(n_vertices), _t(t), _coloring(coloring), _color(color), _budget(node_budget),
            _image(static_cast<std::size_t>(t.vertex_count()), 0),
            _used(static_cast<std::size_t>(n_vertices) + 1, false),
            _fixed(static_cast<std::size_t>(t.vertex_count()), false)
        {
            for (auto [j, v] : fixed) {
                require(j >= 1 && j <= t.vertex_count(), ErrorKind::malformed_assignment,
                        "fixed template vertex " + std::to_string(j) + " out of range");
                require(v >= 1 && v <= n_vertices, ErrorKind::malformed_assignment,
                        "fixed host vertex " + std::to_string(v) + " out of range");
                auto idx = static_cast<std::size_t>(j - 1);
                require(! _fixed[idx] || _image[idx] == v, ErrorKind::malformed_assignment,
                        "template vertex fixed twice");
                require(_fixed[idx] || ! _used[static_cast<std::size_t>(v)], ErrorKind::malformed_assignment,
                        "fixed assignment is not injective");
                _fixed[idx] = true;
                _image[idx] = v;
                _used[static_cast<std::size_t>(v)] = true;
            }
            build_slots();
        }

        /// Visits complete embeddings until the visitor returns false.
        /// Returns false if the node budget ran out.
        auto run(const Visitor & visit) -> bool
        {
            _visit = &visit;
            _stopped = false;
            _exhausted = false;
            if (_t.vertex_count() <= _n)
                extend(0, 0);
            return ! _exhausted;
        }

        [[nodiscard]] auto nodes() const noexcept -> std::uint64_t { return _nodes; }

    private:
        struct Slot {
            int position;      // 0-based template vertex
            int ascend_after;  // slot index whose image must be smaller, or -1
        };

        void build_slots()
        {
            int n = _t.length();
            int k = _t.k();
            std::vector<bool> seen(static_cast<std::size_t>(_t.vertex_count()), false);
            auto degree_one = [&](int edge, int walk_index) {
                if (walk_index > 0 && walk_index < k - 1)
                    return true;
                if (_t.is_cycle())
                    return false;
                return (edge == 1 && walk_index == 0) || (edge == n && walk_index == k - 1);
            };
            for (int i = 1; i <= n; ++i) {
                std::vector<Slot> slots;
                int previous_free_degree_one = -1;
                auto walk = _t.edge_walk(i);
                for (int w = 0; w < k; ++w) {
                    auto pos = walk[static_cast<std::size_t>(w)] - 1;
                    if (seen[static_cast<std::size_t>(pos)])
                        continue;
                    seen[static_cast<std::size_t>(pos)] = true;
                    if (_fixed[static_cast<std::size_t>(pos)])
                        continue;
                    Slot s{pos, -1};
                    if (degree_one(i, w)) {
                        s.ascend_after = previous_free_degree_one;
                        previous_free_degree_one = static_cast<int>(slots.size());
                    }
                    slots.push_back(s);
                }
                _slots.push_back(std::move(slots));
                _walks.push_back(std::move(walk));
            }
        }

        auto edge_ok(int edge_index) const -> bool
        {
            if (! _coloring || _color == ColorClaim::any)
                return true;
            std::array<Vertex, 16> buf{};
            const auto & walk = _walks[static_cast<std::size_t>(edge_index)];
            for (std::size_t w = 0; w < walk.size(); ++w)
                buf[w] = _image[static_cast<std::size_t>(walk[w] - 1)];
            std::sort(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(walk.size()));
            auto red = _coloring->is_red_at(edge_rank(std::span<const Vertex>(buf.data(), walk.size())));
            return red == (_color == ColorClaim::red);
        }

        void extend(int edge_index, int slot_index)
        {
            if (_stopped || _exhausted)
                return;
            if (edge_index == _t.length()) {
                if (! (*_visit)(_image))
                    _stopped = true;
                return;
            }
            const auto & slots = _slots[static_cast<std::size_t>(edge_index)];
            if (slot_index == static_cast<int>(slots.size())) {
                if (edge_ok(edge_index))
                    extend(edge_index + 1, 0);
                return;
            }
            const auto & slot = slots[static_cast<std::size_t>(slot_index)];
            Vertex lowest = 1;
            if (slot.ascend_after >= 0)
                lowest = _image[static_cast<std::size_t>(slots[static_cast<std::size_t>(slot.ascend_after)].position)] + 1;
            for (Vertex v = lowest; v <= _n; ++v) {
                if (_used[static_cast<std::size_t>(v)])
                    continue;
                if (_budget && ++_nodes > _budget) {
                    _exhausted = true;
                    return;
                }
                else if (! _budget)
                    ++_nodes;
                _used[static_cast<std::size_t>(v)] = true;
                _image[static_cast<std::size_t>(slot.position)] = v;
                extend(edge_index, slot_index + 1);
                _image[static_cast<std::size_t>(slot.position)] = 0;
                _used[static_cast<std::size_t>(v)] = false;
                if (_stopped || _exhausted)
                    return;
            }
        }

        int _n;
        LooseTemplate _t;
        const TwoColoring * _coloring;
        ColorClaim _color;
        std::uint64_t _budget;
        std::uint64_t _nodes = 0;
        bool _stopped = false;
        bool _exhausted = false;
        const Visitor * _visit = nullptr;
        std::vector<Vertex> _image;
        std::vector<bool> _used;
        std::vector<bool> _fixed;
        std::vector<std::vector<Slot>> _slots;
        std::vector<std::vector<int>> _walks;
    };

} // namespace detail

/// Calls f(rank, vertices) for every k-subset of 1..N.
template <typename F>
void for_each_k_subset(int n_vertices, int k, F && f)
{
    if (k > n_vertices || k < 1)
        return;
    std::vector<Vertex> current(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        current[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        f(edge_rank(current), std::span<const Vertex>(current));
        int i = k - 1;
        while (i >= 0 && current[static_cast<std::size_t>(i)] == n_vertices - k + i + 1)
            --i;
        if (i < 0)
            return;
        ++current[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// Sound absence test for a monochromatic copy of t: the color class must
/// touch at least |V(t)| vertices, and since each vertex of a loose structure
/// lies in at most two of its edges, any vertex cover of the color class
/// needs at least ceil(length/2) vertices.
inline auto color_class_too_small(const TwoColoring & c, Color color, const LooseTemplate & t) -> bool
{
    int n = c.n_vertices();
    int k = c.k();
    std::vector<std::vector<Rank>> incident(static_cast<std::size_t>(n) + 1);
    std::vector<Edge> edges;
    std::vector<Rank> ranks;
    for_each_k_subset(n, k, [&](Rank r, std::span<const Vertex> vs) {
        if (c.color_at(r) != color)
            return;
        ranks.push_back(r);
        for (auto v : vs)
            incident[static_cast<std::size_t>(v)].push_back(static_cast<Rank>(edges.size()));
        edges.emplace_back(std::vector<Vertex>(vs.begin(), vs.end()));
    });
    int active = 0;
    for (Vertex v = 1; v <= n; ++v)
        active += ! incident[static_cast<std::size_t>(v)].empty();
    if (active < t.vertex_count())
        return true;

    // greedy cover, abandoned once it reaches the bound
    int bound = (t.length() + 1) / 2;
    std::vector<bool> covered(edges.size(), false);
    std::size_t uncovered = edges.size();
    int cover_size = 0;
    while (uncovered > 0) {
        if (++cover_size >= bound)
            return false;
        Vertex best = 0;
        std::size_t best_degree = 0;
        for (Vertex v = 1; v <= n; ++v) {
            std::size_t degree = 0;
            for (auto idx : incident[static_cast<std::size_t>(v)])
                degree += ! covered[static_cast<std::size_t>(idx)];
            if (degree > best_degree) {
                best_degree = degree;
                best = v;
            }
        }
        for (auto idx : incident[static_cast<std::size_t>(best)])
            if (! covered[static_cast<std::size_t>(idx)]) {
                covered[static_cast<std::size_t>(idx)] = true;
                --uncovered;
            }
    }
    return true;
}

/// Complete search for a `color` copy of t extending `fixed`. A node budget of
/// zero means unlimited; running out yields SearchStatus::unknown, never absent.
inline auto search_embedding(const TwoColoring & c, Color color, const LooseTemplate & t,
        const FixedAssignment & fixed = {}, std::uint64_t node_budget = 0) -> SearchResult
{
    require(t.k() == c.k(), ErrorKind::incompatible_uniformity,
            "template uniformity " + std::to_string(t.k()) + " differs from coloring uniformity " + std::to_string(c.k()));
    SearchResult result;
    if (t.vertex_count() > c.n_vertices() || color_class_too_small(c, color, t)) {
        result.status = SearchStatus::absent;
        return result;
    }
    detail::TemplateSearch search(c.n_vertices(), t, &c, claim_of(color), fixed, node_budget);
    bool complete = search.run([&](const std::vector<Vertex> & image) {
        result.embedding = Embedding{t, image, claim_of(color)};
        return false;
    });
    result.nodes = search.nodes();
    if (result.embedding)
        result.status = SearchStatus::found;
    else
        result.status = complete ? SearchStatus::absent : SearchStatus::unknown;
    return result;
}

inline auto find_embedding(const TwoColoring & c, Color color, const LooseTemplate & t,
        const FixedAssignment & fixed = {}) -> std::optional<Embedding>
{
    return search_embedding(c, color, t, fixed).embedding;
}

/// Visits every embedding of t whose edges all have `color` (or any color),
/// up to the interchange of degree-one vertices within an edge. Stop by
/// returning false from the visitor.
inline void for_each_embedding(const TwoColoring & c, ColorClaim color, const LooseTemplate & t,
        const std::function<bool(const Embedding &)> & visit)
{
    require(t.k() == c.k(), ErrorKind::incompatible_uniformity, "template uniformity differs from coloring");
    detail::TemplateSearch search(c.n_vertices(), t, &c, color, {}, 0);
    search.run([&](const std::vector<Vertex> & image) { return visit(Embedding{t, image, color}); });
}

/// Every copy of t in the complete host K^k_N, each as its sorted edge-rank list.
inline auto enumerate_copies(int n_vertices, int k, const LooseTemplate & t) -> std::vector<std::vector<Rank>>
{
    require(t.k() == k, ErrorKind::incompatible_uniformity, "template uniformity differs from host");
    require(n_vertices >= 0 && n_vertices <= max_host_size, ErrorKind::invalid_parameter, "host size out of range");
    std::set<std::vector<Rank>> copies;
    if (t.vertex_count() > n_vertices)
        return {};
    detail::TemplateSearch search(n_vertices, t, nullptr, ColorClaim::any, {}, 0);
    std::vector<Rank> ranks;
    search.run([&](const std::vector<Vertex> & image) {
        ranks.clear();
        for (int i = 1; i <= t.length(); ++i) {
            std::array<Vertex, 16> buf{};
            auto walk = t.edge_walk(i);
            for (std::size_t w = 0; w < walk.size(); ++w)
                buf[w] = image[static_cast<std::size_t>(walk[w] - 1)];
            std::sort(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(walk.size()));
            ranks.push_back(edge_rank(std::span<const Vertex>(buf.data(), walk.size())));
        }
        std::sort(ranks.begin(), ranks.end());
        copies.insert(ranks);
        return true;
    });
    return {copies.begin(), copies.end()};
}

/// Number of edge-set-distinct copies of t in K^k_N.
inline auto count_copies(int n_vertices, int k, const LooseTemplate & t) -> std::uint64_t
{
    require(t.vertex_count() <= n_vertices, ErrorKind::invalid_parameter,
            "template " + t.name() + " needs " + std::to_string(t.vertex_count()) + " vertices");
    return enumerate_copies(n_vertices, k, t).size();
}

struct Verdict {
    bool ok = true;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }

    static auto accept() -> Verdict { return {true, {}}; }
    static auto reject(std::string why) -> Verdict { return {false, std::move(why)}; }
};

/// Checks that a host edge sequence forms a loose path (or cycle): consecutive
/// edges meet in exactly one vertex, all other pairs are disjoint, and for
/// paths/cycles the shared vertices are distinct.
inline auto check_loose_pattern(const std::vector<Edge> & edges, bool cyclic) -> Verdict
{
    auto n = edges.size();
    if (n == 0)
        return Verdict::reject("empty");
    if (cyclic && n < 3)
        return Verdict::reject("cycle-too-short");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            bool adjacent = (b == a + 1) || (cyclic && a == 0 && b == n - 1);
            int common = intersection_size(edges[a], edges[b]);
            if (adjacent && common != 1)
                return Verdict::reject("bad-intersection: edges " + std::to_string(a + 1) + " and "
                        + std::to_string(b + 1) + " share " + std::to_string(common) + " vertices");
            if (! adjacent && common != 0)
                return Verdict::reject("bad-intersection: non-consecutive edges " + std::to_string(a + 1) + " and "
                        + std::to_string(b + 1) + " meet");
        }
    return Verdict::accept();
}

/// Independent checker: injectivity, range, loose intersection pattern and
/// per-edge color. Never throws on malformed input.
inline auto verify_embedding(const TwoColoring & c, const Embedding & e) -> Verdict
{
    const auto & t = e.shape;
    if (t.k() != c.k())
        return Verdict::reject("uniformity-mismatch");
    if (static_cast<int>(e.assignment.size()) != t.vertex_count())
        return Verdict::reject("wrong-assignment-size");
    std::vector<bool> used(static_cast<std::size_t>(c.n_vertices()) + 1, false);
    for (auto v : e.assignment) {
        if (v < 1 || v > c.n_vertices())
            return Verdict::reject("out-of-range: vertex " + std::to_string(v));
        if (used[static_cast<std::size_t>(v)])
            return Verdict::reject("not-injective: vertex " + std::to_string(v) + " repeated");
        used[static_cast<std::size_t>(v)] = true;
    }
    auto edges = e.host_edges();
    if (auto pattern = check_loose_pattern(edges, t.is_cycle()); ! pattern)
        return pattern;
    if (e.claimed_color != ColorClaim::any)
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto want = e.claimed_color == ColorClaim::red ? Color::red : Color::blue;
            if (c.color(edges[i]) != want)
                return Verdict::reject("edge-color-mismatch: edge " + to_string(edges[i]) + " is "
                        + to_string(c.color(edges[i])));
        }
    return Verdict::accept();
}

/// Recovers an embedding from an ordered host edge sequence forming a loose
/// path or cycle. For paths the free end vertices take the smallest labels.
inline auto embedding_from_edges(const std::vector<Edge> & edges, bool cyclic, ColorClaim color) -> std::optional<Embedding>
{
    if (edges.empty() || ! check_loose_pattern(edges, cyclic))
        return std::nullopt;
    int k = static_cast<int>(edges.front().size());
    int n = static_cast<int>(edges.size());
    for (const auto & e : edges)
        if (static_cast<int>(e.size()) != k)
            return std::nullopt;
    if (k < 3)
        return std::nullopt;
    auto shared = [&](int a, int b) {
        for (auto v : edges[static_cast<std::size_t>(a)])
            if (edges[static_cast<std::size_t>(b)].contains(v))
                return v;
        return Vertex{0};
    };
    auto t = cyclic ? LooseTemplate::cycle(k, n) : LooseTemplate::path(k, n);
    std::vector<Vertex> assignment(static_cast<std::size_t>(t.vertex_count()), 0);
    for (int i = 0; i < n; ++i) {
        const auto & e = edges[static_cast<std::size_t>(i)];
        Vertex first = 0;
        Vertex last = 0;
        if (i > 0)
            first = shared(i - 1, i);
        else if (cyclic)
            first = shared(n - 1, 0);
        if (i + 1 < n)
            last = shared(i, i + 1);
        else if (cyclic)
            last = shared(n - 1, 0);
        std::vector<Vertex> rest;
        for (auto v : e)
            if (v != first && v != last)
                rest.push_back(v);
        if (first == 0) {
            first = rest.front();
            rest.erase(rest.begin());
        }
        if (last == 0) {
            last = rest.back();
            rest.pop_back();
        }
        auto walk = t.edge_walk(i + 1);
        assignment[static_cast<std::size_t>(walk.front() - 1)] = first;
        assignment[static_cast<std::size_t>(walk.back() - 1)] = last;
        for (std::size_t w = 1; w + 1 < walk.size(); ++w)
            assignment[static_cast<std::size_t>(walk[w] - 1)] = rest[w - 1];
    }
    return Embedding{t, std::move(assignment), color};
}

/// A red loose path together with a set W of outside vertices.
struct MaximalityQuery {
    Embedding path;
    std::vector<Vertex> outside;
};

namespace detail {

    /// Is there a red loose path with `edges` edges using exactly the vertex
    /// set `pool` (sorted), starting at `start` and ending at `finish`?
    inline auto red_segment_exists(const TwoColoring & c, Vertex start, Vertex finish,
            std::vector<Vertex> pool, int edges) -> bool
    {
        int k = c.k();
        // pool holds the vertices still to be covered, excluding `start`
        std::function<bool(Vertex, std::vector<Vertex> &, int)> grow =
            [&](Vertex connector, std::vector<Vertex> & remaining, int left) -> bool {
            if (left == 1) {
                if (static_cast<int>(remaining.size()) != k - 1
                        || std::find(remaining.begin(), remaining.end(), finish) == remaining.end())
                    return false;
                auto vs = remaining;
                vs.push_back(connector);
                return c.is_red(Edge(std::move(vs)));
            }
            if (static_cast<int>(remaining.size()) != left * (k - 1))
                return false;
            // choose next connector, then k-2 interior vertices, none equal to finish
            std::vector<Vertex> candidates;
            for (auto v : remaining)
                if (v != finish)
                    candidates.push_back(v);
            for (auto next : candidates) {
                std::vector<Vertex> others;
                for (auto v : candidates)
                    if (v != next)
                        others.push_back(v);
                int need = k - 2;
                if (static_cast<int>(others.size()) < need)
                    continue;
                std::vector<bool> pick(others.size(), false);
                std::fill(pick.begin(), pick.begin() + need, true);
                do {
                    std::vector<Vertex> edge{connector, next};
                    for (std::size_t x = 0; x < others.size(); ++x)
                        if (pick[x])
                            edge.push_back(others[x]);
                    if (! c.is_red(Edge(edge)))
                        continue;
                    std::vector<Vertex> rest;
                    for (auto v : remaining)
                        if (std::find(edge.begin(), edge.end(), v) == edge.end())
                            rest.push_back(v);
                    if (grow(next, rest, left - 1))
                        return true;
                } while (std::prev_permutation(pick.begin(), pick.end()));
            }
            return false;
        };
        pool.erase(std::remove(pool.begin(), pool.end(), start), pool.end());
        return grow(start, pool, edges);
    }

} // namespace detail

/// One-step maximality of a red loose path P = e_1..e_n with respect to W:
/// true iff no W' subset of W, segment e_i..e_{i+r-1} (1 <= r <= n) and red
/// replacement e'_i..e'_{i+r} exist such that the result is a red loose path
/// with n+1 edges on V(P) u W' keeping the path's end vertices. The vertex
/// count forces |W'| = k-1 and pins the replacement to the segment's own
/// first and last vertices.
inline auto is_maximal_wrt(const TwoColoring & c, const MaximalityQuery & q) -> bool
{
    const auto & p = q.path;
    require(! p.shape.is_cycle(), ErrorKind::precondition_violation, "maximality is defined for paths");
    auto check = verify_embedding(c, Embedding{p.shape, p.assignment, ColorClaim::red});
    require(check.ok, ErrorKind::precondition_violation, "path is not a red loose path: " + check.reason);
    std::vector<Vertex> outside = q.outside;
    std::sort(outside.begin(), outside.end());
    require(std::adjacent_find(outside.begin(), outside.end()) == outside.end(),
            ErrorKind::precondition_violation, "W has repeated vertices");
    for (auto w : outside) {
        require(w >= 1 && w <= c.n_vertices(), ErrorKind::precondition_violation, "W leaves the host");
        require(std::find(p.assignment.begin(), p.assignment.end(), w) == p.assignment.end(),
                ErrorKind::precondition_violation, "W overlaps the path");
    }
    int k = c.k();
    int n = p.shape.length();
    if (static_cast<int>(outside.size()) < k - 1)
        return true;

    std::vector<bool> pick(outside.size(), false);
    std::fill(pick.begin(), pick.begin() + (k - 1), true);
    do {
        std::vector<Vertex> extra;
        for (std::size_t x = 0; x < outside.size(); ++x)
            if (pick[x])
                extra.push_back(outside[x]);
        for (int r = 1; r <= n; ++r)
            for (int i = 1; i + r - 1 <= n; ++i) {
                // segment e_i..e_{i+r-1} spans template vertices (i-1)(k-1)+1 .. (i+r-1)(k-1)+1
                int lo = (i - 1) * (k - 1) + 1;
                int hi = (i + r - 1) * (k - 1) + 1;
                std::vector<Vertex> pool = extra;
                for (int j = lo; j <= hi; ++j)
                    pool.push_back(p.image(j));
                std::sort(pool.begin(), pool.end());
                if (detail::red_segment_exists(c, p.image(lo), p.image(hi), pool, r + 1))
                    return false;
            }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return true;
}

} // namespace ramsey_lab

#endif
