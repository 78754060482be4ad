#ifndef RAMSEY_LAB_CONSTRUCTIVE_HPP
#define RAMSEY_LAB_CONSTRUCTIVE_HPP

// Constructive proof steps as executable procedures. Each one builds the
// structure the argument exhibits, checks it against the coloring, and falls
// back to complete search only where the statement guarantees existence. A
// failed search is a proof-gap, never a silent success.

#include <ramsey_lab/embedder.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ramsey_lab {

struct ConstructiveOptions {
    bool check_hypotheses = true;
    std::uint64_t hypothesis_budget = 200000; // search nodes per global check
};

/// Raised when an edge the construction needs red turns out blue.
class BlueEdgeEncountered : public Error {
public:
    explicit BlueEdgeEncountered(Edge edge) :
        Error(ErrorKind::blue_edge_encountered, "edge " + to_string(edge) + " is blue"), _edge(std::move(edge))
    {
    }

    [[nodiscard]] auto edge() const -> const Edge & { return _edge; }

private:
    Edge _edge;
};

namespace detail {

    inline auto describe(const TwoColoring & c) -> std::string
    {
        std::ostringstream out;
        out << "k=" << c.k() << " N=" << c.n_vertices() << " bits=" << to_hex(c);
        return out.str();
    }

    [[noreturn]] inline void proof_gap(const TwoColoring & c, const std::string & what)
    {
        fail(ErrorKind::proof_gap, what + " [instance " + describe(c) + "]");
    }

    /// e minus `out` plus `in`, or nothing if the result is not a k-set.
    inline auto swap_vertices(const Edge & e, const std::vector<Vertex> & out, const std::vector<Vertex> & in)
        -> std::optional<Edge>
    {
        std::vector<Vertex> vs;
        for (auto v : e)
            if (std::find(out.begin(), out.end(), v) == out.end())
                vs.push_back(v);
        for (auto v : in)
            vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end() || vs.size() != e.size())
            return std::nullopt;
        return Edge(std::move(vs));
    }

    inline auto contains(const std::vector<Vertex> & vs, Vertex v) -> bool
    {
        return std::find(vs.begin(), vs.end(), v) != vs.end();
    }

    inline auto outside_of(const TwoColoring & c, const std::vector<Vertex> & used) -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for (Vertex v = 1; v <= c.n_vertices(); ++v)
            if (! contains(used, v))
                out.push_back(v);
        return out;
    }

    /// Verified embedding of an ordered edge sequence, if it is one.
    inline auto checked_structure(const TwoColoring & c, const std::vector<Edge> & edges, bool cyclic, Color color)
        -> std::optional<Embedding>
    {
        auto e = embedding_from_edges(edges, cyclic, claim_of(color));
        if (e && verify_embedding(c, *e))
            return e;
        return std::nullopt;
    }

    /// Budgeted presence test used for global hypotheses: true = present,
    /// false = absent, nullopt = budget exhausted.
    inline auto has_copy(const TwoColoring & c, Color color, const LooseTemplate & t, std::uint64_t budget)
        -> std::optional<bool>
    {
        auto r = search_embedding(c, color, t, {}, budget);
        if (r.status == SearchStatus::unknown)
            return std::nullopt;
        return r.status == SearchStatus::found;
    }

} // namespace detail

// ---------------------------------------------------------------------------
// Good configurations (k = 3)

/// Blue loose path {x,a1,a2}{a2,a3,y} with ends x, y in W and support S =
/// {a1,a2,a3} near edges e_i, e_{i+1} of the red path.
struct GoodConfiguration {
    Vertex x = 0;
    Vertex a1 = 0;
    Vertex a2 = 0;
    Vertex a3 = 0;
    Vertex y = 0;
    int anchor = 0;
    Vertex avoided_vertex = 0;
    int branch = 0;                 // which case of the argument produced it
    std::optional<Vertex> excluded; // the W vertex that cannot serve as an end

    [[nodiscard]] auto support() const -> std::vector<Vertex> { return {a1, a2, a3}; }
    [[nodiscard]] auto first_edge() const -> Edge { return Edge{x, a1, a2}; }
    [[nodiscard]] auto second_edge() const -> Edge { return Edge{a2, a3, y}; }

    [[nodiscard]] auto embedding() const -> Embedding
    {
        return {LooseTemplate::path(3, 2), {x, a1, a2, a3, y}, ColorClaim::blue};
    }

    [[nodiscard]] auto reversed() const -> GoodConfiguration
    {
        auto r = *this;
        std::swap(r.x, r.y);
        std::swap(r.a1, r.a3);
        return r;
    }
};

/// End-vertex constraints for chaining: if `attach` is non-empty one end must
/// lie in it and the other outside it; if `ends` is non-empty both must lie in it.
struct EndConstraint {
    std::vector<Vertex> attach;
    std::vector<Vertex> ends;

    [[nodiscard]] auto allows(Vertex x, Vertex y) const -> bool
    {
        if (! ends.empty() && (! detail::contains(ends, x) || ! detail::contains(ends, y)))
            return false;
        if (attach.empty())
            return true;
        return detail::contains(attach, x) != detail::contains(attach, y);
    }
};

namespace detail {

    inline auto a_set(const Embedding & p, int i) -> std::vector<Vertex>
    {
        if (i == 1)
            return {p.image(1)};
        return {p.image(2 * i - 2), p.image(2 * i - 1)};
    }

    inline void check_red_path_k3(const TwoColoring & c, const Embedding & p, const std::vector<Vertex> & w)
    {
        require(c.k() == 3 && p.shape.k() == 3, ErrorKind::invalid_parameter, "configurations are defined for k = 3");
        require(! p.shape.is_cycle(), ErrorKind::invalid_parameter, "P must be a path");
        auto check = verify_embedding(c, Embedding{p.shape, p.assignment, ColorClaim::red});
        require(check.ok, ErrorKind::hypothesis_violation, "P is not a red loose path: " + check.reason);
        for (auto v : w)
            require(v >= 1 && v <= c.n_vertices() && ! contains(p.assignment, v), ErrorKind::hypothesis_violation,
                    "W must lie outside V(P)");
        auto sorted = w;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorKind::hypothesis_violation,
                "W has repeated vertices");
    }

} // namespace detail

/// Independent validator for a configuration anchored at (e_i, e_{i+1}).
inline auto validate_configuration(const TwoColoring & c, const Embedding & p, const std::vector<Vertex> & w, Vertex u,
        const GoodConfiguration & g) -> Verdict
{
    int i = g.anchor;
    int n = p.shape.length();
    if (i < 1 || i >= n)
        return Verdict::reject("anchor out of range");
    if (auto v = verify_embedding(c, g.embedding()); ! v)
        return v;
    if (g.x == g.y || ! detail::contains(w, g.x) || ! detail::contains(w, g.y))
        return Verdict::reject("end vertices must be distinct members of W");
    auto a = detail::a_set(p, i);
    if (! detail::contains(a, u))
        return Verdict::reject("u is not in A_i");
    std::vector<Vertex> next_new{p.image(2 * i + 2), p.image(2 * i + 3)};
    if (! detail::contains(next_new, g.avoided_vertex))
        return Verdict::reject("avoided vertex is not in e_{i+1} minus e_i");
    std::vector<Vertex> allowed{u, p.image(2 * i), p.image(2 * i + 1), p.image(2 * i + 2), p.image(2 * i + 3)};
    for (auto s : g.support()) {
        if (s == g.avoided_vertex)
            return Verdict::reject("support contains the avoided vertex");
        if (! detail::contains(allowed, s))
            return Verdict::reject("support vertex " + std::to_string(s) + " outside the allowed window");
    }
    if (i >= 2) {
        std::vector<Vertex> prev{p.image(2 * i - 2), p.image(2 * i - 1)};
        int meet = 0;
        for (auto s : g.support())
            meet += detail::contains(prev, s);
        if (meet > 1)
            return Verdict::reject("support meets e_{i-1} in more than one vertex");
    }
    return Verdict::accept();
}

/// Blue configuration near e_i, e_{i+1} of a red loose path P maximal w.r.t.
/// W, following the four cases of the argument in order.
inline auto find_good_configuration(const TwoColoring & c, const Embedding & p, const std::vector<Vertex> & w, int i,
        Vertex u, const EndConstraint & constraint = {}, const ConstructiveOptions & options = {}) -> GoodConfiguration
{
    detail::check_red_path_k3(c, p, w);
    int n = p.shape.length();
    require(i >= 1 && i <= n - 1, ErrorKind::invalid_parameter, "need 1 <= i <= n-1");
    require(w.size() >= 3, ErrorKind::hypothesis_violation, "need |W| >= 3");
    require(detail::contains(detail::a_set(p, i), u), ErrorKind::hypothesis_violation, "u is not in A_i");
    if (options.check_hypotheses)
        require(is_maximal_wrt(c, {p, w}), ErrorKind::hypothesis_violation, "P is not maximal w.r.t. W");

    auto v = [&](int j) { return p.image(j); };
    auto blue = [&](Vertex a, Vertex b, Vertex d) { return ! c.is_red(Edge{a, b, d}); };
    GoodConfiguration g;
    g.anchor = i;

    auto pick = [&](auto && build) -> bool {
        for (auto x : w)
            for (auto y : w) {
                if (x == y || ! constraint.allows(x, y))
                    continue;
                if (auto cand = build(x, y)) {
                    if (blue(cand->x, cand->a1, cand->a2) && blue(cand->a2, cand->a3, cand->y)) {
                        g = *cand;
                        return true;
                    }
                }
            }
        return false;
    };

    std::vector<Vertex> red_first;
    std::vector<Vertex> red_second;
    for (auto x : w) {
        if (c.is_red(Edge{u, v(2 * i), x}))
            red_first.push_back(x);
        if (c.is_red(Edge{v(2 * i + 2), v(2 * i + 3), x}))
            red_second.push_back(x);
    }

    auto finish = [&](int branch, Vertex avoided, std::optional<Vertex> excluded) {
        g.anchor = i;
        g.branch = branch;
        g.avoided_vertex = avoided;
        g.excluded = excluded;
        if (auto check = validate_configuration(c, p, w, u, g); ! check)
            detail::proof_gap(c, "configuration failed validation: " + check.reason);
        return g;
    };

    for (int branch : {1, 2}) {
        const auto & reds = branch == 1 ? red_first : red_second;
        if (reds.empty())
            continue;
        Vertex inner = v(2 * i + 1);
        Vertex hub = branch == 1 ? v(2 * i) : v(2 * i + 2);
        Vertex far = branch == 1 ? v(2 * i + 2) : v(2 * i);
        auto build = [&](Vertex x, Vertex y) -> std::optional<GoodConfiguration> {
            bool witness = std::any_of(reds.begin(), reds.end(), [&](Vertex r) { return r != x && r != y; });
            if (! witness)
                return std::nullopt;
            GoodConfiguration cand;
            cand.x = x;
            cand.a1 = inner;
            cand.a2 = hub;
            cand.a3 = far;
            cand.y = y;
            return cand;
        };
        if (! pick(build))
            detail::proof_gap(c, "case " + std::to_string(branch) + " configuration edges are not blue at i="
                    + std::to_string(i));
        return finish(branch, v(2 * i + 3), reds.size() == 1 ? std::optional<Vertex>(reds.front()) : std::nullopt);
    }

    // every {u, v_2i, x} and {v_2i+2, v_2i+3, x} is blue from here on
    const std::vector<std::pair<Vertex, Vertex>> f_edges{
        {u, v(2 * i + 1)}, {v(2 * i), v(2 * i + 1)}, {u, v(2 * i + 2)}, {v(2 * i), v(2 * i + 2)}};
    bool some_blue_f = false;
    for (auto y : w)
        for (auto [s, t] : f_edges)
            some_blue_f = some_blue_f || blue(s, t, y);
    if (some_blue_f) {
        auto build = [&](Vertex x, Vertex y) -> std::optional<GoodConfiguration> {
            for (auto [s, t] : f_edges) {
                if (! blue(s, t, y))
                    continue;
                GoodConfiguration cand;
                cand.x = x;
                cand.a2 = s;
                cand.a1 = s == u ? v(2 * i) : u;
                cand.a3 = t;
                cand.y = y;
                return cand;
            }
            return std::nullopt;
        };
        if (! pick(build))
            detail::proof_gap(c, "case 3 configuration unavailable at i=" + std::to_string(i));
        return finish(3, v(2 * i + 3), std::nullopt);
    }

    auto build = [&](Vertex a, Vertex b) -> std::optional<GoodConfiguration> {
        GoodConfiguration cand;
        cand.x = a;
        cand.a1 = u;
        cand.a2 = v(2 * i);
        cand.a3 = v(2 * i + 3);
        cand.y = b;
        return cand;
    };
    if (! pick(build))
        detail::proof_gap(c, "case 4 edges {v_2i, v_2i+3, y} are not blue at i=" + std::to_string(i));
    return finish(4, v(2 * i + 2), std::nullopt);
}

// ---------------------------------------------------------------------------
// Absorbing W into a blue path (k = 3)

struct AbsorptionResult {
    Embedding q;                  // blue loose path
    std::vector<Vertex> w_used;   // W' in path order: first of f_1, last of f_2, f_4, ...
    int r = 0;                    // trailing host-path edges not consumed
    std::vector<GoodConfiguration> configurations;
};

/// Independent check of the four absorption invariants.
inline auto validate_absorption(const TwoColoring & c, const Embedding & p, const std::vector<Vertex> & w,
        const AbsorptionResult & a) -> Verdict
{
    if (auto v = verify_embedding(c, a.q); ! v)
        return v;
    if (a.q.shape.is_cycle() || a.q.claimed_color != ColorClaim::blue)
        return Verdict::reject("Q must be a blue path");
    int n = p.shape.length();
    int q = a.q.shape.length();
    int wp = static_cast<int>(a.w_used.size());
    if (q != 2 * (wp - 1) || q != n - a.r)
        return Verdict::reject("length identity q = 2(|W'|-1) = n-r fails");
    std::vector<Vertex> expected{a.q.image(1)};
    for (int j = 1; 2 * j <= q; ++j)
        expected.push_back(a.q.image(4 * j + 1));
    if (expected != a.w_used)
        return Verdict::reject("W' is not at the alternating positions");
    for (auto x : a.w_used)
        if (! detail::contains(w, x))
            return Verdict::reject("W' is not inside W");
    std::vector<Vertex> front;
    for (int j = 1; j <= 2 * (n - a.r) + 1; ++j)
        front.push_back(p.image(j));
    for (auto x : a.q.assignment)
        if (! detail::contains(a.w_used, x) && ! detail::contains(front, x))
            return Verdict::reject("Q leaves V(e_1..e_{n-r})");
    int last = n - a.r;
    if (last >= 1) {
        bool avoids = ! detail::contains(a.q.assignment, p.image(2 * last))
            || ! detail::contains(a.q.assignment, p.image(2 * last + 1));
        if (! avoids)
            return Verdict::reject("Q uses both new vertices of e_{n-r}");
    }
    auto left = static_cast<int>(w.size()) - wp;
    if (! (left <= 1 || a.r <= 1))
        return Verdict::reject("|W minus W'| >= 2 with r >= 2");
    return Verdict::accept();
}

/// Chains good configurations over the edge pairs (e_1,e_2), (e_3,e_4), ...
/// into one blue path, stopping once at most three W vertices remain
/// available or at most one edge of P is left.
inline auto absorb_blue_path(const TwoColoring & c, const Embedding & p, const std::vector<Vertex> & w,
        const ConstructiveOptions & options = {}) -> AbsorptionResult
{
    detail::check_red_path_k3(c, p, w);
    int n = p.shape.length();
    require(n >= 2, ErrorKind::hypothesis_violation, "need n >= 2");
    require(w.size() >= 3, ErrorKind::hypothesis_violation, "need |W| >= 3");
    if (options.check_hypotheses)
        require(is_maximal_wrt(c, {p, w}), ErrorKind::hypothesis_violation, "P is not maximal w.r.t. W");
    ConstructiveOptions inner = options;
    inner.check_hypotheses = false; // sub-paths and subsets of W inherit maximality

    AbsorptionResult result{{LooseTemplate::path(3, 2), {}, ColorClaim::blue}, {}, 0, {}};
    auto first = find_good_configuration(c, p, w, 1, p.image(1), {}, inner);
    std::vector<Vertex> chain{first.x, first.a1, first.a2, first.a3, first.y};
    result.configurations.push_back(first);
    int steps = 1;
    Vertex avoided = first.avoided_vertex;

    auto available = [&] {
        std::vector<Vertex> out;
        for (auto x : w)
            if (! detail::contains(chain, x) || x == chain.front() || x == chain.back())
                out.push_back(x);
        return out;
    };

    while (true) {
        auto pool = available();
        if (pool.size() <= 3 || n - 2 * steps <= 1)
            break;
        int i = 2 * steps + 1;
        EndConstraint ends{{chain.front(), chain.back()}, {}};
        auto g = find_good_configuration(c, p, pool, i, avoided, ends, inner);
        if (g.y == chain.front() || g.y == chain.back())
            g = g.reversed();
        if (g.x == chain.front())
            std::reverse(chain.begin(), chain.end());
        if (g.x != chain.back())
            detail::proof_gap(c, "configuration does not attach to the chain");
        for (auto x : {g.a1, g.a2, g.a3, g.y})
            chain.push_back(x);
        result.configurations.push_back(g);
        avoided = g.avoided_vertex;
        ++steps;
    }

    result.q = Embedding{LooseTemplate::path(3, 2 * steps), chain, ColorClaim::blue};
    result.r = n - 2 * steps;
    result.w_used.push_back(chain.front());
    for (int j = 1; j <= steps; ++j)
        result.w_used.push_back(chain[static_cast<std::size_t>(4 * j)]);
    if (auto check = validate_absorption(c, p, w, result); ! check)
        detail::proof_gap(c, "absorption failed validation: " + check.reason);
    return result;
}

// ---------------------------------------------------------------------------
// Blue cycles from a red cycle one shorter (k = 3)

namespace detail {

    /// Cyclic labels v_j of a loose cycle, optionally read in reverse so that
    /// r_j = v_{2-j}; edges keep the form {r_2i-1, r_2i, r_2i+1}.
    struct CycleLabels {
        const Embedding * cycle;
        bool mirrored = false;

        [[nodiscard]] auto size() const -> int { return cycle->shape.vertex_count(); }

        auto operator()(int j) const -> Vertex
        {
            int l = size();
            int idx = mirrored ? 2 - j : j;
            idx = ((idx - 1) % l + l) % l + 1;
            return cycle->image(idx);
        }
    };

} // namespace detail

/// The explicit blue cycle of the second case: every edge pairs two
/// consecutive cycle vertices v_j v_j+1 with a vertex of W.
inline auto case2_blue_cycle(const TwoColoring & c, const Embedding & cycle, const std::vector<Vertex> & w, int m)
    -> Embedding
{
    require(c.k() == 3 && cycle.shape.k() == 3 && cycle.shape.is_cycle(), ErrorKind::invalid_parameter,
            "needs a 3-uniform loose cycle");
    require(m >= 3, ErrorKind::invalid_parameter, "need m >= 3");
    auto shape = verify_embedding(c, Embedding{cycle.shape, cycle.assignment, ColorClaim::any});
    require(shape.ok, ErrorKind::hypothesis_violation, "C is not a loose cycle: " + shape.reason);
    auto needed = static_cast<std::size_t>(m % 2 == 0 ? m / 2 : (m + 1) / 2);
    require(w.size() >= needed, ErrorKind::hypothesis_violation,
            "need at least " + std::to_string(needed) + " vertices in W");
    detail::CycleLabels v{&cycle};
    int len = cycle.shape.length();
    for (int i = 1; i <= len; ++i)
        for (auto z : w) {
            require(! detail::contains(cycle.assignment, z), ErrorKind::hypothesis_violation, "W meets the cycle");
            for (auto e : {Edge{v(2 * i - 1), v(2 * i), z}, Edge{v(2 * i), v(2 * i + 1), z}})
                require(! c.is_red(e), ErrorKind::hypothesis_violation, "edge " + to_string(e) + " is red");
        }
    auto x = [&](int j) { return w[static_cast<std::size_t>(j - 1)]; };
    std::vector<Edge> edges;
    for (int i = 1; i <= m - 1; ++i)
        if (i % 2 == 1)
            edges.push_back(Edge{x((i + 1) / 2), v((3 * i + 1) / 2), v((3 * i + 3) / 2)});
        else
            edges.push_back(Edge{v(3 * i / 2), v(3 * i / 2 + 1), x(i / 2 + 1)});
    if (m % 2 == 0)
        edges.push_back(Edge{x(1), v(3 * m / 2), v(3 * m / 2 + 1)});
    else
        edges.push_back(Edge{x((m + 1) / 2), v(1), v(2)});
    auto result = detail::checked_structure(c, edges, true, Color::blue);
    require(result.has_value(), ErrorKind::hypothesis_violation,
            "cycle of length " + std::to_string(len) + " is too short for a blue C_" + std::to_string(m));
    return *result;
}

struct BlueCycleResult {
    Embedding cycle;
    std::string route;           // which part of the argument produced it, or "search"
    bool budget_exhausted = false;
};

/// Given a red C^3_{n-1} in K^3_{2n+floor((m-1)/2)} with no red C^3_n, returns a
/// blue C^3_m.
inline auto blue_cycle_from_red_shorter_cycle(const TwoColoring & c, const Embedding & red_cycle, int n, int m,
        const ConstructiveOptions & options = {}) -> BlueCycleResult
{
    require(c.k() == 3, ErrorKind::invalid_parameter, "defined for k = 3");
    require(n >= m && m >= 3, ErrorKind::hypothesis_violation, "need n >= m >= 3");
    require(! ((n == 3 && m == 3) || (n == 4 && m == 3) || (n == 4 && m == 4)), ErrorKind::hypothesis_violation,
            "(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) + ") is excluded");
    require(c.n_vertices() == 2 * n + (m - 1) / 2, ErrorKind::hypothesis_violation,
            "host must have 2n + floor((m-1)/2) vertices");
    require(red_cycle.shape.is_cycle() && red_cycle.shape.length() == n - 1, ErrorKind::hypothesis_violation,
            "C must be a loose cycle of length n-1");
    auto check = verify_embedding(c, Embedding{red_cycle.shape, red_cycle.assignment, ColorClaim::red});
    require(check.ok, ErrorKind::hypothesis_violation, "C is not a red cycle: " + check.reason);

    BlueCycleResult result{red_cycle, "", false};
    if (options.check_hypotheses) {
        auto red = detail::has_copy(c, Color::red, LooseTemplate::cycle(3, n), options.hypothesis_budget);
        require(red != std::optional<bool>(true), ErrorKind::hypothesis_violation, "a red C_n is present");
        result.budget_exhausted = ! red.has_value();
    }
    auto w = detail::outside_of(c, red_cycle.assignment);
    auto target = LooseTemplate::cycle(3, m);
    auto accept = [&](const std::vector<Edge> & edges, const std::string & route) {
        if (auto e = detail::checked_structure(c, edges, true, Color::blue)) {
            result.cycle = *e;
            result.route = route;
            return true;
        }
        return false;
    };

    // find the first red {z, v_2i, v_2i+1} or {v_2i-1, v_2i, z}
    int len = n - 1;
    std::optional<std::tuple<int, Vertex, bool>> hit;
    detail::CycleLabels v0{&red_cycle};
    for (int i = 1; i <= len && ! hit; ++i)
        for (auto z : w) {
            if (c.is_red(Edge{z, v0(2 * i), v0(2 * i + 1)})) {
                hit = std::make_tuple(i, z, false);
                break;
            }
            if (c.is_red(Edge{v0(2 * i - 1), v0(2 * i), z})) {
                hit = std::make_tuple(i, z, true);
                break;
            }
        }

    if (! hit) {
        result.cycle = case2_blue_cycle(c, red_cycle, w, m);
        result.route = "case-2";
        return result;
    }

    auto [i0, z, mirrored] = *hit;
    detail::CycleLabels v{&red_cycle, mirrored};
    int i = mirrored ? ((1 - i0) % len + len) % len : i0;
    if (i == 0)
        i = len;
    std::vector<Vertex> w0;
    for (auto x : w)
        if (x != z)
            w0.push_back(x);

    bool done = false;
    if (m == 3 && w0.size() >= 2) {
        for (auto [a, b] : {std::pair{w0[0], w0[1]}, std::pair{w0[1], w0[0]}})
            if (! done)
                done = accept({Edge{a, v(2 * i - 2), v(2 * i)}, Edge{v(2 * i), b, v(2 * i - 1)}, Edge{v(2 * i - 1), z, a}},
                        "case-1-triangle");
    }
    else if (m == 4 && len >= 4 && w0.size() >= 2) {
        // configuration on e_{i-3} e_{i-2} with ends {u, v}, closed through z
        Embedding segment{LooseTemplate::path(3, 2), {}, ColorClaim::red};
        for (int j = 2 * i - 7; j <= 2 * i - 3; ++j)
            segment.assignment.push_back(v(j));
        std::vector<Vertex> pool{w0[0], w0[1], z};
        try {
            auto g = find_good_configuration(c, segment, pool, 1, segment.image(1), {{}, {w0[0], w0[1]}}, options);
            done = accept({g.first_edge(), g.second_edge(), Edge{g.y, z, v(2 * i - 1)}, Edge{v(2 * i - 1), v(2 * i), g.x}},
                    "case-1-configuration");
        }
        catch (const Error &) {
        }
    }
    else if (m >= 5) {
        Embedding path{LooseTemplate::path(3, n - 2), {}, ColorClaim::red};
        for (int j = 1; j <= 2 * (n - 2) + 1; ++j)
            path.assignment.push_back(v(2 * i + j));
        try {
            auto ab = absorb_blue_path(c, path, w0, options);
            const auto & q = ab.q;
            auto qe = q.host_edges();
            Vertex x = q.image(1);
            Vertex y = q.assignment.back();
            std::vector<Vertex> t;
            for (auto a : w0)
                if (! detail::contains(ab.w_used, a))
                    t.push_back(a);
            if (t.empty() && m % 2 == 0) {
                for (auto wv : {v(2 * i - 2), v(2 * i - 1)})
                    if (! done && ! detail::contains(q.assignment, wv)) {
                        auto edges = std::vector<Edge>{Edge{wv, z, x}};
                        edges.insert(edges.end(), qe.begin(), qe.end());
                        edges.push_back(Edge{y, v(2 * i), wv});
                        done = accept(edges, "case-1-absorb");
                    }
            }
            else if (t.empty() && qe.size() >= 2) {
                std::vector<Edge> edges(qe.begin(), qe.end() - 2);
                Vertex y2 = q.assignment[q.assignment.size() - 5];
                edges.push_back(Edge{y2, v(2 * i - 2), v(2 * i)});
                edges.push_back(Edge{v(2 * i), y, v(2 * i - 1)});
                edges.push_back(Edge{v(2 * i - 1), z, x});
                done = accept(edges, "case-1-absorb");
            }
            else if (t.size() == 1 && m % 2 == 1) {
                std::vector<Edge> edges(qe.begin(), qe.end());
                edges.push_back(Edge{y, v(2 * i - 2), v(2 * i)});
                edges.push_back(Edge{v(2 * i), t.front(), v(2 * i - 1)});
                edges.push_back(Edge{v(2 * i - 1), z, x});
                done = accept(edges, "case-1-absorb");
            }
        }
        catch (const Error &) {
        }
    }
    if (done)
        return result;

    auto found = search_embedding(c, Color::blue, target);
    if (found.status != SearchStatus::found)
        detail::proof_gap(c, "no blue C_" + std::to_string(m) + " although the hypotheses hold");
    result.cycle = *found.embedding;
    result.route = "search";
    return result;
}

// ---------------------------------------------------------------------------
// Joining two disjoint red cycles (k >= 4)

struct JoinStep {
    std::string label; // step index, or "l-1", "l", "l'" in the closing phase
    std::optional<Edge> g;
    std::optional<Color> g_color;
    std::optional<Edge> h;
    std::optional<Color> h_color;
    std::optional<Edge> chosen; // the blue edge kept, if any
};

struct JoinTrace {
    std::vector<JoinStep> steps;
    Embedding outcome{LooseTemplate::path(3, 1), {}, ColorClaim::any};
    bool red_outcome = false;
    std::string route; // "construction" or "search"
};

/// Red C_n and red C_m, disjoint, in K^k_N with N >= (k-1)(n+m): builds a red
/// C_{n+m} or a blue C_l by testing the paired edges g_i, h_i step by step.
inline auto join_red_cycles(const TwoColoring & c, const Embedding & c1, const Embedding & c2, int l) -> JoinTrace
{
    int k = c.k();
    int n = c1.shape.length();
    int m = c2.shape.length();
    require(k >= 4, ErrorKind::hypothesis_violation, "needs k >= 4");
    require(c1.shape.is_cycle() && c2.shape.is_cycle(), ErrorKind::invalid_parameter, "inputs must be cycles");
    require(n >= m && m >= 3, ErrorKind::hypothesis_violation, "need n >= m >= 3");
    require(l >= 3 && l <= m, ErrorKind::invalid_parameter, "need 3 <= l <= m");
    require(c.n_vertices() >= (k - 1) * (n + m), ErrorKind::hypothesis_violation, "host too small");
    for (const auto * cyc : {&c1, &c2}) {
        auto check = verify_embedding(c, Embedding{cyc->shape, cyc->assignment, ColorClaim::red});
        require(check.ok, ErrorKind::hypothesis_violation, "input cycle is not red: " + check.reason);
    }
    for (auto x : c1.assignment)
        require(! detail::contains(c2.assignment, x), ErrorKind::hypothesis_violation, "cycles are not disjoint");

    detail::CycleLabels v{&c1};
    detail::CycleLabels u{&c2};
    auto e = [&](int i) { return c1.host_edge((i - 1) % n + 1); };
    auto f = [&](int i) { return c2.host_edge((i - 1) % m + 1); };
    auto index_in = [](const Embedding & cyc, Vertex x) {
        return static_cast<int>(std::find(cyc.assignment.begin(), cyc.assignment.end(), x) - cyc.assignment.begin()) + 1;
    };
    // extreme-index vertex of s inside edge `base` of the given cycle
    auto pick_index = [&](const Edge & s, const Edge & base, const Embedding & cyc, bool maximum) {
        Vertex best = 0;
        int best_index = 0;
        for (auto x : s)
            if (base.contains(x)) {
                int idx = index_in(cyc, x);
                if (best == 0 || (maximum ? idx > best_index : idx < best_index)) {
                    best = x;
                    best_index = idx;
                }
            }
        return best;
    };

    JoinTrace trace;
    std::vector<Edge> blue_path;
    std::vector<Edge> s;        // s_1 .. s_{l-2}
    bool broken = false;        // reconstruction produced a malformed edge

    auto red_cycle = [&](const std::vector<Edge> & edges) {
        if (auto emb = detail::checked_structure(c, edges, true, Color::red)) {
            trace.outcome = *emb;
            trace.red_outcome = true;
            trace.route = "construction";
            return true;
        }
        broken = true;
        return false;
    };
    auto blue_cycle = [&](std::vector<Edge> edges) {
        if (auto emb = detail::checked_structure(c, edges, true, Color::blue)) {
            trace.outcome = *emb;
            trace.red_outcome = false;
            trace.route = "construction";
            return true;
        }
        broken = true;
        return false;
    };
    auto record = [&](std::string label, const std::optional<Edge> & g, const std::optional<Edge> & h) {
        JoinStep step;
        step.label = std::move(label);
        step.g = g;
        step.h = h;
        if (g)
            step.g_color = c.color(*g);
        if (h)
            step.h_color = c.color(*h);
        trace.steps.push_back(step);
        return &trace.steps.back();
    };
    auto e_run = [&](int from, int count) {
        std::vector<Edge> out;
        for (int j = 0; j < count; ++j)
            out.push_back(e(((from - 1 + j) % n + n) % n + 1));
        return out;
    };
    auto f_run = [&](int from, int count, int step = 1) {
        std::vector<Edge> out;
        for (int j = 0; j < count; ++j)
            out.push_back(f(((from - 1 + step * j) % m + m) % m + 1));
        return out;
    };
    auto concat = [](std::initializer_list<std::vector<Edge>> parts) {
        std::vector<Edge> out;
        for (const auto & p : parts)
            out.insert(out.end(), p.begin(), p.end());
        return out;
    };

    bool finished = false;
    Vertex x_next = v(1);
    Vertex y_next = u(1);
    for (int i = 1; i <= l - 2 && ! finished && ! broken; ++i) {
        int a = (i - 1) * (k - 1) + 1;
        int b = i * (k - 1);
        auto g = detail::swap_vertices(e(i), {v(a), v(b), v(b + 1)}, {x_next, u(b), u(b + 1)});
        auto h = detail::swap_vertices(f(i), {u(a), u(b), u(b + 1)}, {y_next, v(b), v(b + 1)});
        auto * step = record(std::to_string(i), g, h);
        if (! g || ! h) {
            broken = true;
            break;
        }
        if (c.is_red(*g) && c.is_red(*h)) {
            red_cycle(concat({{*h}, e_run(i + 1, n - 1), {*g}, f_run(i + 1, m - 1)}));
            finished = true;
            break;
        }
        Edge chosen = c.is_red(*g) ? *h : *g;
        step->chosen = chosen;
        s.push_back(chosen);
        x_next = pick_index(chosen, e(i), c1, true);
        y_next = pick_index(chosen, f(i), c2, true);
    }

    if (! finished && ! broken) {
        Vertex x1 = pick_index(s.front(), e(1), c1, false);
        Vertex y1 = pick_index(s.front(), f(1), c2, false);
        int tail = (n - 1) * (k - 1);
        int lm1 = (l - 1) * (k - 1);
        int lm2 = (l - 2) * (k - 1);
        auto g1 = detail::swap_vertices(e(n), {v(tail + 1), v(tail + 2), v(1)}, {x1, u(lm1), u(lm1 + 1)});
        auto h1 = detail::swap_vertices(f(l - 1), {u(lm2 + 1), u(lm1), u(lm1 + 1)}, {y_next, v(tail + 1), v(tail + 2)});
        record("l-1", g1, h1);
        if (! g1 || ! h1)
            broken = true;
        else if (c.is_red(*g1) && c.is_red(*h1)) {
            red_cycle(concat({{*g1}, e_run(1, n - 1), {*h1}, f_run(l - 2, m - 1, -1)}));
        }
        else if (! c.is_red(*g1)) {
            trace.steps.back().chosen = *g1;
            auto gl = detail::swap_vertices(e(l - 1), {v(lm2 + 1), v(lm1), v(lm1 + 1)}, {x_next, u(lm1 - 1), u(lm1 + 1)});
            auto hl = detail::swap_vertices(f(l - 1), {u(lm2 + 1), u(lm1 - 1), u(lm1 + 1)}, {y_next, v(lm1), v(lm1 + 1)});
            auto * step = record("l", gl, hl);
            if (! gl || ! hl)
                broken = true;
            else if (! c.is_red(*gl)) {
                step->chosen = *gl;
                blue_cycle(concat({s, {*gl, *g1}}));
            }
            else if (! c.is_red(*hl)) {
                step->chosen = *hl;
                blue_cycle(concat({s, {*hl, *g1}}));
            }
            else
                red_cycle(concat({{*hl}, e_run(l, n - 1), {*gl}, f_run(l, m - 1)}));
        }
        else {
            trace.steps.back().chosen = *h1;
            auto gp = detail::swap_vertices(e(n), {v(tail + 2), v(1)}, {u(m * (k - 1)), y1});
            auto hp = detail::swap_vertices(f(m), {u(m * (k - 1)), u(1)}, {v(tail + 2), x1});
            auto * step = record("l'", gp, hp);
            if (! gp || ! hp)
                broken = true;
            else if (! c.is_red(*gp)) {
                step->chosen = *gp;
                blue_cycle(concat({s, {*h1, *gp}}));
            }
            else if (! c.is_red(*hp)) {
                step->chosen = *hp;
                blue_cycle(concat({s, {*h1, *hp}}));
            }
            else
                red_cycle(concat({e_run(1, n - 1), {*gp}, f_run(1, m - 1), {*hp}}));
        }
    }

    if (! trace.route.empty())
        return trace;

    // the reconstruction did not close; the statement still guarantees one of the two
    auto red = search_embedding(c, Color::red, LooseTemplate::cycle(k, n + m));
    if (red.status == SearchStatus::found) {
        trace.outcome = *red.embedding;
        trace.red_outcome = true;
    }
    else {
        auto blue = search_embedding(c, Color::blue, LooseTemplate::cycle(k, l));
        if (blue.status != SearchStatus::found)
            detail::proof_gap(c, "neither a red C_{n+m} nor a blue C_l exists");
        trace.outcome = *blue.embedding;
        trace.red_outcome = false;
    }
    trace.route = "search";
    return trace;
}

/// Independent check of a join trace: recorded colors, outcome shape and color.
inline auto validate_join_trace(const TwoColoring & c, const JoinTrace & t, int n, int m, int l) -> Verdict
{
    for (const auto & s : t.steps) {
        if (s.g && s.g_color && c.color(*s.g) != *s.g_color)
            return Verdict::reject("edge-color-mismatch: " + to_string(*s.g));
        if (s.h && s.h_color && c.color(*s.h) != *s.h_color)
            return Verdict::reject("edge-color-mismatch: " + to_string(*s.h));
        if (s.chosen && c.is_red(*s.chosen))
            return Verdict::reject("edge-color-mismatch: chosen edge " + to_string(*s.chosen) + " is red");
    }
    if (static_cast<int>(t.steps.size()) > l)
        return Verdict::reject("trace longer than l steps");
    if (! t.outcome.shape.is_cycle())
        return Verdict::reject("outcome is not a cycle");
    if (t.red_outcome && (t.outcome.shape.length() != n + m || t.outcome.claimed_color != ColorClaim::red))
        return Verdict::reject("red outcome must be a red C_{n+m}");
    if (! t.red_outcome && (t.outcome.shape.length() != l || t.outcome.claimed_color != ColorClaim::blue))
        return Verdict::reject("blue outcome must be a blue C_l");
    return verify_embedding(c, t.outcome);
}

// ---------------------------------------------------------------------------
// Red/blue edge pairs meeting in k-1 vertices

struct BichromaticPair {
    Edge red_edge;
    Edge blue_edge;
};

inline auto validate_pair(const TwoColoring & c, const BichromaticPair & p) -> Verdict
{
    if (! c.is_red(p.red_edge))
        return Verdict::reject("edge-color-mismatch: " + to_string(p.red_edge) + " is not red");
    if (c.is_red(p.blue_edge))
        return Verdict::reject("edge-color-mismatch: " + to_string(p.blue_edge) + " is not blue");
    if (intersection_size(p.red_edge, p.blue_edge) != c.k() - 1)
        return Verdict::reject("edges do not meet in k-1 vertices");
    return Verdict::accept();
}

struct PairSearch {
    BichromaticPair pair;
    int iterations = 0;
    std::vector<int> intersections; // |e ∩ f| before each iteration and at the end
};

/// Improvement loop from a red edge e and a blue edge f: replace one of them
/// by g, which keeps e∩f and takes floor((k-m)/2) vertices of e∖f and
/// ceil((k-m)/2) of f∖e, until they meet in k-1 vertices.
inline auto improve_pair(const TwoColoring & c, Edge e, Edge f) -> PairSearch
{
    int k = c.k();
    require(c.is_red(e) && ! c.is_red(f), ErrorKind::invalid_parameter, "need a red edge and a blue edge");
    PairSearch out;
    while (true) {
        int meet = intersection_size(e, f);
        out.intersections.push_back(meet);
        if (meet == k - 1)
            break;
        std::vector<Vertex> g;
        std::vector<Vertex> only_e;
        std::vector<Vertex> only_f;
        for (auto x : e)
            (f.contains(x) ? g : only_e).push_back(x);
        for (auto x : f)
            if (! e.contains(x))
                only_f.push_back(x);
        int from_e = (k - meet) / 2;
        int from_f = k - meet - from_e;
        g.insert(g.end(), only_e.begin(), only_e.begin() + from_e);
        g.insert(g.end(), only_f.begin(), only_f.begin() + from_f);
        Edge ge(std::move(g));
        if (c.is_red(ge))
            e = ge;
        else
            f = ge;
        ++out.iterations;
        require(out.iterations <= k, ErrorKind::internal_assertion, "improvement loop did not terminate");
    }
    out.pair = {e, f};
    return out;
}

/// A red/blue pair meeting in k-1 vertices inside the given vertex set (all
/// of the host if empty), improved from the lowest-rank red and blue edges.
inline auto adjacent_bichromatic_pair(const TwoColoring & c, std::vector<Vertex> within = {}) -> PairSearch
{
    int k = c.k();
    if (within.empty())
        for (Vertex x = 1; x <= c.n_vertices(); ++x)
            within.push_back(x);
    std::sort(within.begin(), within.end());
    require(static_cast<int>(within.size()) >= k + 1, ErrorKind::host_too_small, "need at least k+1 vertices");

    std::optional<Edge> red;
    std::optional<Edge> blue;
    for_each_k_subset(static_cast<int>(within.size()), k, [&](Rank, std::span<const Vertex> pos) {
        if (red && blue)
            return;
        std::vector<Vertex> vs;
        for (auto p : pos)
            vs.push_back(within[static_cast<std::size_t>(p - 1)]);
        Edge e(std::move(vs));
        if (c.is_red(e)) {
            if (! red)
                red = e;
        }
        else if (! blue)
            blue = e;
    });
    if (! red || ! blue)
        fail(ErrorKind::monochromatic_coloring, "only one color is used");
    return improve_pair(c, *red, *blue);
}

struct DisjointPairs {
    BichromaticPair first;
    BichromaticPair second;
    std::string route; // "construction" or "search"
    bool budget_exhausted = false;
};

inline auto validate_disjoint_pairs(const TwoColoring & c, const DisjointPairs & d) -> Verdict
{
    for (const auto * p : {&d.first, &d.second})
        if (auto v = validate_pair(c, *p); ! v)
            return v;
    for (auto x : d.first.red_edge)
        if (d.second.red_edge.contains(x) || d.second.blue_edge.contains(x))
            return Verdict::reject("pairs are not disjoint");
    for (auto x : d.first.blue_edge)
        if (d.second.red_edge.contains(x) || d.second.blue_edge.contains(x))
            return Verdict::reject("pairs are not disjoint");
    return Verdict::accept();
}

/// Two vertex-disjoint red/blue pairs, each meeting in k-1 vertices, in
/// K^k_{t(k-1)+1} with no red C^k_t and no blue C^k_3.
inline auto disjoint_bichromatic_pairs(const TwoColoring & c, int t, const ConstructiveOptions & options = {})
    -> DisjointPairs
{
    int k = c.k();
    require(t >= 5, ErrorKind::invalid_parameter, "need t >= 5");
    require(c.n_vertices() == t * (k - 1) + 1, ErrorKind::hypothesis_violation, "host must have t(k-1)+1 vertices");
    DisjointPairs out;
    if (options.check_hypotheses) {
        auto blue = detail::has_copy(c, Color::blue, LooseTemplate::cycle(k, 3), options.hypothesis_budget);
        require(blue != std::optional<bool>(true), ErrorKind::hypothesis_violation, "a blue C_3 is present");
        auto red = detail::has_copy(c, Color::red, LooseTemplate::cycle(k, t), options.hypothesis_budget);
        require(red != std::optional<bool>(true), ErrorKind::hypothesis_violation, "a red C_t is present");
        out.budget_exhausted = ! blue.has_value() || ! red.has_value();
    }

    auto refine = [&](const BichromaticPair & p) { return improve_pair(c, p.red_edge, p.blue_edge).pair; };
    auto attempt = [&]() -> std::optional<std::pair<BichromaticPair, BichromaticPair>> {
        auto start = adjacent_bichromatic_pair(c).pair;
        // v_1 = e1 minus e2, v_2..v_k = e1 ∩ e2, v_k+1 = e2 minus e1
        std::vector<Vertex> v{0};
        for (auto x : start.red_edge)
            if (! start.blue_edge.contains(x))
                v.push_back(x);
        for (auto x : start.red_edge)
            if (start.blue_edge.contains(x))
                v.push_back(x);
        for (auto x : start.blue_edge)
            if (! start.red_edge.contains(x))
                v.push_back(x);
        auto w = detail::outside_of(c, std::vector<Vertex>(v.begin() + 1, v.end()));
        bool has_red = false;
        bool has_blue = false;
        for_each_k_subset(static_cast<int>(w.size()), k, [&](Rank, std::span<const Vertex> pos) {
            std::vector<Vertex> vs;
            for (auto p : pos)
                vs.push_back(w[static_cast<std::size_t>(p - 1)]);
            (c.is_red(Edge(std::move(vs))) ? has_red : has_blue) = true;
        });
        if (has_red && has_blue)
            return std::pair{start, adjacent_bichromatic_pair(c, w).pair};
        if (! has_red)
            return std::nullopt; // W all blue holds a blue C_3
        auto sized = [&](std::size_t from, std::size_t count) {
            return std::vector<Vertex>(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(from + count));
        };
        auto km1 = static_cast<std::size_t>(k - 1);
        if (w.size() < 2 * km1 + 1)
            return std::nullopt;
        auto w1 = sized(0, km1);
        auto w2 = sized(km1, km1);
        Vertex spare = w[2 * km1];
        auto with = [](std::vector<Vertex> vs, Vertex x) {
            vs.push_back(x);
            return Edge(std::move(vs));
        };
        auto g1 = with(w1, v[1]);
        if (! c.is_red(g1)) {
            auto g2 = with(w2, v[static_cast<std::size_t>(k + 1)]);
            if (c.is_red(g2))
                return std::pair{BichromaticPair{g2, start.blue_edge}, BichromaticPair{with(w1, spare), g1}};
            return std::pair{BichromaticPair{start.red_edge, g1}, BichromaticPair{with(w2, spare), g2}};
        }
        auto f1 = with(w2, v[static_cast<std::size_t>(k)]);
        auto h = with(w1, v[static_cast<std::size_t>(k - 1)]);
        if (c.is_red(f1) || c.is_red(h))
            return std::nullopt;
        return std::pair{BichromaticPair{g1, h}, BichromaticPair{with(w2, spare), f1}};
    };

    if (auto found = attempt()) {
        out.first = refine(found->first);
        out.second = refine(found->second);
        out.route = "construction";
        if (validate_disjoint_pairs(c, out))
            return out;
    }

    // exhaustive: every adjacent bichromatic pair, then a disjoint couple
    std::vector<BichromaticPair> pairs;
    for_each_k_subset(c.n_vertices(), k, [&](Rank, std::span<const Vertex> vs) {
        Edge e(std::vector<Vertex>(vs.begin(), vs.end()));
        if (! c.is_red(e))
            return;
        for (auto drop : e)
            for (Vertex add = 1; add <= c.n_vertices(); ++add) {
                if (e.contains(add))
                    continue;
                auto f = detail::swap_vertices(e, {drop}, {add});
                if (f && ! c.is_red(*f))
                    pairs.push_back({e, *f});
            }
    });
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            DisjointPairs cand{pairs[a], pairs[b], "search", out.budget_exhausted};
            if (validate_disjoint_pairs(c, cand))
                return cand;
        }
    detail::proof_gap(c, "no two disjoint adjacent red/blue pairs");
}

// ---------------------------------------------------------------------------
// Lifting a blue C^k_4 to a red C^k_5 or C^k_6

/// In K^k_{i(k-1)+1} with no blue C^k_3, the explicit red C^k_i built around a
/// blue C^k_4. Throws BlueEdgeEncountered naming the first listed edge that
/// is blue.
inline auto lift_blue_c4(const TwoColoring & c, const Embedding & c4, int i, const ConstructiveOptions & options = {})
    -> Embedding
{
    require(i == 5 || i == 6, ErrorKind::invalid_parameter, "i must be 5 or 6");
    int k = c.k();
    require(c.n_vertices() == i * (k - 1) + 1, ErrorKind::hypothesis_violation, "host must have i(k-1)+1 vertices");
    require(c4.shape.is_cycle() && c4.shape.length() == 4, ErrorKind::hypothesis_violation, "need a loose C_4");
    auto check = verify_embedding(c, Embedding{c4.shape, c4.assignment, ColorClaim::blue});
    require(check.ok, ErrorKind::hypothesis_violation, "C_4 is not blue: " + check.reason);
    if (options.check_hypotheses) {
        auto blue = detail::has_copy(c, Color::blue, LooseTemplate::cycle(k, 3), options.hypothesis_budget);
        require(blue != std::optional<bool>(true), ErrorKind::hypothesis_violation, "a blue C_3 is present");
    }
    detail::CycleLabels v{&c4};
    auto e = [&](int j) { return c4.host_edge(j); };
    auto w = detail::outside_of(c, c4.assignment);
    auto swap = [&](const Edge & base, std::vector<Vertex> out, std::vector<Vertex> in) {
        auto r = detail::swap_vertices(base, out, in);
        require(r.has_value(), ErrorKind::internal_assertion, "lifted edge is not a k-set");
        return *r;
    };
    auto from = [](std::vector<Vertex> vs) { return Edge(std::move(vs)); };

    std::vector<Edge> edges;
    if (i == 5) {
        Vertex w1 = w[0];
        Vertex w2 = w[1];
        std::vector<Vertex> fourth{v(3 * k - 3), v(1)};
        for (auto x : w)
            if (x != w1 && x != w2)
                fourth.push_back(x);
        edges = {swap(e(2), {v(k)}, {v(4 * k - 4)}), swap(e(4), {v(1)}, {v(k)}), swap(e(1), {v(1)}, {v(3 * k - 3)}),
            from(fourth), swap(e(3), {v(3 * k - 3), v(3 * k - 2)}, {v(1), w1})};
    }
    else {
        auto km2 = static_cast<std::size_t>(k - 2);
        std::vector<Vertex> a(w.begin(), w.begin() + static_cast<long>(km2));
        std::vector<Vertex> b(w.begin() + static_cast<long>(km2), w.begin() + static_cast<long>(2 * km2));
        Vertex u1 = w[2 * km2];
        Vertex u2 = w[2 * km2 + 1];
        a.push_back(v(k));
        a.push_back(v(2 * k));
        b.push_back(v(1));
        b.push_back(v(2 * k - 1));
        edges = {swap(e(2), {v(k), v(k + 1)}, {u1, v(4 * k - 4)}), swap(e(4), {v(1)}, {v(k + 1)}),
            swap(e(3), {v(2 * k - 1), v(2 * k)}, {v(k), u2}), from(a), swap(e(1), {v(k)}, {v(2 * k)}), from(b)};
    }
    for (const auto & edge : edges)
        if (! c.is_red(edge))
            throw BlueEdgeEncountered(edge);
    auto result = detail::checked_structure(c, edges, true, Color::red);
    require(result.has_value(), ErrorKind::internal_assertion, "lifted edges do not form a loose cycle");
    return *result;
}

} // namespace ramsey_lab

#endif
