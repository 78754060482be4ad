#ifndef RAMSEY_LAB_CORE_HPP
#define RAMSEY_LAB_CORE_HPP

// Vertex/edge primitives and the loose path/cycle templates.
//
// Vertices are 1-based labels throughout. A template of uniformity k and
// length n lives on vertices v_1..v_V where V = n(k-1)+1 for a path and
// V = n(k-1) for a cycle; its i-th edge is {v_1..v_k} shifted by (i-1)(k-1),
// reduced into 1..V for cycles.

#include <ramsey_lab/error.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ramsey_lab {

using Vertex = int;

/// A k-set of vertex labels kept in strictly ascending order.
class Edge {
public:
    Edge() = default;

    explicit Edge(std::vector<Vertex> vertices) :
        _vertices(std::move(vertices))
    {
        std::sort(_vertices.begin(), _vertices.end());
        require(std::adjacent_find(_vertices.begin(), _vertices.end()) == _vertices.end(),
                ErrorKind::malformed_edge, "edge has a repeated vertex");
        require(_vertices.empty() || _vertices.front() >= 1, ErrorKind::malformed_edge,
                "vertex labels are 1-based");
    }

    Edge(std::initializer_list<Vertex> vertices) :
        Edge(std::vector<Vertex>(vertices))
    {
    }

    [[nodiscard]] auto vertices() const noexcept -> std::span<const Vertex> { return _vertices; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return _vertices.size(); }
    [[nodiscard]] auto contains(Vertex v) const -> bool
    {
        return std::binary_search(_vertices.begin(), _vertices.end(), v);
    }
    [[nodiscard]] auto front() const -> Vertex { return _vertices.front(); }
    [[nodiscard]] auto back() const -> Vertex { return _vertices.back(); }
    [[nodiscard]] auto begin() const { return _vertices.begin(); }
    [[nodiscard]] auto end() const { return _vertices.end(); }

    auto operator<=>(const Edge &) const = default;
    auto operator==(const Edge &) const -> bool = default;

private:
    std::vector<Vertex> _vertices;
};

inline auto intersection_size(const Edge & a, const Edge & b) -> int
{
    int count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

inline auto to_string(const Edge & e) -> std::string
{
    std::string out = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(e.vertices()[i]);
    }
    return out + "}";
}

inline auto operator<<(std::ostream & os, const Edge & e) -> std::ostream &
{
    return os << to_string(e);
}

enum class TemplateKind { path, cycle };

struct EdgeEndpoints {
    Vertex first;
    Vertex last;

    auto operator==(const EdgeEndpoints &) const -> bool = default;
};

/// Abstract loose path P^k_n or loose cycle C^k_n. Immutable value type.
class LooseTemplate {
public:
    [[nodiscard]] static auto path(int k, int n) -> LooseTemplate
    {
        require(k >= 3, ErrorKind::invalid_parameter, "uniformity must be at least 3");
        require(n >= 1, ErrorKind::invalid_parameter, "path length must be at least 1");
        return LooseTemplate(TemplateKind::path, k, n);
    }

    [[nodiscard]] static auto cycle(int k, int n) -> LooseTemplate
    {
        require(k >= 3, ErrorKind::invalid_parameter, "uniformity must be at least 3");
        require(n >= 3, ErrorKind::invalid_parameter, "cycle length must be at least 3");
        return LooseTemplate(TemplateKind::cycle, k, n);
    }

    [[nodiscard]] static auto make(TemplateKind kind, int k, int n) -> LooseTemplate
    {
        return kind == TemplateKind::path ? path(k, n) : cycle(k, n);
    }

    [[nodiscard]] auto kind() const noexcept -> TemplateKind { return _kind; }
    [[nodiscard]] auto k() const noexcept -> int { return _k; }
    [[nodiscard]] auto length() const noexcept -> int { return _n; }
    [[nodiscard]] auto is_cycle() const noexcept -> bool { return _kind == TemplateKind::cycle; }

    [[nodiscard]] auto vertex_count() const noexcept -> int
    {
        return is_cycle() ? _n * (_k - 1) : _n * (_k - 1) + 1;
    }

    /// Template vertex index j (1-based, unreduced) reduced into 1..V.
    [[nodiscard]] auto reduce(int j) const -> int
    {
        if (! is_cycle())
            return j;
        int modulus = vertex_count();
        return ((j - 1) % modulus + modulus) % modulus + 1;
    }

    /// Positions of edge i in walk order: first vertex, k-2 interior, last vertex.
    [[nodiscard]] auto edge_walk(int i) const -> std::vector<int>
    {
        check_index(i);
        std::vector<int> walk;
        walk.reserve(static_cast<std::size_t>(_k));
        for (int j = 1; j <= _k; ++j)
            walk.push_back(reduce((i - 1) * (_k - 1) + j));
        return walk;
    }

    [[nodiscard]] auto edge(int i) const -> Edge { return Edge(edge_walk(i)); }

    [[nodiscard]] auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (int i = 1; i <= _n; ++i)
            result.push_back(edge(i));
        return result;
    }

    [[nodiscard]] auto endpoints(int i) const -> EdgeEndpoints
    {
        check_index(i);
        return {reduce((i - 1) * (_k - 1) + 1), reduce(i * (_k - 1) + 1)};
    }

    [[nodiscard]] auto name() const -> std::string
    {
        return std::string(is_cycle() ? "cycle:" : "path:") + std::to_string(_n);
    }

    auto operator==(const LooseTemplate &) const -> bool = default;

private:
    LooseTemplate(TemplateKind kind, int k, int n) :
        _kind(kind), _k(k), _n(n)
    {
    }

    void check_index(int i) const
    {
        require(i >= 1 && i <= _n, ErrorKind::index_out_of_range,
                "edge index " + std::to_string(i) + " outside 1.." + std::to_string(_n));
    }

    TemplateKind _kind;
    int _k;
    int _n;
};

inline auto path_template(int k, int n) -> LooseTemplate { return LooseTemplate::path(k, n); }
inline auto cycle_template(int k, int n) -> LooseTemplate { return LooseTemplate::cycle(k, n); }
inline auto endpoints(const LooseTemplate & t, int i) -> EdgeEndpoints { return t.endpoints(i); }

/// Cyclic shift of labels in 1..modulus: x -> ((x + t - 1) mod modulus) + 1.
inline auto shift(std::span<const Vertex> s, long long t, int modulus) -> std::vector<Vertex>
{
    require(modulus >= 1, ErrorKind::invalid_parameter, "modulus must be positive");
    std::vector<Vertex> result;
    result.reserve(s.size());
    for (Vertex x : s) {
        require(x >= 1 && x <= modulus, ErrorKind::label_out_of_range,
                "label " + std::to_string(x) + " outside 1.." + std::to_string(modulus));
        long long m = modulus;
        result.push_back(static_cast<Vertex>(((x + t - 1) % m + m) % m + 1));
    }
    std::sort(result.begin(), result.end());
    return result;
}

/// Parses the "kind:length" target syntax used on the command line and in files.
inline auto parse_target(const std::string & text, int k) -> LooseTemplate
{
    auto colon = text.find(':');
    require(colon != std::string::npos, ErrorKind::invalid_parameter,
            "target must look like cycle:3 or path:4, got '" + text + "'");
    auto kind = text.substr(0, colon);
    int length = 0;
    try {
        std::size_t used = 0;
        length = std::stoi(text.substr(colon + 1), &used);
        require(used == text.size() - colon - 1, ErrorKind::invalid_parameter, "bad target length in '" + text + "'");
    }
    catch (const std::logic_error &) {
        fail(ErrorKind::invalid_parameter, "bad target length in '" + text + "'");
    }
    if (kind == "cycle" || kind == "C")
        return LooseTemplate::cycle(k, length);
    if (kind == "path" || kind == "P")
        return LooseTemplate::path(k, length);
    fail(ErrorKind::invalid_parameter, "unknown target kind '" + kind + "'");
}

} // namespace ramsey_lab

#endif
