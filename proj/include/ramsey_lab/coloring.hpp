#ifndef RAMSEY_LAB_COLORING_HPP
#define RAMSEY_LAB_COLORING_HPP

// Complete-host 2-colorings stored as one bit per k-subset of 1..N,
// indexed by colex rank. Bit value 1 = red, 0 = blue.

#include <ramsey_lab/core.hpp>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace ramsey_lab {

using Rank = std::int64_t;

enum class Color : std::uint8_t { blue = 0, red = 1 };

inline auto opposite(Color c) -> Color { return c == Color::red ? Color::blue : Color::red; }
inline auto to_string(Color c) -> std::string { return c == Color::red ? "red" : "blue"; }

inline constexpr int max_host_size = 96;

/// Binomial coefficient C(n, r); zero outside 0 <= r <= n.
inline auto binomial(int n, int r) -> Rank
{
    static const auto table = [] {
        std::vector<std::array<Rank, 17>> t(max_host_size + 1);
        for (int a = 0; a <= max_host_size; ++a)
            for (int b = 0; b <= 16; ++b) {
                if (b == 0)
                    t[a][b] = 1;
                else if (a == 0)
                    t[a][b] = 0;
                else {
                    auto sum = static_cast<long double>(t[a - 1][b - 1]) + static_cast<long double>(t[a - 1][b]);
                    t[a][b] = sum > static_cast<long double>(std::numeric_limits<Rank>::max() / 2)
                        ? std::numeric_limits<Rank>::max() / 2 : t[a - 1][b - 1] + t[a - 1][b];
                }
            }
        return t;
    }();
    if (r < 0 || n < 0 || r > n)
        return 0;
    if (n <= max_host_size && r <= 16)
        return table[n][r];
    // outside the table: multiplicative formula
    long double value = 1;
    for (int i = 1; i <= r; ++i)
        value = value * (n - r + i) / i;
    return static_cast<Rank>(value + 0.5L);
}

/// Colex rank of an ascending k-set: sum over i of C(a_i - 1, i).
inline auto edge_rank(std::span<const Vertex> sorted) -> Rank
{
    Rank r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        r += binomial(sorted[i] - 1, static_cast<int>(i) + 1);
    return r;
}

/// Checked rank of an edge inside host 1..N of uniformity k.
inline auto edge_rank(const Edge & e, int n_vertices, int k) -> Rank
{
    require(static_cast<int>(e.size()) == k, ErrorKind::malformed_edge,
            "edge " + to_string(e) + " does not have " + std::to_string(k) + " vertices");
    require(e.size() > 0 && e.back() <= n_vertices, ErrorKind::malformed_edge,
            "edge " + to_string(e) + " leaves host 1.." + std::to_string(n_vertices));
    return edge_rank(e.vertices());
}

inline auto edge_unrank(Rank rank, int k) -> Edge
{
    require(rank >= 0 && k >= 1, ErrorKind::invalid_parameter, "negative rank");
    std::vector<Vertex> vertices(static_cast<std::size_t>(k));
    for (int i = k; i >= 1; --i) {
        // largest a with C(a-1, i) <= rank
        int a = i;
        while (binomial(a, i) <= rank)
            ++a;
        vertices[static_cast<std::size_t>(i - 1)] = a;
        rank -= binomial(a - 1, i);
    }
    return Edge(std::move(vertices));
}

/// Total red/blue assignment on every k-subset of 1..N.
class TwoColoring {
public:
    TwoColoring(int k, int n_vertices, Color fill = Color::blue) :
        _k(k), _n(n_vertices)
    {
        require(k >= 1 && k <= 16, ErrorKind::invalid_parameter, "uniformity out of supported range");
        require(n_vertices >= 0 && n_vertices <= max_host_size, ErrorKind::invalid_parameter,
                "host size out of supported range 0.." + std::to_string(max_host_size));
        auto count = binomial(n_vertices, k);
        require(count <= (Rank{1} << 28), ErrorKind::invalid_parameter, "host too large to store");
        _bits.assign(static_cast<std::size_t>(count), static_cast<std::uint8_t>(fill));
    }

    [[nodiscard]] auto k() const noexcept -> int { return _k; }
    [[nodiscard]] auto n_vertices() const noexcept -> int { return _n; }
    [[nodiscard]] auto edge_count() const noexcept -> Rank { return static_cast<Rank>(_bits.size()); }

    [[nodiscard]] auto color_at(Rank r) const -> Color { return static_cast<Color>(_bits[static_cast<std::size_t>(r)]); }
    [[nodiscard]] auto is_red_at(Rank r) const -> bool { return _bits[static_cast<std::size_t>(r)] != 0; }
    void set_at(Rank r, Color c) { _bits.at(static_cast<std::size_t>(r)) = static_cast<std::uint8_t>(c); }

    [[nodiscard]] auto color(const Edge & e) const -> Color { return color_at(edge_rank(e, _n, _k)); }
    [[nodiscard]] auto is_red(const Edge & e) const -> bool { return color(e) == Color::red; }
    void set(const Edge & e, Color c) { set_at(edge_rank(e, _n, _k), c); }

    [[nodiscard]] auto count(Color c) const -> Rank
    {
        Rank total = 0;
        for (auto b : _bits)
            total += (b == static_cast<std::uint8_t>(c));
        return total;
    }

    [[nodiscard]] auto edges_of(Color c) const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (Rank r = 0; r < edge_count(); ++r)
            if (color_at(r) == c)
                result.push_back(edge_unrank(r, _k));
        return result;
    }

    [[nodiscard]] auto raw() const noexcept -> const std::vector<std::uint8_t> & { return _bits; }

    auto operator==(const TwoColoring &) const -> bool = default;

private:
    int _k;
    int _n;
    std::vector<std::uint8_t> _bits;
};

/// Red core A = {1..a}; B = {a+1..N}.
struct SplitSpec {
    int a;
};

/// Red iff the edge lies entirely inside 1..a.
inline auto split_coloring(int k, int n_vertices, SplitSpec spec) -> TwoColoring
{
    require(spec.a >= 0 && spec.a <= n_vertices, ErrorKind::invalid_parameter,
            "split size must lie in 0..N");
    TwoColoring coloring(k, n_vertices);
    // colex order lists all k-subsets of 1..a first
    auto red = binomial(spec.a, k);
    for (Rank r = 0; r < red; ++r)
        coloring.set_at(r, Color::red);
    return coloring;
}

// ---- file format ----

inline auto to_hex(const TwoColoring & c) -> std::string
{
    static constexpr char digits[] = "0123456789abcdef";
    auto count = c.edge_count();
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>((count + 7) / 8), 0);
    for (Rank r = 0; r < count; ++r)
        if (c.is_red_at(r))
            bytes[static_cast<std::size_t>(r / 8)] |= static_cast<std::uint8_t>(1u << (r % 8));
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out += digits[b >> 4];
        out += digits[b & 15];
    }
    return out;
}

inline auto coloring_to_json(const TwoColoring & c, bool explicit_form = false) -> nlohmann::json
{
    nlohmann::json j;
    j["k"] = c.k();
    j["n_vertices"] = c.n_vertices();
    j["red_bit"] = 1;
    if (explicit_form) {
        j["encoding"] = "explicit";
        auto list = nlohmann::json::array();
        for (const auto & e : c.edges_of(Color::red))
            list.push_back(std::vector<Vertex>(e.begin(), e.end()));
        j["red_edges"] = std::move(list);
    }
    else {
        j["encoding"] = "colex-bits-hex";
        j["bits"] = to_hex(c);
    }
    return j;
}

inline auto coloring_from_json(const nlohmann::json & j) -> TwoColoring
{
    try {
        int k = j.at("k").get<int>();
        int n = j.at("n_vertices").get<int>();
        if (j.contains("red_bit"))
            require(j.at("red_bit").get<int>() == 1, ErrorKind::invalid_parameter, "only red_bit = 1 is supported");
        TwoColoring c(k, n);
        if (j.contains("bits")) {
            auto hex = j.at("bits").get<std::string>();
            require(static_cast<Rank>(hex.size()) == 2 * ((c.edge_count() + 7) / 8), ErrorKind::invalid_parameter,
                    "bits field has wrong length for C(N,k)");
            auto nibble = [](char ch) -> int {
                if (ch >= '0' && ch <= '9') return ch - '0';
                if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
                if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
                fail(ErrorKind::invalid_parameter, "bits field is not hex");
            };
            for (Rank r = 0; r < c.edge_count(); ++r) {
                auto byte = nibble(hex[static_cast<std::size_t>(2 * (r / 8))]) * 16
                    + nibble(hex[static_cast<std::size_t>(2 * (r / 8) + 1)]);
                if (byte >> (r % 8) & 1)
                    c.set_at(r, Color::red);
            }
        }
        else {
            for (const auto & item : j.at("red_edges")) {
                Edge e(item.get<std::vector<Vertex>>());
                c.set(e, Color::red);
            }
        }
        return c;
    }
    catch (const nlohmann::json::exception & ex) {
        fail(ErrorKind::invalid_parameter, std::string("malformed coloring document: ") + ex.what());
    }
}

} // namespace ramsey_lab

#endif
