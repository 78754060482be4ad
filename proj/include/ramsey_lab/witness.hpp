#ifndef RAMSEY_LAB_WITNESS_HPP
#define RAMSEY_LAB_WITNESS_HPP

// Extremal lower-bound colorings for loose path/cycle Ramsey numbers.
//
// The host is split into a red core A = {1..a} and the rest B: an edge is red
// iff it lies inside A. A red target needing more than a vertices cannot fit
// in A; every blue edge meets B and every vertex lies in at most two edges of
// a loose structure, so a blue target of length m needs ceil(m/2) vertices of B.

#include <ramsey_lab/embedder.hpp>

#include <string>
#include <utility>

namespace ramsey_lab {

enum class PairKind { PP, PC, CC };

inline auto to_string(PairKind p) -> std::string
{
    switch (p) {
        case PairKind::PP: return "PP";
        case PairKind::PC: return "PC";
        case PairKind::CC: return "CC";
    }
    return "PP";
}

inline auto parse_pair_kind(const std::string & s) -> PairKind
{
    if (s == "PP") return PairKind::PP;
    if (s == "PC") return PairKind::PC;
    if (s == "CC") return PairKind::CC;
    fail(ErrorKind::invalid_parameter, "pair kind must be PP, PC or CC, got '" + s + "'");
}

/// Red (first) and blue (second) targets of a pair kind.
inline auto pair_targets(int k, int n, int m, PairKind pair) -> std::pair<LooseTemplate, LooseTemplate>
{
    switch (pair) {
        case PairKind::PP: return {LooseTemplate::path(k, n), LooseTemplate::path(k, m)};
        case PairKind::PC: return {LooseTemplate::path(k, n), LooseTemplate::cycle(k, m)};
        case PairKind::CC: return {LooseTemplate::cycle(k, n), LooseTemplate::cycle(k, m)};
    }
    fail(ErrorKind::invalid_parameter, "unknown pair kind");
}

/// Conjectured Ramsey value: (k-1)n + floor((m+1)/2) for PP/PC, (k-1)n + floor((m-1)/2) for CC.
inline auto conjectured_value(int k, int n, int m, PairKind pair) -> int
{
    return pair == PairKind::CC ? (k - 1) * n + (m - 1) / 2 : (k - 1) * n + (m + 1) / 2;
}

struct LowerBoundWitness {
    int n_vertices;
    int core_size;
    TwoColoring coloring;
};

/// Self-verified coloring of K^k_{value-1} with no red first target and no
/// blue second target.
inline auto lower_bound_witness(int k, int n, int m, PairKind pair) -> LowerBoundWitness
{
    require(k >= 3, ErrorKind::invalid_parameter, "uniformity must be at least 3");
    int min_m = pair == PairKind::PP ? 2 : 3;
    require(n >= m && m >= min_m, ErrorKind::invalid_parameter,
            "need n >= m >= " + std::to_string(min_m) + " for pair " + to_string(pair));
    int host = conjectured_value(k, n, m, pair) - 1;
    int core = pair == PairKind::CC ? (k - 1) * n - 1 : (k - 1) * n;
    auto coloring = split_coloring(k, host, {core});
    auto [red_target, blue_target] = pair_targets(k, n, m, pair);
    if (auto red = search_embedding(coloring, Color::red, red_target); red.status != SearchStatus::absent)
        fail(ErrorKind::internal_assertion, "witness contains a red " + red_target.name());
    if (auto blue = search_embedding(coloring, Color::blue, blue_target); blue.status != SearchStatus::absent)
        fail(ErrorKind::internal_assertion, "witness contains a blue " + blue_target.name());
    return {host, core, std::move(coloring)};
}

} // namespace ramsey_lab

#endif
