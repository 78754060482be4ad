#ifndef RAMSEY_LAB_PROVER_HPP
#define RAMSEY_LAB_PROVER_HPP

// Ramsey values by ascending search, DIMACS export, and tables derived from
// cycle-cycle values through the path/cycle reductions.

#include <ramsey_lab/arrowing.hpp>
#include <ramsey_lab/witness.hpp>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramsey_lab {

enum class Provenance { closed_form, search_verified, witness_only, theorem_derived, theorem_extended };

inline auto to_string(Provenance p) -> std::string
{
    switch (p) {
        case Provenance::closed_form: return "closed-form";
        case Provenance::search_verified: return "search-verified";
        case Provenance::witness_only: return "witness-only";
        case Provenance::theorem_derived: return "theorem-derived";
        case Provenance::theorem_extended: return "theorem-extended";
    }
    return "closed-form";
}

struct ScanStep {
    int n_vertices;
    ArrowingStatus status;
    ArrowingStats stats;
};

/// A Ramsey value, or the interval [lower, upper] when the scan ran out of
/// budget. `upper` absent means unbounded.
struct RamseyClaim {
    int k = 0;
    LooseTemplate red = LooseTemplate::path(3, 1);
    LooseTemplate blue = LooseTemplate::path(3, 1);
    std::optional<int> value;
    int lower = 0;
    std::optional<int> upper;
    Provenance provenance = Provenance::closed_form;
    std::vector<std::string> derivation;
    std::optional<TwoColoring> witness; // coloring of K^k_{lower-1}
    std::vector<ScanStep> scan;

    [[nodiscard]] auto pair_label() const -> std::string
    {
        return std::string(red.is_cycle() ? "C" : "P") + (blue.is_cycle() ? "C" : "P");
    }

    [[nodiscard]] auto name() const -> std::string
    {
        return "R(" + red.name() + "," + blue.name() + ";k=" + std::to_string(k) + ")";
    }
};

inline auto claim_to_json(const RamseyClaim & c) -> nlohmann::json
{
    nlohmann::json j;
    j["k"] = c.k;
    j["red"] = c.red.name();
    j["blue"] = c.blue.name();
    j["pair"] = c.pair_label();
    j["value"] = c.value ? nlohmann::json(*c.value) : nlohmann::json(nullptr);
    j["interval"] = {c.lower, c.upper ? nlohmann::json(*c.upper) : nlohmann::json(nullptr)};
    j["provenance"] = to_string(c.provenance);
    j["derivation"] = c.derivation;
    auto scan = nlohmann::json::array();
    for (const auto & s : c.scan)
        scan.push_back({{"n_vertices", s.n_vertices}, {"status", to_string(s.status)}, {"nodes", s.stats.nodes},
                {"propagations", s.stats.propagations}, {"wall_seconds", s.stats.wall_seconds}});
    j["scan"] = scan;
    return j;
}

/// Ascending scan over N from the larger target's vertex count: SAT below the
/// value, UNSAT at it. The first UNKNOWN ends the scan with an open interval.
inline auto compute_ramsey(int k, const LooseTemplate & red, const LooseTemplate & blue, const Budget & budget = {},
        const ArrowingOptions & options = {}) -> RamseyClaim
{
    require(red.k() == k && blue.k() == k, ErrorKind::invalid_parameter,
            "targets must have uniformity " + std::to_string(k));
    RamseyClaim claim;
    claim.k = k;
    claim.red = red;
    claim.blue = blue;
    int start = std::max(red.vertex_count(), blue.vertex_count());
    claim.lower = start;
    // the larger target needs `start` vertices, so coloring everything in its
    // color avoids both below `start`
    claim.witness = TwoColoring(k, start - 1);
    if (red.vertex_count() == start)
        for (Rank r = 0; r < claim.witness->edge_count(); ++r)
            claim.witness->set_at(r, Color::red);
    for (int n = start;; ++n) {
        auto verdict = decide_arrowing(k, n, red, blue, budget, options);
        claim.scan.push_back({n, verdict.status, verdict.stats});
        if (verdict.status == ArrowingStatus::SAT) {
            claim.lower = n + 1;
            claim.witness = std::move(verdict.witness);
            continue;
        }
        if (verdict.status == ArrowingStatus::UNSAT) {
            claim.value = n;
            claim.upper = n;
            claim.provenance = Provenance::search_verified;
            claim.derivation.push_back("SAT witness at N=" + std::to_string(n - 1) + ", UNSAT at N=" + std::to_string(n));
        }
        else {
            claim.provenance = Provenance::witness_only;
            claim.derivation.push_back("SAT witness at N=" + std::to_string(n - 1) + ", budget exhausted at N="
                    + std::to_string(n));
        }
        return claim;
    }
}

struct CnfDocument {
    std::string cnf;
    nlohmann::json sidecar;
};

namespace detail {

    inline auto fnv1a64(const std::string & s) -> std::string
    {
        std::uint64_t h = 14695981039346656037ULL;
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

} // namespace detail

/// Variable r+1 is the edge of colex rank r, positive = red.
inline auto export_dimacs(int k, int n_vertices, const LooseTemplate & red, const LooseTemplate & blue) -> CnfDocument
{
    require(red.vertex_count() <= n_vertices && blue.vertex_count() <= n_vertices, ErrorKind::invalid_parameter,
            "targets do not fit in " + std::to_string(n_vertices) + " vertices");
    auto store = build_clauses(k, n_vertices, red, blue);

    auto map = nlohmann::json::array();
    for (Rank r = 0; r < store.variables; ++r)
        map.push_back(edge_unrank(r, k).vertices());
    auto digest = detail::fnv1a64(map.dump());

    std::string out;
    out += "c ramsey-lab k=" + std::to_string(k) + " N=" + std::to_string(n_vertices) + " red=" + red.name()
        + " blue=" + blue.name() + "\n";
    out += "c variable r+1 = edge of colex rank r, positive literal = red\n";
    out += "c map-digest fnv1a64 " + digest + "\n";
    out += "p cnf " + std::to_string(store.variables) + " "
        + std::to_string(store.red_copies.size() + store.blue_copies.size()) + "\n";
    for (const auto & copy : store.red_copies) {
        for (auto r : copy)
            out += "-" + std::to_string(r + 1) + " ";
        out += "0\n";
    }
    for (const auto & copy : store.blue_copies) {
        for (auto r : copy)
            out += std::to_string(r + 1) + " ";
        out += "0\n";
    }

    nlohmann::json side;
    side["k"] = k;
    side["n_vertices"] = n_vertices;
    side["red"] = red.name();
    side["blue"] = blue.name();
    side["variables"] = store.variables;
    side["red_clauses"] = store.red_copies.size();
    side["blue_clauses"] = store.blue_copies.size();
    side["map_digest"] = digest;
    side["edges"] = map;
    return {std::move(out), std::move(side)};
}

/// A cycle-cycle value used as input to derive_table.
inline auto cycle_claim(int k, int n, int m, int value, Provenance provenance, std::string source) -> RamseyClaim
{
    RamseyClaim c;
    c.k = k;
    c.red = LooseTemplate::cycle(k, n);
    c.blue = LooseTemplate::cycle(k, m);
    c.value = value;
    c.lower = value;
    c.upper = value;
    c.provenance = provenance;
    c.derivation.push_back(std::move(source));
    return c;
}

/// From R(C_n,C_m) = (k-1)n + floor((m-1)/2) derives R(P_n,C_m), R(P_n,P_{m-1})
/// and, for n = m, R(P_n,P_n). For k >= 4, a base covering every n in [m,2m]
/// extends the cycle-cycle value to all n up to `max_n`.
inline auto derive_table(int k, const std::vector<RamseyClaim> & base, int max_n = 0) -> std::vector<RamseyClaim>
{
    std::vector<RamseyClaim> out;
    auto make = [&](const RamseyClaim & from, LooseTemplate red, LooseTemplate blue, int value, Provenance p,
                        const std::string & step) {
        RamseyClaim c;
        c.k = k;
        c.red = std::move(red);
        c.blue = std::move(blue);
        c.value = value;
        c.lower = value;
        c.upper = value;
        c.provenance = p;
        c.derivation = from.derivation;
        c.derivation.push_back(step + " from " + from.name() + "=" + std::to_string(*from.value));
        out.push_back(std::move(c));
    };

    std::map<int, std::map<int, const RamseyClaim *>> by_m;
    for (const auto & b : base) {
        require(b.k == k && b.red.is_cycle() && b.blue.is_cycle() && b.value.has_value(), ErrorKind::invalid_parameter,
                "base entries must be valued cycle-cycle claims at k=" + std::to_string(k));
        int n = b.red.length();
        int m = b.blue.length();
        require(n >= m, ErrorKind::invalid_parameter, "base entries need n >= m");
        int expected = (k - 1) * n + (m - 1) / 2;
        if (*b.value != expected)
            fail(ErrorKind::inconsistent_base, b.name() + "=" + std::to_string(*b.value) + " but the reduction needs "
                    + std::to_string(expected));
        by_m[m][n] = &b;

        make(b, LooseTemplate::path(k, n), LooseTemplate::cycle(k, m), (k - 1) * n + (m + 1) / 2,
                Provenance::theorem_derived, "path-cycle reduction");
        if (m - 1 >= 1)
            make(b, LooseTemplate::path(k, n), LooseTemplate::path(k, m - 1), (k - 1) * n + m / 2,
                    Provenance::theorem_derived, "path-path reduction");
        if (n == m)
            make(b, LooseTemplate::path(k, n), LooseTemplate::path(k, n), (k - 1) * n + (n + 1) / 2,
                    Provenance::theorem_derived, "diagonal path reduction");
    }

    if (k >= 4)
        for (const auto & [m, row] : by_m) {
            bool covered = true;
            for (int n = m; n <= 2 * m && covered; ++n)
                covered = row.count(n) > 0;
            if (! covered)
                continue;
            const auto & anchor = *row.at(2 * m);
            for (int n = 2 * m + 1; n <= max_n; ++n) {
                if (row.count(n))
                    continue;
                make(anchor, LooseTemplate::cycle(k, n), LooseTemplate::cycle(k, m), (k - 1) * n + (m - 1) / 2,
                        Provenance::theorem_extended, "cycle extension over n in [" + std::to_string(m) + ","
                                + std::to_string(2 * m) + "]");
            }
        }
    return out;
}

} // namespace ramsey_lab

#endif
