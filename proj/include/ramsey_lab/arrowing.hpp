#ifndef RAMSEY_LAB_ARROWING_HPP
#define RAMSEY_LAB_ARROWING_HPP

// Decides K^k_N -> (red target, blue target) at desk scale.
//
// Variables are the edges of K^k_N (true = red). Every copy of the red
// target gives the clause "not all of these red"; every copy of the blue
// target gives "not all of these blue". The engine is a DPLL search with
// two-watched-literal unit propagation and chronological backtracking,
// branching on the lowest-rank unassigned edge.

#include <ramsey_lab/embedder.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>
#include <vector>

namespace ramsey_lab {

/// Copies of the red and blue targets in K^k_N as sorted edge-rank lists.
struct ClauseStore {
    int k = 0;
    int n_vertices = 0;
    Rank variables = 0;
    std::vector<std::vector<Rank>> red_copies;
    std::vector<std::vector<Rank>> blue_copies;
};

namespace detail {

    inline auto cache_key(int n_vertices, int k, const LooseTemplate & t) -> std::string
    {
        return "copies_k" + std::to_string(k) + "_n" + std::to_string(n_vertices) + "_"
            + (t.is_cycle() ? "cycle" : "path") + std::to_string(t.length()) + ".txt";
    }

    inline auto load_cached(const std::filesystem::path & file) -> std::optional<std::vector<std::vector<Rank>>>
    {
        std::ifstream in(file);
        if (! in)
            return std::nullopt;
        std::size_t count = 0;
        std::size_t width = 0;
        if (! (in >> count >> width))
            return std::nullopt;
        std::vector<std::vector<Rank>> copies(count, std::vector<Rank>(width));
        for (auto & copy : copies)
            for (auto & r : copy)
                if (! (in >> r))
                    return std::nullopt;
        return copies;
    }

    inline void store_cached(const std::filesystem::path & file, const std::vector<std::vector<Rank>> & copies)
    {
        std::error_code ec;
        std::filesystem::create_directories(file.parent_path(), ec);
        std::ofstream out(file);
        if (! out)
            return;
        out << copies.size() << ' ' << (copies.empty() ? 0 : copies.front().size()) << '\n';
        for (const auto & copy : copies) {
            for (auto r : copy)
                out << r << ' ';
            out << '\n';
        }
    }

} // namespace detail

/// Copy enumeration memoized per (N, k, template) in-process, and on disk
/// under $RAMSEY_LAB_CACHE when that variable is set. Memory is
/// copies x length ranks.
inline auto cached_copies(int n_vertices, int k, const LooseTemplate & t) -> std::vector<std::vector<Rank>>
{
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int, int>, std::vector<std::vector<Rank>>> memo;
    auto key = std::make_tuple(n_vertices, k, static_cast<int>(t.kind()), t.length());
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
    }
    std::optional<std::filesystem::path> file;
    if (const char * dir = std::getenv("RAMSEY_LAB_CACHE"); dir && *dir)
        file = std::filesystem::path(dir) / detail::cache_key(n_vertices, k, t);
    std::optional<std::vector<std::vector<Rank>>> copies;
    if (file)
        copies = detail::load_cached(*file);
    if (! copies) {
        copies = enumerate_copies(n_vertices, k, t);
        if (file)
            detail::store_cached(*file, *copies);
    }
    std::lock_guard lock(mutex);
    memo[key] = *copies;
    return *copies;
}

inline auto build_clauses(int k, int n_vertices, const LooseTemplate & red_target, const LooseTemplate & blue_target) -> ClauseStore
{
    require(red_target.k() == k && blue_target.k() == k, ErrorKind::invalid_parameter,
            "targets must have uniformity " + std::to_string(k));
    require(k >= 3 && n_vertices >= k, ErrorKind::invalid_parameter, "host must have at least k vertices");
    ClauseStore store;
    store.k = k;
    store.n_vertices = n_vertices;
    store.variables = binomial(n_vertices, k);
    store.red_copies = cached_copies(n_vertices, k, red_target);
    store.blue_copies = cached_copies(n_vertices, k, blue_target);
    return store;
}

enum class ArrowingStatus { SAT, UNSAT, UNKNOWN };

inline auto to_string(ArrowingStatus s) -> std::string
{
    switch (s) {
        case ArrowingStatus::SAT: return "SAT";
        case ArrowingStatus::UNSAT: return "UNSAT";
        case ArrowingStatus::UNKNOWN: return "UNKNOWN";
    }
    return "UNKNOWN";
}

struct Budget {
    std::uint64_t max_nodes = 0; // 0 = unlimited
    double max_secs = 0;         // 0 = unlimited
};

struct ArrowingOptions {
    bool symmetry_pruning = false;
    bool reverse_order = false; // branch on the highest-rank edge instead
    bool blue_first = false;    // try blue before red at decisions
    int threads = 1;
};

struct ArrowingStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
    double wall_seconds = 0;
};

struct ArrowingVerdict {
    ArrowingStatus status = ArrowingStatus::UNKNOWN;
    std::optional<TwoColoring> witness;
    ArrowingStats stats;
    Budget budget;
};

namespace detail {

    class ArrowingSolver {
    public:
        ArrowingSolver(const ClauseStore & store, const ArrowingOptions & options, const Budget & budget,
                const std::atomic<bool> * cancel = nullptr) :
            _store(store), _options(options), _budget(budget), _cancel(cancel),
            _vars(static_cast<int>(store.variables)),
            _value(static_cast<std::size_t>(_vars), -1),
            _watches(static_cast<std::size_t>(2 * _vars))
        {
            // literal 2v = "v is red", 2v+1 = "v is blue"
            for (const auto & copy : store.red_copies)
                add_clause(copy, 1);
            for (const auto & copy : store.blue_copies)
                add_clause(copy, 0);
            if (options.symmetry_pruning)
                build_transpositions();
            _start = std::chrono::steady_clock::now();
        }

        enum class Outcome { sat, unsat, unknown };

        /// Explores the subtree under the given decision prefix.
        auto solve(const std::vector<std::pair<int, int>> & prefix = {}) -> Outcome
        {
            if (_trivially_unsat)
                return Outcome::unsat;
            for (auto lit : _units)
                if (! enqueue(lit))
                    return Outcome::unsat;
            if (! propagate() || ! symmetry_ok())
                return Outcome::unsat;
            for (auto [var, val] : prefix) {
                if (_value[static_cast<std::size_t>(var)] != -1) {
                    if (_value[static_cast<std::size_t>(var)] != val)
                        return Outcome::unsat;
                    continue;
                }
                _trail_limits.push_back(_trail.size());
                enqueue(literal(var, val));
                if (! propagate() || ! symmetry_ok())
                    return Outcome::unsat;
            }
            _root_level = _trail_limits.size();
            return search();
        }

        /// Decision prefixes at the given depth, in DFS order.
        auto cubes(int depth) -> std::vector<std::vector<std::pair<int, int>>>
        {
            std::vector<std::vector<std::pair<int, int>>> out;
            if (_trivially_unsat)
                return out;
            for (auto lit : _units)
                if (! enqueue(lit))
                    return out;
            if (! propagate() || ! symmetry_ok())
                return out;
            std::vector<std::pair<int, int>> prefix;
            collect_cubes(depth, prefix, out);
            return out;
        }

        [[nodiscard]] auto model() const -> TwoColoring
        {
            TwoColoring c(_store.k, _store.n_vertices);
            for (int v = 0; v < _vars; ++v)
                c.set_at(v, _value[static_cast<std::size_t>(v)] == 1 ? Color::red : Color::blue);
            return c;
        }

        [[nodiscard]] auto nodes() const noexcept -> std::uint64_t { return _nodes; }
        [[nodiscard]] auto propagations() const noexcept -> std::uint64_t { return _propagations; }

    private:
        static auto literal(int var, int val) -> int { return 2 * var + (val == 1 ? 0 : 1); }
        static auto var_of(int lit) -> int { return lit >> 1; }
        static auto val_of(int lit) -> int { return (lit & 1) ? 0 : 1; }

        void add_clause(const std::vector<Rank> & copy, int forbidden_value)
        {
            // clause: some edge of the copy differs from forbidden_value
            std::vector<int> lits;
            for (auto r : copy)
                lits.push_back(literal(static_cast<int>(r), 1 - forbidden_value));
            if (lits.empty()) {
                _trivially_unsat = true;
                return;
            }
            if (lits.size() == 1) {
                _units.push_back(lits.front());
                return;
            }
            auto index = static_cast<int>(_clauses.size());
            _clauses.push_back(std::move(lits));
            _watches[static_cast<std::size_t>(_clauses.back()[0] ^ 1)].push_back(index);
            _watches[static_cast<std::size_t>(_clauses.back()[1] ^ 1)].push_back(index);
        }

        auto lit_value(int lit) const -> int
        {
            auto v = _value[static_cast<std::size_t>(var_of(lit))];
            if (v < 0)
                return -1;
            return v == val_of(lit) ? 1 : 0;
        }

        auto enqueue(int lit) -> bool
        {
            auto current = lit_value(lit);
            if (current == 0)
                return false;
            if (current == 1)
                return true;
            _value[static_cast<std::size_t>(var_of(lit))] = static_cast<std::int8_t>(val_of(lit));
            _trail.push_back(lit);
            return true;
        }

        // watches are indexed by the negation of the watched literal: when
        // literal l becomes true, clauses watching ~l are visited
        auto propagate() -> bool
        {
            while (_queue_head < _trail.size()) {
                int lit = _trail[_queue_head++];
                ++_propagations;
                auto & list = _watches[static_cast<std::size_t>(lit)];
                std::size_t keep = 0;
                bool conflict = false;
                for (std::size_t w = 0; w < list.size(); ++w) {
                    int ci = list[w];
                    if (conflict) {
                        list[keep++] = ci;
                        continue;
                    }
                    auto & cl = _clauses[static_cast<std::size_t>(ci)];
                    int false_lit = lit ^ 1;
                    if (cl[0] == false_lit)
                        std::swap(cl[0], cl[1]);
                    if (lit_value(cl[0]) == 1) {
                        list[keep++] = ci;
                        continue;
                    }
                    bool moved = false;
                    for (std::size_t j = 2; j < cl.size(); ++j)
                        if (lit_value(cl[j]) != 0) {
                            std::swap(cl[1], cl[j]);
                            _watches[static_cast<std::size_t>(cl[1] ^ 1)].push_back(ci);
                            moved = true;
                            break;
                        }
                    if (moved)
                        continue;
                    list[keep++] = ci;
                    if (! enqueue(cl[0]))
                        conflict = true;
                }
                list.resize(keep);
                if (conflict) {
                    _queue_head = _trail.size();
                    return false;
                }
            }
            return true;
        }

        void backtrack_to(std::size_t level)
        {
            auto limit = _trail_limits[level];
            while (_trail.size() > limit) {
                _value[static_cast<std::size_t>(var_of(_trail.back()))] = -1;
                _trail.pop_back();
            }
            _trail_limits.resize(level);
            _queue_head = _trail.size();
        }

        auto pick_branch() const -> int
        {
            if (_options.reverse_order) {
                for (int v = _vars - 1; v >= 0; --v)
                    if (_value[static_cast<std::size_t>(v)] < 0)
                        return v;
            }
            else
                for (int v = 0; v < _vars; ++v)
                    if (_value[static_cast<std::size_t>(v)] < 0)
                        return v;
            return -1;
        }

        auto first_value() const -> int { return _options.blue_first ? 0 : 1; }

        void build_transpositions()
        {
            int n = _store.n_vertices;
            int k = _store.k;
            for (int j = 1; j < n; ++j) {
                std::vector<int> perm(static_cast<std::size_t>(_vars));
                for_each_k_subset(n, k, [&](Rank r, std::span<const Vertex> vs) {
                    std::vector<Vertex> image(vs.begin(), vs.end());
                    for (auto & v : image)
                        v = v == j ? j + 1 : (v == j + 1 ? j : v);
                    std::sort(image.begin(), image.end());
                    perm[static_cast<std::size_t>(r)] = static_cast<int>(edge_rank(image));
                });
                _transpositions.push_back(std::move(perm));
            }
        }

        // Lex-leader (maximum) under adjacent vertex transpositions: reject
        // partial colorings already known to be lexicographically below
        // their image, comparing edges in rank order.
        auto symmetry_ok() const -> bool
        {
            for (const auto & perm : _transpositions)
                for (int p = 0; p < _vars; ++p) {
                    int q = perm[static_cast<std::size_t>(p)];
                    if (q == p)
                        continue;
                    int a = _value[static_cast<std::size_t>(p)];
                    int b = _value[static_cast<std::size_t>(q)];
                    if (a < 0 || b < 0)
                        break;
                    if (a == b)
                        continue;
                    if (a < b)
                        return false;
                    break;
                }
            return true;
        }

        auto out_of_budget() -> bool
        {
            if (_budget.max_nodes && _nodes >= _budget.max_nodes)
                return true;
            if ((_nodes & 1023) == 0) {
                if (_cancel && _cancel->load(std::memory_order_relaxed))
                    return true;
                if (_budget.max_secs > 0) {
                    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - _start;
                    if (elapsed.count() >= _budget.max_secs)
                        return true;
                }
            }
            return false;
        }

        auto search() -> Outcome
        {
            // decisions above the root: (var, tried second value yet?)
            std::vector<std::pair<int, bool>> decisions;
            while (true) {
                int var = pick_branch();
                if (var < 0)
                    return Outcome::sat;
                if (out_of_budget())
                    return Outcome::unknown;
                ++_nodes;
                decisions.emplace_back(var, false);
                _trail_limits.push_back(_trail.size());
                enqueue(literal(var, first_value()));
                while (! propagate() || ! symmetry_ok()) {
                    // flip the deepest decision that still has an untried value
                    while (! decisions.empty() && decisions.back().second) {
                        decisions.pop_back();
                        backtrack_to(_root_level + decisions.size());
                    }
                    if (decisions.empty())
                        return Outcome::unsat;
                    auto & top = decisions.back();
                    backtrack_to(_root_level + decisions.size() - 1);
                    top.second = true;
                    _trail_limits.push_back(_trail.size());
                    enqueue(literal(top.first, 1 - first_value()));
                }
            }
        }

        void collect_cubes(int depth, std::vector<std::pair<int, int>> & prefix,
                std::vector<std::vector<std::pair<int, int>>> & out)
        {
            int var = pick_branch();
            if (depth == 0 || var < 0) {
                out.push_back(prefix);
                return;
            }
            for (int val : {first_value(), 1 - first_value()}) {
                _trail_limits.push_back(_trail.size());
                enqueue(literal(var, val));
                if (propagate() && symmetry_ok()) {
                    prefix.emplace_back(var, val);
                    collect_cubes(depth - 1, prefix, out);
                    prefix.pop_back();
                }
                backtrack_to(_trail_limits.size() - 1);
            }
        }

        const ClauseStore & _store;
        ArrowingOptions _options;
        Budget _budget;
        const std::atomic<bool> * _cancel;
        int _vars;
        std::vector<std::int8_t> _value;
        std::vector<std::vector<int>> _clauses;
        std::vector<std::vector<int>> _watches;
        std::vector<int> _units;
        std::vector<int> _trail;
        std::vector<std::size_t> _trail_limits;
        std::size_t _queue_head = 0;
        std::size_t _root_level = 0;
        bool _trivially_unsat = false;
        std::vector<std::vector<int>> _transpositions;
        std::uint64_t _nodes = 0;
        std::uint64_t _propagations = 0;
        std::chrono::steady_clock::time_point _start;
    };

} // namespace detail

/// Runs the search over a prepared clause store.
inline auto decide_arrowing(const ClauseStore & store, const Budget & budget = {}, const ArrowingOptions & options = {}) -> ArrowingVerdict
{
    auto start = std::chrono::steady_clock::now();
    ArrowingVerdict verdict;
    verdict.budget = budget;
    using Outcome = detail::ArrowingSolver::Outcome;

    if (options.threads <= 1) {
        detail::ArrowingSolver solver(store, options, budget);
        auto outcome = solver.solve();
        verdict.stats.nodes = solver.nodes();
        verdict.stats.propagations = solver.propagations();
        if (outcome == Outcome::sat) {
            verdict.status = ArrowingStatus::SAT;
            verdict.witness = solver.model();
        }
        else
            verdict.status = outcome == Outcome::unsat ? ArrowingStatus::UNSAT : ArrowingStatus::UNKNOWN;
    }
    else {
        // split the top decision levels into cubes; the first satisfiable cube
        // in DFS order supplies the witness, matching the single-threaded run
        int depth = 0;
        while ((1 << depth) < 4 * options.threads && depth < 12)
            ++depth;
        std::vector<std::vector<std::pair<int, int>>> cubes;
        {
            detail::ArrowingSolver splitter(store, options, budget);
            cubes = splitter.cubes(depth);
        }
        std::vector<Outcome> outcomes(cubes.size(), Outcome::unknown);
        std::vector<std::optional<TwoColoring>> models(cubes.size());
        std::atomic<std::size_t> next{0};
        std::atomic<bool> cancel{false};
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<std::uint64_t> propagations{0};
        std::mutex sat_mutex;
        std::size_t first_sat = cubes.size();
        std::vector<std::thread> workers;
        auto per_cube_budget = budget;
        for (int t = 0; t < options.threads; ++t)
            workers.emplace_back([&] {
                while (true) {
                    auto i = next.fetch_add(1);
                    if (i >= cubes.size())
                        return;
                    {
                        std::lock_guard lock(sat_mutex);
                        if (i > first_sat)
                            continue;
                    }
                    detail::ArrowingSolver solver(store, options, per_cube_budget, &cancel);
                    outcomes[i] = solver.solve(cubes[i]);
                    nodes += solver.nodes();
                    propagations += solver.propagations();
                    if (outcomes[i] == Outcome::sat) {
                        models[i] = solver.model();
                        std::lock_guard lock(sat_mutex);
                        first_sat = std::min(first_sat, i);
                    }
                }
            });
        for (auto & w : workers)
            w.join();
        verdict.stats.nodes = nodes;
        verdict.stats.propagations = propagations;
        verdict.status = ArrowingStatus::UNSAT;
        for (std::size_t i = 0; i < cubes.size(); ++i) {
            if (outcomes[i] == Outcome::sat) {
                verdict.status = ArrowingStatus::SAT;
                verdict.witness = models[i];
                break;
            }
            if (outcomes[i] == Outcome::unknown) {
                verdict.status = ArrowingStatus::UNKNOWN;
                break;
            }
        }
    }
    verdict.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (verdict.status == ArrowingStatus::SAT)
        require(verdict.witness.has_value(), ErrorKind::internal_assertion, "SAT verdict without witness");
    return verdict;
}

/// Decides whether every coloring of K^k_N holds a red `red_target` or a blue
/// `blue_target`. SAT witnesses are re-verified by the embedder.
inline auto decide_arrowing(int k, int n_vertices, const LooseTemplate & red_target, const LooseTemplate & blue_target,
        const Budget & budget = {}, const ArrowingOptions & options = {}) -> ArrowingVerdict
{
    auto store = build_clauses(k, n_vertices, red_target, blue_target);
    auto verdict = decide_arrowing(store, budget, options);
    if (verdict.witness) {
        auto red = search_embedding(*verdict.witness, Color::red, red_target);
        auto blue = search_embedding(*verdict.witness, Color::blue, blue_target);
        require(red.status == SearchStatus::absent && blue.status == SearchStatus::absent,
                ErrorKind::internal_assertion, "SAT witness failed independent verification");
    }
    return verdict;
}

} // namespace ramsey_lab

#endif
