#ifndef RAMSEY_LAB_CERTIFICATE_HPP
#define RAMSEY_LAB_CERTIFICATE_HPP

// Certificate documents and their checker. The checker only uses the
// embedder, the validators and, for UNSAT claims, a rerun of the arrowing
// engine under a different branching order.

#include <ramsey_lab/arrowing.hpp>
#include <ramsey_lab/constructive.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace ramsey_lab {

struct CertificateMeta {
    std::string lemma;
    std::uint64_t seed = 0;
    bool budget_exhausted = false;
    std::string note;
};

struct CertificateCheck {
    bool ok = false;
    std::string reason;
};

namespace detail {

    inline auto meta_json(const CertificateMeta & m) -> nlohmann::json
    {
        nlohmann::json j{{"lemma", m.lemma}, {"seed", m.seed}, {"budget_exhausted", m.budget_exhausted},
            {"claim_level", m.budget_exhausted ? "instance-certified" : "lemma-certified"}};
        if (! m.note.empty())
            j["note"] = m.note;
        return j;
    }

    inline auto document(std::string type, const TwoColoring * c, nlohmann::json payload, const CertificateMeta & meta)
        -> nlohmann::json
    {
        return {{"type", std::move(type)}, {"coloring_ref", c ? coloring_to_json(*c) : nlohmann::json(nullptr)},
            {"payload", std::move(payload)}, {"meta", meta_json(meta)}};
    }

    inline auto edge_json(const Edge & e) -> nlohmann::json { return e.vertices(); }

    inline auto edge_from(const nlohmann::json & j) -> Edge { return Edge(j.get<std::vector<Vertex>>()); }

    inline auto color_from(const std::string & s) -> Color
    {
        if (s == "red")
            return Color::red;
        if (s == "blue")
            return Color::blue;
        fail(ErrorKind::malformed_certificate, "unknown color '" + s + "'");
    }

    inline auto claim_from(const std::string & s) -> ColorClaim
    {
        if (s == "any")
            return ColorClaim::any;
        return claim_of(color_from(s));
    }

} // namespace detail

inline auto embedding_to_json(const Embedding & e) -> nlohmann::json
{
    return {{"shape", e.shape.name()}, {"k", e.shape.k()}, {"assignment", e.assignment},
        {"color", to_string(e.claimed_color)}};
}

inline auto embedding_from_json(const nlohmann::json & j) -> Embedding
{
    int k = j.at("k").get<int>();
    return {parse_target(j.at("shape").get<std::string>(), k), j.at("assignment").get<std::vector<Vertex>>(),
        detail::claim_from(j.at("color").get<std::string>())};
}

// ---- producers ----

inline auto embedding_certificate(const TwoColoring & c, const Embedding & e, const CertificateMeta & meta = {})
    -> nlohmann::json
{
    return detail::document("embedding", &c, embedding_to_json(e), meta);
}

inline auto pair_set_certificate(const TwoColoring & c, const std::vector<BichromaticPair> & pairs, bool disjoint,
        const CertificateMeta & meta = {}) -> nlohmann::json
{
    auto list = nlohmann::json::array();
    for (const auto & p : pairs)
        list.push_back({{"red", detail::edge_json(p.red_edge)}, {"blue", detail::edge_json(p.blue_edge)}});
    return detail::document("pair-set", &c, {{"pairs", list}, {"disjoint", disjoint}}, meta);
}

inline auto join_trace_certificate(const TwoColoring & c, const JoinTrace & t, int n, int m, int l,
        CertificateMeta meta = {}) -> nlohmann::json
{
    auto steps = nlohmann::json::array();
    for (const auto & s : t.steps) {
        nlohmann::json js{{"label", s.label}};
        if (s.g)
            js["g"] = detail::edge_json(*s.g);
        if (s.g_color)
            js["g_color"] = to_string(*s.g_color);
        if (s.h)
            js["h"] = detail::edge_json(*s.h);
        if (s.h_color)
            js["h_color"] = to_string(*s.h_color);
        if (s.chosen)
            js["chosen"] = detail::edge_json(*s.chosen);
        steps.push_back(std::move(js));
    }
    if (meta.note.empty())
        meta.note = "index expressions reconstructed from the connector rule; route " + t.route;
    return detail::document("join-trace", &c,
            {{"n", n}, {"m", m}, {"l", l}, {"steps", steps}, {"outcome", embedding_to_json(t.outcome)},
                {"red_outcome", t.red_outcome}, {"route", t.route}},
            meta);
}

inline auto configuration_certificate(const TwoColoring & c, const Embedding & p, const std::vector<Vertex> & w,
        Vertex u, const GoodConfiguration & g, const CertificateMeta & meta = {}) -> nlohmann::json
{
    nlohmann::json conf{{"x", g.x}, {"a1", g.a1}, {"a2", g.a2}, {"a3", g.a3}, {"y", g.y}, {"anchor", g.anchor},
        {"avoided_vertex", g.avoided_vertex}, {"branch", g.branch}};
    return detail::document("configuration", &c,
            {{"path", embedding_to_json(p)}, {"w", w}, {"u", u}, {"configuration", conf}}, meta);
}

/// The coloring avoids a red copy of `red` and a blue copy of `blue`.
inline auto witness_certificate(const TwoColoring & c, const LooseTemplate & red, const LooseTemplate & blue,
        const CertificateMeta & meta = {}) -> nlohmann::json
{
    return detail::document("witness", &c, {{"k", c.k()}, {"red", red.name()}, {"blue", blue.name()}}, meta);
}

/// Every coloring of K^k_N contains a red `red` or a blue `blue`.
inline auto arrowing_certificate(int k, int n_vertices, const LooseTemplate & red, const LooseTemplate & blue,
        const CertificateMeta & meta = {}) -> nlohmann::json
{
    return detail::document("arrowing", nullptr,
            {{"k", k}, {"n_vertices", n_vertices}, {"red", red.name()}, {"blue", blue.name()}, {"status", "UNSAT"}},
            meta);
}

// ---- checker ----

namespace detail {

    inline auto load_coloring_ref(const nlohmann::json & ref, const std::filesystem::path & base) -> TwoColoring
    {
        if (ref.is_string()) {
            auto path = std::filesystem::path(ref.get<std::string>());
            if (path.is_relative())
                path = base / path;
            std::ifstream in(path);
            require(static_cast<bool>(in), ErrorKind::malformed_certificate, "cannot open " + path.string());
            return coloring_from_json(nlohmann::json::parse(in));
        }
        return coloring_from_json(ref);
    }

    inline auto check_from(const Verdict & v) -> CertificateCheck { return {v.ok, v.reason}; }

    inline auto check_witness(const TwoColoring & c, const nlohmann::json & p) -> CertificateCheck
    {
        int k = p.at("k").get<int>();
        require(k == c.k(), ErrorKind::malformed_certificate, "payload uniformity differs from the coloring");
        auto red = parse_target(p.at("red").get<std::string>(), k);
        auto blue = parse_target(p.at("blue").get<std::string>(), k);
        for (auto [color, t] : {std::pair{Color::red, red}, std::pair{Color::blue, blue}}) {
            auto found = search_embedding(c, color, t);
            if (found.status == SearchStatus::found) {
                std::string where;
                for (const auto & e : found.embedding->host_edges())
                    where += to_string(e);
                return {false, to_string(color) + " " + t.name() + " found: " + where};
            }
        }
        return {true, {}};
    }

    inline auto check_arrowing(const nlohmann::json & p) -> CertificateCheck
    {
        require(p.at("status").get<std::string>() == "UNSAT", ErrorKind::malformed_certificate,
                "arrowing certificates carry UNSAT claims; SAT claims use witness certificates");
        int k = p.at("k").get<int>();
        int n = p.at("n_vertices").get<int>();
        auto red = parse_target(p.at("red").get<std::string>(), k);
        auto blue = parse_target(p.at("blue").get<std::string>(), k);
        ArrowingOptions options;
        options.reverse_order = true;
        options.blue_first = true;
        auto v = decide_arrowing(k, n, red, blue, {}, options);
        if (v.status != ArrowingStatus::UNSAT)
            return {false, "rerun under reversed branching gave " + to_string(v.status)};
        return {true, {}};
    }

    inline auto check_pairs(const TwoColoring & c, const nlohmann::json & p) -> CertificateCheck
    {
        std::vector<BichromaticPair> pairs;
        for (const auto & item : p.at("pairs"))
            pairs.push_back({edge_from(item.at("red")), edge_from(item.at("blue"))});
        require(! pairs.empty(), ErrorKind::malformed_certificate, "empty pair set");
        for (const auto & pair : pairs)
            if (auto v = validate_pair(c, pair); ! v)
                return check_from(v);
        if (p.value("disjoint", false)) {
            for (std::size_t a = 0; a < pairs.size(); ++a)
                for (std::size_t b = a + 1; b < pairs.size(); ++b)
                    for (const auto * x : {&pairs[a].red_edge, &pairs[a].blue_edge})
                        for (const auto * y : {&pairs[b].red_edge, &pairs[b].blue_edge})
                            if (intersection_size(*x, *y) > 0)
                                return {false, "pairs are not disjoint"};
        }
        return {true, {}};
    }

    inline auto check_join(const TwoColoring & c, const nlohmann::json & p) -> CertificateCheck
    {
        JoinTrace t;
        for (const auto & s : p.at("steps")) {
            JoinStep step;
            step.label = s.value("label", "");
            if (s.contains("g"))
                step.g = edge_from(s.at("g"));
            if (s.contains("g_color"))
                step.g_color = color_from(s.at("g_color").get<std::string>());
            if (s.contains("h"))
                step.h = edge_from(s.at("h"));
            if (s.contains("h_color"))
                step.h_color = color_from(s.at("h_color").get<std::string>());
            if (s.contains("chosen"))
                step.chosen = edge_from(s.at("chosen"));
            t.steps.push_back(std::move(step));
        }
        t.outcome = embedding_from_json(p.at("outcome"));
        t.red_outcome = p.at("red_outcome").get<bool>();
        return check_from(validate_join_trace(c, t, p.at("n").get<int>(), p.at("m").get<int>(), p.at("l").get<int>()));
    }

    inline auto check_configuration(const TwoColoring & c, const nlohmann::json & p) -> CertificateCheck
    {
        auto path = embedding_from_json(p.at("path"));
        auto path_check = verify_embedding(c, Embedding{path.shape, path.assignment, ColorClaim::red});
        if (! path_check)
            return {false, "host path: " + path_check.reason};
        const auto & j = p.at("configuration");
        GoodConfiguration g;
        g.x = j.at("x").get<Vertex>();
        g.a1 = j.at("a1").get<Vertex>();
        g.a2 = j.at("a2").get<Vertex>();
        g.a3 = j.at("a3").get<Vertex>();
        g.y = j.at("y").get<Vertex>();
        g.anchor = j.at("anchor").get<int>();
        g.avoided_vertex = j.at("avoided_vertex").get<Vertex>();
        return check_from(validate_configuration(c, path, p.at("w").get<std::vector<Vertex>>(), p.at("u").get<Vertex>(), g));
    }

} // namespace detail

/// Re-validates a certificate document. Structural problems raise
/// malformed_certificate; a well-formed certificate whose claim fails comes
/// back with ok = false and the reason.
inline auto verify_certificate(const nlohmann::json & doc, const std::filesystem::path & base_dir = {})
    -> CertificateCheck
{
    try {
        auto type = doc.at("type").get<std::string>();
        const auto & payload = doc.at("payload");
        if (type == "arrowing")
            return detail::check_arrowing(payload);
        auto c = detail::load_coloring_ref(doc.at("coloring_ref"), base_dir);
        if (type == "witness")
            return detail::check_witness(c, payload);
        if (type == "embedding") {
            auto e = embedding_from_json(payload);
            if (e.claimed_color == ColorClaim::any)
                return {false, "embedding certificates must claim a color"};
            return detail::check_from(verify_embedding(c, e));
        }
        if (type == "pair-set")
            return detail::check_pairs(c, payload);
        if (type == "join-trace")
            return detail::check_join(c, payload);
        if (type == "configuration")
            return detail::check_configuration(c, payload);
        fail(ErrorKind::malformed_certificate, "unknown certificate type '" + type + "'");
    }
    catch (const nlohmann::json::exception & e) {
        fail(ErrorKind::malformed_certificate, e.what());
    }
    catch (const Error & e) {
        if (e.kind() == ErrorKind::malformed_certificate)
            throw;
        fail(ErrorKind::malformed_certificate, e.what());
    }
}

} // namespace ramsey_lab

#endif
