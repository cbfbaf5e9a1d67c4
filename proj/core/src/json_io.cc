#include <corrhom/json_io.hh>
#include <corrhom/errors.hh>

#include <json.hpp>

#include <algorithm>

namespace corrhom
{
    using nlohmann::json;
    using nlohmann::ordered_json;

    namespace
    {
        json parse_json(const std::string & text)
        {
            json j = json::parse(text, nullptr, false);
            if (j.is_discarded())
                throw ParseError("not well-formed JSON");
            return j;
        }

        Side parse_side(const json & j, const std::string & what)
        {
            if (! j.is_string())
                throw ParseError(what + ": side must be \"black\" or \"white\"");
            std::string s = j.get<std::string>();
            if (s == "black")
                return Side::Black;
            if (s == "white")
                return Side::White;
            throw ParseError(what + ": side must be \"black\" or \"white\", got \"" + s + "\"");
        }

        TargetGraph target_from_json(const json & j)
        {
            if (! j.is_object() || ! j.contains("vertices") || ! j.contains("edges"))
                throw ParseError("target: expected an object with \"vertices\" and \"edges\"");
            if (! j["vertices"].is_array() || ! j["edges"].is_array())
                throw ParseError("target: \"vertices\" and \"edges\" must be arrays");

            std::vector<std::string> vertices;
            for (const auto & v : j["vertices"]) {
                if (! v.is_string())
                    throw ParseError("target: vertex ids must be strings");
                vertices.push_back(v.get<std::string>());
            }

            std::vector<std::pair<std::string, std::string>> edges;
            for (const auto & e : j["edges"]) {
                if (! e.is_array() || e.size() != 2 || ! e[0].is_string() || ! e[1].is_string())
                    throw ParseError("target: each edge must be a [id, id] pair");
                edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
            }

            std::optional<std::vector<Side>> side;
            if (j.contains("side")) {
                if (! j["side"].is_object())
                    throw ParseError("target: \"side\" must be an object");
                std::vector<Side> sides(vertices.size(), Side::Black);
                std::vector<char> given(vertices.size(), 0);
                for (auto it = j["side"].begin(); it != j["side"].end(); ++it) {
                    auto pos = std::find(vertices.begin(), vertices.end(), it.key());
                    if (pos == vertices.end())
                        throw ValidationError("side mapping names unknown vertex '" + it.key() + "'");
                    int v = static_cast<int>(pos - vertices.begin());
                    sides[v] = parse_side(it.value(), "target vertex '" + it.key() + "'");
                    given[v] = 1;
                }
                for (std::size_t v = 0; v < vertices.size(); ++v)
                    if (! given[v])
                        throw ValidationError("side mapping misses vertex '" + vertices[v] + "'");
                side = std::move(sides);
            }
            return make_target(std::move(vertices), edges, std::move(side));
        }

        Permutation permutation_from_json(const json & j, const TargetGraph & t,
            const std::string & what)
        {
            if (! j.is_object())
                throw ParseError(what + ": expected a mapping object");
            Permutation p;
            p.image.assign(t.size(), -1);
            for (auto it = j.begin(); it != j.end(); ++it) {
                int from = t.index_of(it.key());
                if (from < 0)
                    throw ValidationError(what + ": unknown vertex '" + it.key() + "'");
                if (! it.value().is_string())
                    throw ParseError(what + ": images must be vertex ids");
                int to = t.index_of(it.value().get<std::string>());
                if (to < 0)
                    throw ValidationError(what + ": unknown image '" +
                        it.value().get<std::string>() + "'");
                p.image[from] = to;
            }
            return p;
        }

        ordered_json target_to_json(const TargetGraph & t)
        {
            ordered_json j;
            j["vertices"] = t.vertices;
            ordered_json edges = ordered_json::array();
            for (int u = 0; u < t.size(); ++u)
                for (int v = u; v < t.size(); ++v)
                    if (t.adj[u][v])
                        edges.push_back({t.vertices[u], t.vertices[v]});
            j["edges"] = std::move(edges);
            if (t.side) {
                ordered_json side = ordered_json::object();
                for (int v = 0; v < t.size(); ++v)
                    side[t.vertices[v]] = side_name((*t.side)[v]);
                j["side"] = std::move(side);
            }
            return j;
        }

        ordered_json permutation_to_json(const Permutation & p, const TargetGraph & t)
        {
            ordered_json j = ordered_json::object();
            for (int v = 0; v < p.size(); ++v)
                if (p.image[v] >= 0)
                    j[t.vertices[v]] = t.vertices[p.image[v]];
            return j;
        }
    }

    TargetGraph parse_target(const std::string & text)
    {
        return target_from_json(parse_json(text));
    }

    std::string emit_target(const TargetGraph & t)
    {
        return target_to_json(t).dump();
    }

    Instance parse_instance(const std::string & text)
    {
        json j = parse_json(text);
        if (! j.is_object() || ! j.contains("target") || ! j.contains("gVertices") ||
                ! j.contains("edges") || ! j.contains("mode"))
            throw ParseError("instance: expected \"target\", \"gVertices\", \"edges\" and \"mode\"");

        Instance inst;
        inst.target = target_from_json(j["target"]);

        if (! j["gVertices"].is_array())
            throw ParseError("instance: \"gVertices\" must be an array");
        for (const auto & v : j["gVertices"]) {
            if (! v.is_string())
                throw ParseError("instance: input vertex ids must be strings");
            inst.g_vertices.push_back(v.get<std::string>());
        }

        if (! j["mode"].is_string())
            throw ParseError("instance: \"mode\" must be a string");
        std::string mode = j["mode"].get<std::string>();
        if (mode == "standard")
            inst.mode = Mode::Standard;
        else if (mode == "by-side")
            inst.mode = Mode::BySide;
        else
            throw ParseError("instance: mode must be \"standard\" or \"by-side\"");

        if (j.contains("gSide")) {
            if (! j["gSide"].is_object())
                throw ParseError("instance: \"gSide\" must be an object");
            std::vector<Side> sides(inst.g_vertices.size(), Side::Black);
            std::vector<char> given(inst.g_vertices.size(), 0);
            for (auto it = j["gSide"].begin(); it != j["gSide"].end(); ++it) {
                int x = inst.g_index_of(it.key());
                if (x < 0)
                    throw ValidationError("gSide names unknown vertex '" + it.key() + "'");
                sides[x] = parse_side(it.value(), "input vertex '" + it.key() + "'");
                given[x] = 1;
            }
            for (int x = 0; x < inst.g_size(); ++x)
                if (! given[x])
                    throw ValidationError("gSide misses vertex '" + inst.g_vertices[x] + "'");
            inst.g_side = std::move(sides);
        }

        inst.lists.assign(inst.g_vertices.size(), std::nullopt);
        if (j.contains("lists")) {
            if (! j["lists"].is_object())
                throw ParseError("instance: \"lists\" must be an object");
            for (auto it = j["lists"].begin(); it != j["lists"].end(); ++it) {
                int x = inst.g_index_of(it.key());
                if (x < 0)
                    throw ValidationError("lists name unknown vertex '" + it.key() + "'");
                if (! it.value().is_array())
                    throw ParseError("list at '" + it.key() + "' must be an array");
                std::vector<char> members(inst.target.size(), 0);
                for (const auto & hid : it.value()) {
                    if (! hid.is_string())
                        throw ParseError("list at '" + it.key() + "' must hold vertex ids");
                    int h = inst.target.index_of(hid.get<std::string>());
                    if (h < 0)
                        throw ValidationError("list at '" + it.key() +
                            "' names unknown target vertex '" + hid.get<std::string>() + "'");
                    members[h] = 1;
                }
                inst.lists[x] = std::move(members);
            }
        }

        if (! j["edges"].is_array())
            throw ParseError("instance: \"edges\" must be an array");
        int e_idx = 0;
        for (const auto & e : j["edges"]) {
            std::string what = "edge #" + std::to_string(e_idx++);
            if (! e.is_object() || ! e.contains("u") || ! e.contains("v") ||
                    ! e.contains("pi") || ! e.contains("rho"))
                throw ParseError(what + ": expected \"u\", \"v\", \"pi\" and \"rho\"");
            if (! e["u"].is_string() || ! e["v"].is_string())
                throw ParseError(what + ": endpoints must be vertex ids");
            GEdge ge;
            ge.u = inst.g_index_of(e["u"].get<std::string>());
            ge.v = inst.g_index_of(e["v"].get<std::string>());
            if (ge.u < 0)
                throw ValidationError(what + ": unknown endpoint '" + e["u"].get<std::string>() + "'");
            if (ge.v < 0)
                throw ValidationError(what + ": unknown endpoint '" + e["v"].get<std::string>() + "'");
            ge.pi = permutation_from_json(e["pi"], inst.target, what + " pi");
            ge.rho = permutation_from_json(e["rho"], inst.target, what + " rho");
            inst.edges.push_back(std::move(ge));
        }

        validate_instance(inst);
        return inst;
    }

    std::string emit_instance(const Instance & inst)
    {
        ordered_json j;
        j["target"] = target_to_json(inst.target);
        j["gVertices"] = inst.g_vertices;
        ordered_json edges = ordered_json::array();
        for (const auto & e : inst.edges) {
            ordered_json je;
            je["u"] = inst.g_vertices[e.u];
            je["v"] = inst.g_vertices[e.v];
            je["pi"] = permutation_to_json(e.pi, inst.target);
            je["rho"] = permutation_to_json(e.rho, inst.target);
            edges.push_back(std::move(je));
        }
        j["edges"] = std::move(edges);
        if (inst.has_lists()) {
            ordered_json lists = ordered_json::object();
            for (int x = 0; x < inst.g_size(); ++x) {
                if (! inst.lists[x])
                    continue;
                ordered_json members = ordered_json::array();
                for (int h = 0; h < inst.target.size(); ++h)
                    if ((*inst.lists[x])[h])
                        members.push_back(inst.target.vertices[h]);
                lists[inst.g_vertices[x]] = std::move(members);
            }
            j["lists"] = std::move(lists);
        }
        j["mode"] = inst.mode == Mode::Standard ? "standard" : "by-side";
        if (inst.g_side) {
            ordered_json side = ordered_json::object();
            for (int x = 0; x < inst.g_size(); ++x)
                side[inst.g_vertices[x]] = side_name((*inst.g_side)[x]);
            j["gSide"] = std::move(side);
        }
        return j.dump();
    }

    CnfFormula parse_cnf(const std::string & text)
    {
        json j = parse_json(text);
        if (! j.is_object() || ! j.contains("variables") || ! j.contains("clauses"))
            throw ParseError("formula: expected \"variables\" and \"clauses\"");
        if (! j["variables"].is_array() || ! j["clauses"].is_array())
            throw ParseError("formula: \"variables\" and \"clauses\" must be arrays");

        CnfFormula f;
        for (const auto & v : j["variables"]) {
            if (! v.is_string())
                throw ParseError("formula: variable names must be strings");
            f.variables.push_back(v.get<std::string>());
        }
        for (std::size_t i = 0; i < f.variables.size(); ++i)
            for (std::size_t k = i + 1; k < f.variables.size(); ++k)
                if (f.variables[i] == f.variables[k])
                    throw ValidationError("duplicate variable '" + f.variables[i] + "'");

        int c_idx = 0;
        for (const auto & c : j["clauses"]) {
            std::string what = "clause #" + std::to_string(c_idx++);
            if (! c.is_array() || c.size() != 3)
                throw ValidationError(what + ": must have exactly 3 variables");
            std::array<int, 3> triple{};
            for (int k = 0; k < 3; ++k) {
                if (! c[k].is_string())
                    throw ParseError(what + ": variables must be names");
                auto name = c[k].get<std::string>();
                auto pos = std::find(f.variables.begin(), f.variables.end(), name);
                if (pos == f.variables.end())
                    throw ValidationError(what + ": unknown variable '" + name + "'");
                triple[k] = static_cast<int>(pos - f.variables.begin());
            }
            if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2])
                throw ValidationError(what + ": variables must be distinct");
            f.clauses.push_back(triple);
        }
        return f;
    }

    TargetGraph parse_plain_graph(const std::string & text)
    {
        TargetGraph g = parse_target(text);
        if (g.side)
            throw ValidationError("plain graph input must not carry sides");
        for (int v = 0; v < g.size(); ++v)
            if (g.has_loop(v))
                throw ValidationError("plain graph input must be loopless, loop at '" +
                    g.vertices[v] + "'");
        return g;
    }

    std::string witness_json(const Instance & inst, const Assignment & f)
    {
        ordered_json j = ordered_json::object();
        for (int x = 0; x < inst.g_size(); ++x)
            j[inst.g_vertices[x]] = inst.target.vertices[f[x]];
        return j.dump();
    }
}
