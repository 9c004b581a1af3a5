/*
 * Copyright 2026 The arck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "arck/serialize.hpp"

#include <set>

#include "arck/error.hpp"

namespace arck {

namespace {

std::string line_col(std::string_view text, std::size_t offset)
{
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

/// Field access that reports schema problems as ParseError.
template <class T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
    }
}

template <class T>
T field_or(const Json& j, const char* key, T fallback)
{
    if (!j.contains(key) || j.at(key).is_null()) return fallback;
    return field<T>(j, key);
}

} // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t off = e.byte == 0 ? 0 : e.byte - 1;
        throw Error(ErrorCode::ParseError, line_col(text, off) + ": " + e.what());
    }
}

Json to_json(const ColouredGraph& g)
{
    Json vs = Json::array();
    for (const auto& v : g.vertices()) {
        Json jv{{"id", v.id}};
        jv["coord"] = v.coord ? Json::array({v.coord->x, v.coord->y}) : Json(nullptr);
        vs.push_back(std::move(jv));
    }
    Json es = Json::array();
    for (const auto& e : g.edges()) {
        Json je{{"id", e.id}, {"u", e.u}, {"v", e.v}, {"colour", std::string(to_string(e.colour))}};
        je["label"] = e.label ? Json(*e.label) : Json(nullptr);
        es.push_back(std::move(je));
    }
    return Json{{"vertices", vs}, {"edges", es}, {"lattice", std::string(to_string(g.lattice()))}};
}

ColouredGraph graph_from_json(const Json& j)
{
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "graph must be an object");
    std::vector<Vertex> vs;
    for (const auto& jv : field<Json>(j, "vertices")) {
        Vertex v{field<int>(jv, "id"), std::nullopt};
        if (jv.contains("coord") && !jv.at("coord").is_null()) {
            auto c = field<std::vector<int>>(jv, "coord");
            if (c.size() != 2) throw Error(ErrorCode::ParseError, "coord of vertex " + std::to_string(v.id));
            v.coord = Coord{c[0], c[1]};
        }
        vs.push_back(v);
    }
    std::vector<Edge> es;
    for (const auto& je : field<Json>(j, "edges")) {
        Edge e{field<int>(je, "id"), field<int>(je, "u"), field<int>(je, "v"),
               edge_colour_from_string(field<std::string>(je, "colour")), std::nullopt};
        if (je.contains("label") && !je.at("label").is_null()) e.label = field<std::string>(je, "label");
        es.push_back(std::move(e));
    }
    Lattice l = lattice_from_string(field_or<std::string>(j, "lattice", "none"));
    return assemble_graph(std::move(vs), std::move(es), l);
}

Json to_json(const ArcKPosition& pos)
{
    Json j = to_json(pos.graph);
    j["convention"] = std::string(to_string(pos.convention));
    j["to_move"] = std::string(to_string(pos.to_move));
    return j;
}

ArcKPosition position_from_json(const Json& j)
{
    return {graph_from_json(j), convention_from_string(field_or<std::string>(j, "convention", "misere")),
            player_from_string(field_or<std::string>(j, "to_move", "blue"))};
}

Json to_json(const CLInstance& inst)
{
    Json vs = Json::array();
    for (const auto& v : inst.vertices) {
        Json jv{{"id", v.id}, {"terminal", v.terminal}};
        if (!v.name.empty()) jv["name"] = v.name;
        vs.push_back(std::move(jv));
    }
    Json es = Json::array();
    for (const auto& e : inst.edges) {
        Json je{{"id", e.id},
                {"tail", e.tail},
                {"head", e.head},
                {"colour", std::string(to_string(e.colour))},
                {"weight", e.weight},
                {"flipped", e.flipped}};
        je["goal_for"] = e.goal_for ? Json(std::string(to_string(*e.goal_for))) : Json(nullptr);
        es.push_back(std::move(je));
    }
    return Json{{"variant", std::string(to_string(inst.variant))},
                {"to_move", std::string(to_string(inst.to_move))},
                {"vertices", vs},
                {"edges", es}};
}

CLInstance cl_from_json(const Json& j)
{
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "CL instance must be an object");
    CLInstance inst;
    inst.variant = cl_variant_from_string(field_or<std::string>(j, "variant", "standard"));
    inst.to_move = player_from_string(field_or<std::string>(j, "to_move", "blue"));
    for (const auto& je : field<Json>(j, "edges")) {
        CLEdge e;
        e.id = field<int>(je, "id");
        e.tail = field<int>(je, "tail");
        e.head = field<int>(je, "head");
        e.colour = player_from_string(field<std::string>(je, "colour"));
        e.weight = field_or<int>(je, "weight", 2);
        e.flipped = field_or<bool>(je, "flipped", false);
        if (je.contains("goal_for") && !je.at("goal_for").is_null())
            e.goal_for = player_from_string(field<std::string>(je, "goal_for"));
        inst.edges.push_back(e);
    }
    std::set<int> terminals;
    if (j.contains("terminals"))
        for (int t : field<std::vector<int>>(j, "terminals")) terminals.insert(t);
    if (j.contains("vertices")) {
        for (const auto& jv : field<Json>(j, "vertices")) {
            CLVertex v{field<int>(jv, "id"), field_or<bool>(jv, "terminal", false),
                       field_or<std::string>(jv, "name", "")};
            v.terminal = v.terminal || terminals.contains(v.id);
            inst.vertices.push_back(std::move(v));
        }
    } else {
        std::set<int> ids;
        for (const auto& e : inst.edges) {
            ids.insert(e.tail);
            ids.insert(e.head);
        }
        for (int id : ids) inst.vertices.push_back({id, terminals.contains(id), ""});
    }
    return inst;
}

Json to_json(const Embedding& emb)
{
    Json rot = Json::array();
    for (const auto& [v, es] : emb) rot.push_back(Json{{"vertex", v}, {"edges", es}});
    return Json{{"rotation", rot}};
}

Embedding embedding_from_json(const Json& j)
{
    Embedding emb;
    for (const auto& r : field<Json>(j, "rotation")) emb[field<int>(r, "vertex")] = field<std::vector<int>>(r, "edges");
    return emb;
}

Json to_json(const PosCNFGame& game)
{
    Json a = Json::array();
    for (Truth t : game.assignment)
        a.push_back(t == Truth::True ? "true" : t == Truth::False ? "false" : "unassigned");
    return Json{{"num_vars", game.formula.num_vars},
                {"clauses", game.formula.clauses},
                {"assignment", a},
                {"to_move", std::string(to_string(game.to_move))}};
}

std::string encode(const ColouredGraph& g) { return to_json(g).dump(2); }

ColouredGraph decode(std::string_view text) { return graph_from_json(parse_json(text)); }

} // namespace arck
