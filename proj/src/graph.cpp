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

#include "arck/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "arck/error.hpp"

namespace arck {

std::string_view to_string(EdgeColour c)
{
    switch (c) {
    case EdgeColour::Blue: return "blue";
    case EdgeColour::Red: return "red";
    case EdgeColour::Either: return "either";
    }
    return "?";
}

std::string_view to_string(Lattice l)
{
    switch (l) {
    case Lattice::None: return "none";
    case Lattice::Cartesian: return "cartesian";
    case Lattice::Triangular: return "triangular";
    }
    return "?";
}

EdgeColour edge_colour_from_string(std::string_view s)
{
    if (s == "blue") return EdgeColour::Blue;
    if (s == "red") return EdgeColour::Red;
    if (s == "either") return EdgeColour::Either;
    throw Error(ErrorCode::ParseError, "unknown colour '" + std::string(s) + "'");
}

Lattice lattice_from_string(std::string_view s)
{
    if (s == "none") return Lattice::None;
    if (s == "cartesian") return Lattice::Cartesian;
    if (s == "triangular") return Lattice::Triangular;
    throw Error(ErrorCode::ParseError, "unknown lattice '" + std::string(s) + "'");
}

void ColouredGraph::reindex()
{
    vertex_index_.clear();
    edge_index_.clear();
    for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_index_[vertices_[i].id] = i;
    for (std::size_t i = 0; i < edges_.size(); ++i) edge_index_[edges_[i].id] = i;
}

const Vertex& ColouredGraph::vertex(int id) const
{
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
        throw Error(ErrorCode::DanglingEndpoint, "no vertex " + std::to_string(id));
    return vertices_[it->second];
}

const Edge& ColouredGraph::edge(int id) const
{
    auto it = edge_index_.find(id);
    if (it == edge_index_.end())
        throw Error(ErrorCode::IllegalMove, "no edge " + std::to_string(id));
    return edges_[it->second];
}

std::vector<int> ColouredGraph::incident_edges(int vertex_id) const
{
    std::vector<int> out;
    for (const auto& e : edges_)
        if (e.touches(vertex_id)) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t ColouredGraph::degree(int vertex_id) const
{
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.touches(vertex_id); }));
}

ColouredGraph ColouredGraph::without_vertices(std::span<const int> ids) const
{
    std::unordered_set<int> gone(ids.begin(), ids.end());
    ColouredGraph out;
    out.lattice_ = lattice_;
    for (const auto& v : vertices_)
        if (!gone.contains(v.id)) out.vertices_.push_back(v);
    for (const auto& e : edges_)
        if (!gone.contains(e.u) && !gone.contains(e.v)) out.edges_.push_back(e);
    out.reindex();
    return out;
}

ColouredGraph ColouredGraph::with_lattice(Lattice l) const
{
    ColouredGraph out = *this;
    out.lattice_ = l;
    return out;
}

ColouredGraph ColouredGraph::recoloured(EdgeColour from, EdgeColour to) const
{
    ColouredGraph out = *this;
    for (auto& e : out.edges_) {
        if (e.colour == from) e.colour = to;
        else if (e.colour == to) e.colour = from;
    }
    return out;
}

namespace {

void validate(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges)
{
    std::unordered_set<int> vids;
    for (const auto& v : vertices)
        if (!vids.insert(v.id).second)
            throw Error(ErrorCode::DuplicateId, "vertex " + std::to_string(v.id));
    std::unordered_set<int> eids;
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : edges) {
        if (!eids.insert(e.id).second)
            throw Error(ErrorCode::DuplicateId, "edge " + std::to_string(e.id));
        if (!vids.contains(e.u) || !vids.contains(e.v))
            throw Error(ErrorCode::DanglingEndpoint,
                        "edge " + std::to_string(e.id) + " (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ")");
        if (e.u == e.v)
            throw Error(ErrorCode::SelfLoop, "edge " + std::to_string(e.id) + " at vertex " +
                                                 std::to_string(e.u));
        if (!pairs.insert(std::minmax(e.u, e.v)).second)
            throw Error(ErrorCode::ParallelEdge, "edge " + std::to_string(e.id) + " (" +
                                                     std::to_string(e.u) + "," +
                                                     std::to_string(e.v) + ")");
    }
}

} // namespace

ColouredGraph build_graph(std::vector<Vertex> vertices, std::vector<Edge> edges, Lattice lattice)
{
    validate(vertices, edges);
    std::unordered_map<int, int> remap;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        remap[vertices[i].id] = static_cast<int>(i);
        vertices[i].id = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        edges[i].id = static_cast<int>(i);
        edges[i].u = remap.at(edges[i].u);
        edges[i].v = remap.at(edges[i].v);
    }
    ColouredGraph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.lattice_ = lattice;
    g.reindex();
    return g;
}

ColouredGraph assemble_graph(std::vector<Vertex> vertices, std::vector<Edge> edges, Lattice lattice)
{
    validate(vertices, edges);
    ColouredGraph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.lattice_ = lattice;
    g.reindex();
    return g;
}

LineGraph line_graph(const ColouredGraph& g)
{
    LineGraph out;
    const auto edges = g.edges();
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        vs.push_back({static_cast<int>(i), std::nullopt});
        out.source_edge.push_back(edges[i].id);
        std::string lab(to_string(edges[i].colour));
        if (edges[i].label) lab += ":" + *edges[i].label;
        out.vertex_labels.push_back(std::move(lab));
    }
    std::vector<Edge> es;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& a = edges[i];
            const auto& b = edges[j];
            if (a.touches(b.u) || a.touches(b.v))
                es.push_back({static_cast<int>(es.size()), static_cast<int>(i), static_cast<int>(j),
                              EdgeColour::Either, std::nullopt});
        }
    out.graph = build_graph(std::move(vs), std::move(es));
    return out;
}

std::span<const Coord> lattice_steps(Lattice lattice)
{
    static constexpr std::array<Coord, 4> cart{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    static constexpr std::array<Coord, 6> tri{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}};
    switch (lattice) {
    case Lattice::Cartesian: return cart;
    case Lattice::Triangular: return tri;
    case Lattice::None: break;
    }
    return {};
}

bool lattice_adjacent(Lattice lattice, Coord a, Coord b)
{
    const Coord d = b - a;
    for (const Coord s : lattice_steps(lattice))
        if (s == d) return true;
    return false;
}

SnapReport grid_snap_check(const ColouredGraph& g, Lattice lattice)
{
    SnapReport report;
    std::map<Coord, int> seen;
    for (const auto& v : g.vertices()) {
        if (!v.coord) throw Error(ErrorCode::MissingCoordinate, "vertex " + std::to_string(v.id));
        auto [it, fresh] = seen.emplace(*v.coord, v.id);
        if (!fresh)
            report.violations.push_back({SnapViolation::Kind::CoordinateCollision, it->second, v.id});
    }
    for (const auto& e : g.edges())
        if (!lattice_adjacent(lattice, *g.vertex(e.u).coord, *g.vertex(e.v).coord))
            report.violations.push_back({SnapViolation::Kind::NonUnitEdge, e.id, 0});
    return report;
}

std::pair<double, double> plane_position(Lattice lattice, Coord c)
{
    if (lattice == Lattice::Triangular)
        return {c.x + 0.5 * c.y, c.y * std::sqrt(3.0) / 2.0};
    return {static_cast<double>(c.x), static_cast<double>(c.y)};
}

std::string to_dot(const ColouredGraph& g, std::string_view name)
{
    std::ostringstream os;
    os << "graph " << name << " {\n";
    os << "  node [shape=point];\n";
    for (const auto& v : g.vertices()) {
        os << "  v" << v.id;
        if (v.coord) {
            auto [x, y] = plane_position(g.lattice(), *v.coord);
            os << " [pos=\"" << x << "," << y << "!\"]";
        }
        os << ";\n";
    }
    for (const auto& e : g.edges()) {
        os << "  v" << e.u << " -- v" << e.v << " [color="
           << (e.colour == EdgeColour::Red ? "red" : e.colour == EdgeColour::Blue ? "blue" : "black");
        if (e.label) os << ", label=\"" << *e.label << "\"";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace arck
