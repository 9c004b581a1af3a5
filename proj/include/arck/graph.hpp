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

#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace arck {

enum class EdgeColour { Blue, Red, Either };
enum class Lattice { None, Cartesian, Triangular };

std::string_view to_string(EdgeColour c);
std::string_view to_string(Lattice l);
EdgeColour edge_colour_from_string(std::string_view s);
Lattice lattice_from_string(std::string_view s);

/// Integer lattice point. Cartesian: (x, y). Triangular: axial (q, r).
struct Coord {
    int x = 0;
    int y = 0;
    auto operator<=>(const Coord&) const = default;
    Coord operator+(Coord o) const { return {x + o.x, y + o.y}; }
    Coord operator-(Coord o) const { return {x - o.x, y - o.y}; }
};

struct Vertex {
    int id = 0;
    std::optional<Coord> coord;
    bool operator==(const Vertex&) const = default;
};

struct Edge {
    int id = 0;
    int u = 0;
    int v = 0;
    EdgeColour colour = EdgeColour::Blue;
    std::optional<std::string> label;
    bool operator==(const Edge&) const = default;

    bool touches(int w) const { return u == w || v == w; }
    int other(int w) const { return u == w ? v : u; }
};

/**
 * Simple undirected graph with coloured edges. Values are immutable once
 * built; operations return new graphs. Ids are dense after build_graph()
 * and stay stable (possibly sparse) through vertex removal.
 */
class ColouredGraph {
public:
    ColouredGraph() = default;

    std::span<const Vertex> vertices() const { return vertices_; }
    std::span<const Edge> edges() const { return edges_; }
    Lattice lattice() const { return lattice_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(int id) const { return vertex_index_.contains(id); }
    bool has_edge(int id) const { return edge_index_.contains(id); }
    const Vertex& vertex(int id) const;
    const Edge& edge(int id) const;

    /// Edge ids incident to a vertex, ascending.
    std::vector<int> incident_edges(int vertex_id) const;
    std::size_t degree(int vertex_id) const;

    /// Graph without the given vertices and every edge touching them.
    ColouredGraph without_vertices(std::span<const int> ids) const;
    ColouredGraph with_lattice(Lattice l) const;
    ColouredGraph recoloured(EdgeColour from, EdgeColour to) const;

    bool operator==(const ColouredGraph& o) const
    {
        return lattice_ == o.lattice_ && vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    friend ColouredGraph build_graph(std::vector<Vertex>, std::vector<Edge>, Lattice);
    friend ColouredGraph assemble_graph(std::vector<Vertex>, std::vector<Edge>, Lattice);
    void reindex();

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    Lattice lattice_ = Lattice::None;
    std::unordered_map<int, std::size_t> vertex_index_;
    std::unordered_map<int, std::size_t> edge_index_;
};

/// Validates raw lists and renumbers vertices and edges densely in input order.
/// Throws Error{SelfLoop | ParallelEdge | DanglingEndpoint | DuplicateId}.
ColouredGraph build_graph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                          Lattice lattice = Lattice::None);

/// Like build_graph but keeps the given ids verbatim (still validated).
ColouredGraph assemble_graph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                             Lattice lattice = Lattice::None);

/**
 * One vertex per input edge, adjacent iff the edges share an endpoint.
 * Output vertex i corresponds to input edge edges()[i]; its colour and
 * label are carried in the vertex_labels of the result.
 */
struct LineGraph {
    ColouredGraph graph;
    std::vector<int> source_edge;        // output vertex -> input edge id
    std::vector<std::string> vertex_labels; // "<colour>[:<label>]"
};
LineGraph line_graph(const ColouredGraph& g);

struct SnapViolation {
    enum class Kind { NonUnitEdge, CoordinateCollision } kind;
    int a = 0; // edge id for NonUnitEdge, first vertex for collisions
    int b = 0; // unused for NonUnitEdge, second vertex for collisions
};

struct SnapReport {
    std::vector<SnapViolation> violations;
    bool empty() const { return violations.empty(); }
};

/// Throws Error{MissingCoordinate} if any vertex has no coordinate.
SnapReport grid_snap_check(const ColouredGraph& g, Lattice lattice);

/// Unit steps of the lattice (both signs).
std::span<const Coord> lattice_steps(Lattice lattice);
bool lattice_adjacent(Lattice lattice, Coord a, Coord b);

/// Plane position used for rendering: triangular axial (q, r) maps to
/// q*(1,0) + r*(1/2, sqrt(3)/2).
std::pair<double, double> plane_position(Lattice lattice, Coord c);

std::string to_dot(const ColouredGraph& g, std::string_view name = "G");

} // namespace arck
