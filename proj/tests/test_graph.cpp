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

#include <random>

#include "doctest.h"

#include "arck/error.hpp"
#include "arck/planarity.hpp"
#include "arck/serialize.hpp"
#include "helpers.hpp"

using namespace arck;
using testing::complete;
using testing::from_pairs;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::ParseError;
}

} // namespace

TEST_CASE("build_graph rejects malformed input")
{
    std::vector<Vertex> vs{{0, {}}, {1, {}}};
    CHECK(code_of([&] { build_graph(vs, {{0, 0, 0, EdgeColour::Blue, {}}}); }) == ErrorCode::SelfLoop);
    CHECK(code_of([&] {
              build_graph(vs, {{0, 0, 1, EdgeColour::Blue, {}}, {1, 1, 0, EdgeColour::Red, {}}});
          }) == ErrorCode::ParallelEdge);
    CHECK(code_of([&] { build_graph(vs, {{0, 0, 7, EdgeColour::Blue, {}}}); }) == ErrorCode::DanglingEndpoint);
    CHECK(code_of([&] { build_graph({{0, {}}, {0, {}}}, {}); }) == ErrorCode::DuplicateId);
}

TEST_CASE("build_graph renumbers densely, assemble_graph keeps ids")
{
    std::vector<Vertex> vs{{10, {}}, {20, {}}, {30, {}}};
    std::vector<Edge> es{{5, 10, 20, EdgeColour::Blue, {}}, {9, 20, 30, EdgeColour::Red, {}}};
    auto g = build_graph(vs, es);
    CHECK(g.has_vertex(2));
    CHECK(g.edge(1).u == 1);
    auto h = assemble_graph(vs, es);
    CHECK(h.has_edge(9));
    CHECK(h.edge(9).v == 30);
}

TEST_CASE("without_vertices drops incident edges and keeps ids")
{
    auto g = from_pairs(4, {{0, 1}, {1, 2}, {2, 3}});
    std::vector<int> gone{1};
    auto h = g.without_vertices(gone);
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 1);
    CHECK(h.has_edge(2));
    CHECK(h.degree(3) == 1);
}

TEST_CASE("line graph of a path, a star and a triangle")
{
    auto path = line_graph(from_pairs(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(path.graph.vertex_count() == 3);
    CHECK(path.graph.edge_count() == 2);
    auto star = line_graph(from_pairs(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.graph.edge_count() == 3);
    auto tri = line_graph(from_pairs(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(tri.graph.edge_count() == 3);
    CHECK(tri.source_edge.size() == 3);
}

TEST_CASE("line graph edge count equals sum of C(deg, 2)")
{
    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 2) pairs.emplace_back(a, b);
        auto g = from_pairs(n, pairs);
        std::size_t expect = 0;
        for (const auto& v : g.vertices()) expect += g.degree(v.id) * (g.degree(v.id) - 1) / 2;
        CHECK(line_graph(g).graph.edge_count() == expect);
    }
}

TEST_CASE("planarity on small controls")
{
    auto k4 = is_planar(complete(4));
    CHECK(k4.planar);
    CHECK(is_plane_embedding(complete(4), k4.embedding));

    auto k5 = is_planar(complete(5));
    CHECK_FALSE(k5.planar);
    CHECK(k5.witness_kind == KuratowskiKind::K5);
    CHECK(classify_kuratowski(complete(5), k5.witness_edges) == KuratowskiKind::K5);

    auto k33 = is_planar(testing::k33());
    CHECK_FALSE(k33.planar);
    CHECK(k33.witness_kind == KuratowskiKind::K33);

    // Petersen graph: non-planar through a K3,3 subdivision only.
    auto petersen = from_pairs(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    auto p = is_planar(petersen);
    CHECK_FALSE(p.planar);
    CHECK(classify_kuratowski(petersen, p.witness_edges) == p.witness_kind);
}

TEST_CASE("plane embedding check rejects a twisted rotation")
{
    auto g = complete(4);
    auto r = is_planar(g);
    REQUIRE(r.planar);
    CHECK(count_faces(g, r.embedding) == 4);
    // Reversing one vertex's rotation makes the K4 embedding non-planar.
    Embedding bad = r.embedding;
    std::reverse(bad[0].begin(), bad[0].end());
    CHECK_FALSE(is_plane_embedding(g, bad));
}

TEST_CASE("random graphs: planar results carry valid embeddings, others valid witnesses")
{
    std::mt19937 rng(11);
    for (int round = 0; round < 60; ++round) {
        int n = 4 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 3 != 0) pairs.emplace_back(a, b);
        auto g = from_pairs(n, pairs);
        auto r = is_planar(g);
        if (r.planar) {
            CHECK(is_plane_embedding(g, r.embedding));
        } else {
            CHECK(r.witness_kind != KuratowskiKind::None);
            CHECK(classify_kuratowski(g, r.witness_edges) == r.witness_kind);
        }
        // Planarity of a graph with more than 3n - 6 edges is impossible.
        if (static_cast<int>(g.edge_count()) > 3 * n - 6) CHECK_FALSE(r.planar);
    }
}

TEST_CASE("grid snap check")
{
    std::vector<Vertex> vs{{0, Coord{0, 0}}, {1, Coord{1, 0}}, {2, Coord{1, 1}}, {3, Coord{2, 2}}};
    std::vector<Edge> es{{0, 0, 1, EdgeColour::Blue, {}}, {1, 1, 2, EdgeColour::Blue, {}}};
    auto g = build_graph(vs, es);
    CHECK(grid_snap_check(g, Lattice::Cartesian).empty());

    auto diag = build_graph(vs, {{0, 0, 2, EdgeColour::Blue, {}}});
    CHECK_FALSE(grid_snap_check(diag, Lattice::Cartesian).empty());
    // (0,0)-(1,1) is not a triangular step either; (1,0)-(0,1) is.
    CHECK_FALSE(grid_snap_check(diag, Lattice::Triangular).empty());
    CHECK(lattice_adjacent(Lattice::Triangular, {1, 0}, {0, 1}));
    CHECK_FALSE(lattice_adjacent(Lattice::Cartesian, {1, 0}, {0, 1}));

    auto clash = build_graph({{0, Coord{0, 0}}, {1, Coord{0, 0}}}, {});
    auto rep = grid_snap_check(clash, Lattice::Cartesian);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == SnapViolation::Kind::CoordinateCollision);

    auto bare = build_graph({{0, {}}}, {});
    CHECK(code_of([&] { grid_snap_check(bare, Lattice::Cartesian); }) == ErrorCode::MissingCoordinate);
}

TEST_CASE("JSON and text round trips")
{
    std::vector<Vertex> vs{{0, Coord{0, 0}}, {1, Coord{1, 0}}, {2, Coord{2, 0}}};
    std::vector<Edge> es{{0, 0, 1, EdgeColour::Blue, "a"}, {1, 1, 2, EdgeColour::Either, {}}};
    auto g = build_graph(vs, es, Lattice::Cartesian);
    CHECK(graph_from_json(to_json(g)) == g);
    CHECK(graph_from_json(parse_json(to_json(g).dump())) == g);
    CHECK(decode(encode(g)) == g);

    ArcKPosition p{g, Convention::Normal, Player::Red};
    CHECK(position_from_json(to_json(p)) == p);

    auto r = is_planar(complete(4));
    CHECK(embedding_from_json(to_json(r.embedding)) == r.embedding);
}

TEST_CASE("malformed JSON reports ParseError")
{
    CHECK(code_of([] { parse_json("{not json"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { graph_from_json(parse_json(R"({"vertices": 3})")); }) == ErrorCode::ParseError);
}

TEST_CASE("DOT export names every edge")
{
    auto dot = to_dot(from_pairs(3, {{0, 1}, {1, 2}}, EdgeColour::Red));
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("v0 -- v1") != std::string::npos);
    CHECK(dot.find("red") != std::string::npos);
}
