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
#include "arck/serialize.hpp"
#include "oracles.hpp"

using namespace arck;

namespace {

CLEdge arc(int id, int tail, int head, Player c, int w, std::optional<Player> goal = std::nullopt)
{
    CLEdge e;
    e.id = id;
    e.tail = tail;
    e.head = head;
    e.colour = c;
    e.weight = w;
    e.goal_for = goal;
    return e;
}

/// Centre vertex 0 with free ends 1..3; `in` arcs point at the centre.
CLInstance star(std::vector<CLEdge> edges, CLVariant variant = CLVariant::NormalPlay)
{
    CLInstance inst;
    inst.variant = variant;
    inst.vertices.push_back({0, false, "c"});
    for (int i = 1; i <= 3; ++i) inst.vertices.push_back({i, true, "t" + std::to_string(i)});
    inst.edges = std::move(edges);
    return inst;
}

// And: weight-2 arc in from the top, two weight-1 arcs out.
CLInstance and_vertex()
{
    return star({arc(0, 1, 0, Player::Blue, 2), arc(1, 0, 2, Player::Blue, 1), arc(2, 0, 3, Player::Blue, 1)});
}

} // namespace

TEST_CASE("basis vertices classify by their initial arcs")
{
    CHECK(classify_vertex(and_vertex(), 0) == VertexKind::And);
    auto orv = star({arc(0, 1, 0, Player::Blue, 2), arc(1, 0, 2, Player::Blue, 2), arc(2, 0, 3, Player::Blue, 2)});
    CHECK(classify_vertex(orv, 0) == VertexKind::Or);
    auto choice = star({arc(0, 1, 0, Player::Blue, 1), arc(1, 2, 0, Player::Blue, 1), arc(2, 0, 3, Player::Blue, 1)});
    CHECK(classify_vertex(choice, 0) == VertexKind::Choice);
    auto fanout = star({arc(0, 1, 0, Player::Blue, 1), arc(1, 2, 0, Player::Blue, 1), arc(2, 0, 3, Player::Blue, 2)});
    CHECK(classify_vertex(fanout, 0) == VertexKind::Fanout);
    auto variable = star({arc(0, 1, 0, Player::Blue, 2), arc(1, 2, 0, Player::Red, 2)});
    CHECK(classify_vertex(variable, 0) == VertexKind::Variable);
    auto b2r = star({arc(0, 1, 0, Player::Red, 2), arc(1, 0, 2, Player::Blue, 2)});
    CHECK(classify_vertex(b2r, 0) == VertexKind::BlueToRed);
    auto redor = star({arc(0, 1, 0, Player::Red, 2), arc(1, 0, 2, Player::Red, 2), arc(2, 0, 3, Player::Red, 2)});
    CHECK(classify_vertex(redor, 0) == VertexKind::RedOr);
}

TEST_CASE("And vertex: in-weight rule governs the top arc")
{
    auto inst = and_vertex();
    CHECK(validate_instance(inst).ok());
    CHECK(inst.in_weight(0) == 2);
    // Flipping the weight-2 top arc away would leave in-weight 0.
    inst.to_move = Player::Blue;
    auto flips = legal_flips(inst);
    CHECK(std::find(flips.begin(), flips.end(), 0) == flips.end());

    // Both weight-1 arcs flipped inward first: in-weight 4, top arc free.
    inst = apply_flip(inst, 1).next;
    inst.to_move = Player::Blue;
    inst = apply_flip(inst, 2).next;
    inst.to_move = Player::Blue;
    CHECK(inst.in_weight(0) == 4);
    flips = legal_flips(inst);
    CHECK(std::find(flips.begin(), flips.end(), 0) != flips.end());
    // Already flipped arcs are never offered again.
    CHECK(std::find(flips.begin(), flips.end(), 1) == flips.end());
    try {
        apply_flip(inst, 1);
        FAIL("second flip accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IllegalFlip);
    }
}

TEST_CASE("validation reports in-weight and goal violations")
{
    auto low = star({arc(0, 1, 0, Player::Blue, 1), arc(1, 0, 2, Player::Blue, 1)});
    auto rep = validate_instance(low);
    REQUIRE(rep.in_weight_violations.size() == 1);
    CHECK(rep.in_weight_violations[0].vertex == 0);
    CHECK(rep.in_weight_violations[0].in_weight == 1);

    auto standard = and_vertex();
    standard.variant = CLVariant::Standard;
    standard.edges[0].goal_for = Player::Blue;
    CHECK_FALSE(validate_instance(standard).goal_violations.empty()); // no Red goal

    auto bb = and_vertex();
    bb.variant = CLVariant::BuilderBlocker;
    bb.edges[0].goal_for = Player::Blue;
    CHECK(validate_instance(bb).goal_violations.empty());
    bb.variant = CLVariant::NormalPlay;
    CHECK_FALSE(validate_instance(bb).goal_violations.empty());
}

TEST_CASE("stuck outcomes per variant")
{
    CHECK(stuck_outcome(CLVariant::Standard, Player::Blue) == CLOutcome::Draw);
    CHECK(stuck_outcome(CLVariant::BuilderBlocker, Player::Blue) == CLOutcome::RedWin);
    CHECK(stuck_outcome(CLVariant::NormalPlay, Player::Blue) == CLOutcome::RedWin);
    CHECK(stuck_outcome(CLVariant::MiserePlay, Player::Blue) == CLOutcome::BlueWin);
    CHECK(stuck_outcome(CLVariant::MiserePlay, Player::Red) == CLOutcome::RedWin);
}

TEST_CASE("goal flips end the game at once")
{
    auto inst = star({arc(0, 1, 0, Player::Blue, 2, Player::Blue), arc(1, 2, 0, Player::Red, 2, Player::Red),
                      arc(2, 3, 0, Player::Red, 2)},
                     CLVariant::Standard);
    inst.to_move = Player::Blue;
    auto r = apply_flip(inst, 0);
    REQUIRE(r.terminal.has_value());
    CHECK(*r.terminal == CLOutcome::BlueWin);
    CHECK(solve_cl(inst).outcome == CLOutcome::BlueWin);
    CHECK(solve_cl(inst).principal_line == std::vector<int>{0});
}

TEST_CASE("normal play with nothing to flip: mover loses")
{
    auto inst = star({arc(0, 1, 0, Player::Red, 2)});
    inst.to_move = Player::Blue;
    CHECK(solve_cl(inst).outcome == CLOutcome::RedWin);
    inst.variant = CLVariant::MiserePlay;
    CHECK(solve_cl(inst).outcome == CLOutcome::BlueWin);
}

TEST_CASE("memoized CL solve agrees with plain recursion on random instances")
{
    std::mt19937 rng(31337);
    int checked = 0;
    for (CLVariant v : {CLVariant::Standard, CLVariant::BuilderBlocker, CLVariant::NormalPlay, CLVariant::MiserePlay}) {
        for (int i = 0; i < 50; ++i) {
            auto inst = oracle::random_cl(rng, 10, v);
            REQUIRE(validate_instance(inst).ok());
            CAPTURE(to_json(inst).dump());
            auto got = solve_cl(inst).outcome;
            CHECK(got == oracle::cl_outcome(inst));
            if (v != CLVariant::Standard) CHECK(got != CLOutcome::Draw);
            ++checked;
        }
    }
    CHECK(checked == 200);
}

TEST_CASE("parallel CL solve returns the serial outcome")
{
    std::mt19937 rng(8);
    SolveOptions par;
    par.parallel = true;
    for (int i = 0; i < 60; ++i) {
        auto inst = oracle::random_cl(rng, 10, static_cast<CLVariant>(i % 4));
        CHECK(solve_cl(inst).outcome == solve_cl(inst, par).outcome);
    }
}

TEST_CASE("principal line replays legally and reaches the solved outcome")
{
    std::mt19937 rng(41);
    for (int i = 0; i < 60; ++i) {
        auto inst = oracle::random_cl(rng, 9, static_cast<CLVariant>(i % 4));
        auto r = solve_cl(inst);
        CLInstance cur = inst;
        std::optional<CLOutcome> end;
        for (int id : r.principal_line) {
            REQUIRE_FALSE(end.has_value());
            auto step = apply_flip(cur, id);
            cur = step.next;
            end = step.terminal;
            for (const auto& v : cur.vertices)
                if (!v.terminal) CHECK(cur.in_weight(v.id) >= 2);
        }
        if (!end) {
            CHECK(legal_flips(cur).empty());
            end = stuck_outcome(cur.variant, cur.to_move);
        }
        CHECK(*end == r.outcome);
    }
}

TEST_CASE("CL JSON round trip")
{
    std::mt19937 rng(12);
    for (int i = 0; i < 20; ++i) {
        auto inst = oracle::random_cl(rng, 10, static_cast<CLVariant>(i % 4));
        CHECK(cl_from_json(parse_json(to_json(inst).dump())) == inst);
    }
}

TEST_CASE("DOT digraph doubles weight-2 arrowheads")
{
    auto dot = to_dot(and_vertex());
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("normalnormal") != std::string::npos);
}
