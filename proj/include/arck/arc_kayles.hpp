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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "arck/graph.hpp"

namespace arck {

enum class Player { Blue, Red };
enum class Convention { Normal, Misere };

constexpr Player opponent(Player p) { return p == Player::Blue ? Player::Red : Player::Blue; }
constexpr EdgeColour colour_of(Player p) { return p == Player::Blue ? EdgeColour::Blue : EdgeColour::Red; }

std::string_view to_string(Player p);
std::string_view to_string(Convention c);
Player player_from_string(std::string_view s);
Convention convention_from_string(std::string_view s);

struct ArcKPosition {
    ColouredGraph graph;
    Convention convention = Convention::Misere;
    Player to_move = Player::Blue;
    bool operator==(const ArcKPosition&) const = default;
};

/// Search configuration shared by the exact solvers.
struct SolveOptions {
    std::uint64_t node_budget = 50'000'000;
    bool parallel = false; // OpenMP root split; results identical to serial
};

struct SolveResult {
    Player winner = Player::Blue;
    std::optional<int> principal_move;
    std::uint64_t nodes_searched = 0; // diagnostic; may vary with parallel scheduling
};

/// Edges of the mover's colour or Either, ascending by id.
std::vector<int> legal_moves(const ArcKPosition& pos);

/// Deletes both endpoints of the edge and everything incident; toggles the mover.
/// Throws Error{IllegalMove} for absent or wrong-colour edges.
ArcKPosition apply_move(const ArcKPosition& pos, int edge_id);

/// True when the mover has no legal move; the winner is then fixed by the convention.
bool is_terminal(const ArcKPosition& pos);
Player terminal_winner(const ArcKPosition& pos);

/// Exact memoized solve. Throws Error{BudgetExceeded} when the node cap is hit.
SolveResult solve(const ArcKPosition& pos, const SolveOptions& opts = {});

/// Lowest-id move preserving the solved outcome for the mover; none iff no legal move.
std::optional<int> best_move(const ArcKPosition& pos, const SolveOptions& opts = {});

} // namespace arck
