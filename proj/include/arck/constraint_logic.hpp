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
#include <string>
#include <string_view>
#include <vector>

#include "arck/arc_kayles.hpp"

namespace arck {

enum class CLVariant { Standard, BuilderBlocker, NormalPlay, MiserePlay };
enum class CLOutcome { BlueWin, RedWin, Draw };
enum class VertexKind { And, Or, Fanout, Choice, Variable, BlueToRed, RedOr, Other };

std::string_view to_string(CLVariant v);
std::string_view to_string(CLOutcome o);
std::string_view to_string(VertexKind k);
CLVariant cl_variant_from_string(std::string_view s);

/// A weighted arc. tail/head give the CURRENT orientation; the head receives
/// the weight. Flipping reverses the arc once and for all.
struct CLEdge {
    int id = 0;
    int tail = 0;
    int head = 0;
    Player colour = Player::Blue;
    int weight = 2;
    bool flipped = false;
    std::optional<Player> goal_for;
    bool operator==(const CLEdge&) const = default;

    int initial_head() const { return flipped ? tail : head; }
    int initial_tail() const { return flipped ? head : tail; }
};

/// Terminal vertices are free arc ends and are exempt from the in-weight rule.
struct CLVertex {
    int id = 0;
    bool terminal = false;
    std::string name;
    bool operator==(const CLVertex&) const = default;
};

struct CLInstance {
    std::vector<CLVertex> vertices;
    std::vector<CLEdge> edges;
    CLVariant variant = CLVariant::Standard;
    Player to_move = Player::Blue;
    bool operator==(const CLInstance&) const = default;

    const CLVertex& vertex(int id) const;
    const CLEdge& edge(int id) const;
    bool has_edge(int id) const;
    int in_weight(int vertex_id) const;
};

struct CLValidationReport {
    struct InWeight {
        int vertex;
        int in_weight;
    };
    std::vector<InWeight> in_weight_violations;
    std::vector<std::string> goal_violations;
    std::vector<std::string> structural_violations; // weights, dangling ends, duplicate ids
    bool ok() const
    {
        return in_weight_violations.empty() && goal_violations.empty() && structural_violations.empty();
    }
};

CLValidationReport validate_instance(const CLInstance& inst);

/// Classification of a vertex by its incident arcs in the initial orientation.
VertexKind classify_vertex(const CLInstance& inst, int vertex_id);

/// What happens when `stuck` has no legal flip at the start of their turn.
CLOutcome stuck_outcome(CLVariant variant, Player stuck);

std::vector<int> legal_flips(const CLInstance& inst);

struct FlipResult {
    CLInstance next;
    std::optional<CLOutcome> terminal;
};

/// Throws Error{IllegalFlip} naming the reason.
FlipResult apply_flip(const CLInstance& inst, int edge_id);

struct CLSolveResult {
    CLOutcome outcome = CLOutcome::Draw;
    std::vector<int> principal_line; // flips along optimal play until the game ends
    std::uint64_t nodes_searched = 0;
};

/// Exact solve. Mover prefers Win > Draw > Loss; ties go to the lowest edge id.
/// Throws Error{BudgetExceeded}.
CLSolveResult solve_cl(const CLInstance& inst, const SolveOptions& opts = {});

/// DOT digraph; weight-2 arcs get a doubled arrowhead.
std::string to_dot(const CLInstance& inst, std::string_view name = "CL");

} // namespace arck
