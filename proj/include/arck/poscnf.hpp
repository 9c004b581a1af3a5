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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arck {

/// Positive CNF: clauses are lists of 1-based variable ids.
struct PosCNFFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    bool operator==(const PosCNFFormula&) const = default;
};

enum class Truth { Unassigned, True, False };
enum class Claimer { True, False };

constexpr Claimer other(Claimer c) { return c == Claimer::True ? Claimer::False : Claimer::True; }
std::string_view to_string(Claimer c);
Claimer claimer_from_string(std::string_view s);

struct PosCNFGame {
    PosCNFFormula formula;
    std::vector<Truth> assignment; // index 0 is variable 1
    Claimer to_move = Claimer::True;
    bool operator==(const PosCNFGame&) const = default;
};

/// Reads "p poscnf n m" followed by m zero-terminated clauses. Lines starting
/// with 'c' are comments. Throws Error{ParseError | NegativeLiteral | EmptyClause}.
PosCNFFormula parse_formula(std::string_view text);
std::string format_formula(const PosCNFFormula& f);

/// Throws Error{ParseError} for out-of-range members, Error{EmptyClause}.
void validate_formula(const PosCNFFormula& f);

PosCNFGame new_game(const PosCNFFormula& f, Claimer first = Claimer::True);

/// The mover claims `variable` with their own value. Throws Error{AlreadyAssigned}.
PosCNFGame apply_assignment(const PosCNFGame& game, int variable);

/// Permissive rules: the mover may assign either value.
PosCNFGame apply_assignment(const PosCNFGame& game, int variable, Truth value);

/// Throws Error{Incomplete} if any variable is unassigned.
bool evaluate(const PosCNFFormula& f, const std::vector<Truth>& assignment);

struct PosCNFSolveResult {
    Claimer winner = Claimer::True;
    std::optional<int> principal_variable;
    Truth principal_value = Truth::Unassigned;
};

/// Minimax winner; ties go to the lowest variable id (True before False in
/// permissive mode).
PosCNFSolveResult solve_poscnf(const PosCNFGame& game, bool permissive = false);

} // namespace arck
