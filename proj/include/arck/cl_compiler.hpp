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

#include <array>
#include <map>
#include <vector>

#include "arck/constraint_logic.hpp"
#include "arck/poscnf.hpp"
#include "arck/serialize.hpp"

namespace arck {

struct CompilationParams {
    int k = 0; // hidden Red plays; equals the Blue circuitry move count
};

/// Provenance of a compiled instance. Every edge sits in exactly one bucket.
struct CLTrace {
    std::map<int, int> variable_vertex; // variable id -> Variable vertex
    std::map<int, int> clause_root;     // clause index -> vertex carrying the clause output
    std::vector<int> spine;             // And vertices joining the clauses
    int goal_edge = -1;                 // Blue goal arc (or its replacement in NP/MP)

    std::vector<int> variables;  // red claim arcs and unused-variable stubs
    std::vector<int> circuit;    // Or/And/Fanout trees and weight converters
    std::vector<int> goal;       // the Blue goal arc
    std::vector<int> red_goal;   // Red goal arc and the blue arc guarding it
    std::vector<std::array<int, 2>> red_components;
    std::vector<int> chain;      // NP: Blue Or chain; MP: separate Blue chain
    std::vector<int> tail;       // MP: Blue-to-Red link and Red-Or chain
};

struct CLCompilation {
    CLInstance instance;
    CLTrace trace;
    CompilationParams params;
};

/// PosCNF -> Standard B2CL. Unit clauses are wired straight to the variable.
CLCompilation compile_poscnf_to_b2cl(const PosCNFFormula& f);

/// The transforms below throw Error{NotACompiledInstance} unless the input
/// carries a consistent trace of the expected variant.
CLCompilation to_builder_blocker(const CLCompilation& c);
CLCompilation to_normal_play(const CLCompilation& c);
CLCompilation to_misere_play(const CLCompilation& c);

/// compile_poscnf_to_b2cl followed by the transform chain for `variant`.
CLCompilation compile_variant(const PosCNFFormula& f, CLVariant variant);

/// Blue arcs in the circuit and goal buckets.
int count_blue_circuit_moves(const CLInstance& inst, const CLTrace& trace);

/// All trace edge ids; throws Error{NotACompiledInstance} on a bucket mismatch.
void check_trace(const CLCompilation& c);

/// Keeps only the given edges. Vertices that lose an edge become terminals,
/// so arcs into the rest of the circuit can be flipped freely.
CLInstance restrict_to(const CLInstance& inst, const std::vector<int>& edge_ids);

/// Longest flip sequence available to `p` when the opponent never moves.
int max_solo_flips(const CLInstance& inst, Player p);

/// Flip counts behind the misere transform's budget argument.
struct MisereLedger {
    int k = 0;
    int red_components = 0;  // Red flips available in the hidden components
    int red_tail = 0;        // Red flips opened by an activated circuit end
    int blue_chain = 0;      // Blue flips in the separate chain
    int red_total() const { return red_components - k + red_tail; }
};
MisereLedger misere_ledger(const CLCompilation& mp);

Json to_json(const CLTrace& t);

} // namespace arck
