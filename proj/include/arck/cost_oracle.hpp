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

#include <map>
#include <string>
#include <vector>

#include "arck/arc_kayles.hpp"
#include "arck/gadgets.hpp"

namespace arck {

/// Interface signal. I < A so that "A >= I" orders patterns pointwise.
enum class Signal { I, A };
using Pattern = std::vector<Signal>;

std::string to_string(const Pattern& p); // "(A,I)"
Pattern pattern_from_string(std::string_view s);
std::vector<Pattern> all_patterns(std::size_t arity);

/// Pointwise weakenings of any member (A may drop to I).
std::vector<Pattern> downward_closure(const std::vector<Pattern>& set);

/// Plays the A or I edge of each In port as a Blue move, in port order.
/// Throws Error{ArityMismatch} when the pattern length differs from the In count.
ArcKPosition resolve_inputs(const GadgetTemplate& t, const Pattern& inputs);

/**
 * Blue must eventually delete every blue edge; a line is a set of Blue plays
 * doing so. An Out port reads A when its A edge is among the plays.
 */
struct CostReport {
    int min_cost = 0;
    std::vector<Pattern> achievable;      // output patterns reachable at min_cost
    std::map<Pattern, int> pattern_costs; // cheapest line per reachable pattern
    bool top_avoiding_min_line = false;   // some min-cost line plays no Top edge
};

/// Exhaustive memoized search. Ports whose edges are gone read I.
CostReport min_blue_moves(const ColouredGraph& fragment, const std::vector<InterfacePort>& out_ports);

} // namespace arck
