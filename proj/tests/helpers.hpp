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

#include <string>
#include <utility>
#include <vector>

#include "arck/arc_kayles.hpp"
#include "arck/graph.hpp"
#include "arck/poscnf.hpp"

namespace testing {

using arck::EdgeColour;

inline arck::ColouredGraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                                      EdgeColour colour = EdgeColour::Blue)
{
    std::vector<arck::Vertex> vs;
    for (int i = 0; i < n; ++i) vs.push_back({i, std::nullopt});
    std::vector<arck::Edge> es;
    for (const auto& [u, v] : pairs) es.push_back({static_cast<int>(es.size()), u, v, colour, std::nullopt});
    return arck::build_graph(vs, es);
}

inline arck::ColouredGraph complete(int n)
{
    std::vector<std::pair<int, int>> p;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) p.emplace_back(a, b);
    return from_pairs(n, p);
}

inline arck::ColouredGraph k33()
{
    std::vector<std::pair<int, int>> p;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) p.emplace_back(a, b);
    return from_pairs(6, p);
}

inline arck::ArcKPosition position(arck::ColouredGraph g, arck::Convention c, arck::Player mover)
{
    return {std::move(g), c, mover};
}

inline arck::PosCNFFormula formula(int n, std::vector<std::vector<int>> clauses)
{
    return {n, std::move(clauses)};
}

} // namespace testing
