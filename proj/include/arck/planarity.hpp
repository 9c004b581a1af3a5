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
#include <vector>

#include "arck/graph.hpp"

namespace arck {

/// Rotation system: for every vertex, its incident edge ids in cyclic order.
using Embedding = std::map<int, std::vector<int>>;

enum class KuratowskiKind { None, K5, K33 };

struct PlanarityResult {
    bool planar = false;
    Embedding embedding;            // set when planar
    std::vector<int> witness_edges; // edge ids of a Kuratowski subdivision when not planar
    KuratowskiKind witness_kind = KuratowskiKind::None;
};

PlanarityResult is_planar(const ColouredGraph& g);

/// Number of faces traced by a rotation system, or -1 if the rotation does
/// not list exactly the incident edges of each vertex.
int count_faces(const ColouredGraph& g, const Embedding& rotation);

/// True iff the rotation system is a genus-0 embedding of g
/// (V - E + F = 1 + C for C connected components, isolated vertices included).
bool is_plane_embedding(const ColouredGraph& g, const Embedding& rotation);

/// Classifies an edge subset as a subdivision of K5 or K3,3 (or None).
KuratowskiKind classify_kuratowski(const ColouredGraph& g, const std::vector<int>& edge_ids);

} // namespace arck
