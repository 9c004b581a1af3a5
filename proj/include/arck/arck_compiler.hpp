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
#include <vector>

#include "arck/arc_kayles.hpp"
#include "arck/cl_compiler.hpp"
#include "arck/constraint_logic.hpp"
#include "arck/gadgets.hpp"
#include "arck/planarity.hpp"
#include "arck/poscnf.hpp"
#include "arck/serialize.hpp"

namespace arck {

/// One placed template. Goal gadgets and wires have cl_vertex = -1.
struct GadgetInstance {
    int index = 0;
    GadgetKind kind = GadgetKind::Interface;
    int cl_vertex = -1;
    int cl_edge = -1;                   // goal arc or wired arc, else -1
    std::vector<std::string> port_names; // template port order
    std::vector<int> port_centers;       // emitted center vertex per port
    std::vector<int> edges;              // emitted structural edges owned by this instance
    Coord offset{};                      // lattice translation
};

/// How one CL arc was realised.
struct Connection {
    enum class Kind { Merged, DanglingOut, DanglingIn, Goal, Isolated };
    int cl_edge = -1;
    Kind kind = Kind::Merged;
    int producer = -1; // instance index, -1 when the producer side is a terminal
    std::string out_port;
    int consumer = -1; // instance index, -1 when the consumer side is a terminal
    std::string in_port;
    std::vector<int> wires;  // wire instance indices, producer side first
    int interface_center = -1;
};

struct ArcKTrace {
    Backend backend = Backend::General;
    std::vector<GadgetInstance> gadgets;
    std::vector<Connection> connections;
    std::vector<int> absorbed_cl_edges; // red claim arcs and dropped red structures

    // Edge buckets; each emitted edge is in exactly one.
    std::vector<int> structure;  // blue edges and attached reds of the gadgets
    std::vector<int> companions; // one isolated red per interface and per loose template red
    std::vector<int> pair_reds;  // one isolated red per pair of Variable gadgets
    int k = 0;                   // hidden Red plays of the source, if known
};

struct ArcKCompilation {
    ArcKPosition position;
    ArcKTrace trace;
};

struct ArcKCompileOptions {
    int wires_per_connection = 0; // lattice only: extra even wires on every merged arc
};

/**
 * Lowers a basis-only, crossing-free B2CL instance. Red structures that are
 * not a Variable's claim (hidden components, the Red goal) are absorbed:
 * their budget is carried by the gadgets' own red companions.
 * Throws Error{NonBasisVertex | NotPlanarEmbedding | OddVariableCount | PortMismatch}.
 */
ArcKCompilation compile_b2cl_to_arck(const CLInstance& inst, Backend backend,
                                     const std::optional<Embedding>& embedding = std::nullopt,
                                     const ArcKCompileOptions& options = {});

/// PosCNF -> Standard B2CL -> ArcK, padding an odd variable count with an unused variable.
ArcKCompilation compile_poscnf_to_arck(const PosCNFFormula& f, Backend backend, const ArcKCompileOptions& options = {});

/// The CL instance as an undirected graph, edge ids kept.
ColouredGraph cl_skeleton(const CLInstance& inst);

struct RedBudget {
    int companions = 0;
    int structural = 0; // reds inside gadget structure (Variable claim pieces)
    int pair_reds = 0;
    int k_components = 0; // emitted; hidden components are absorbed, so 0
    int k = 0;
    int emitted_red = 0;  // red edges actually present in the position
    std::vector<std::pair<int, int>> blue_min_moves; // instance index -> oracle minimum
    int total() const { return companions + structural + pair_reds + k_components; }
    bool balanced() const { return total() == emitted_red; }
};
RedBudget red_budget(const ArcKCompilation& c);

Json to_json(const ArcKTrace& t);
Json to_json(const RedBudget& b);

} // namespace arck
