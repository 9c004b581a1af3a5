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
#include <string_view>
#include <utility>
#include <vector>

#include "arck/graph.hpp"

namespace arck {

enum class GadgetKind { Interface, Goal, Variable, WireEven, WireOdd, And, Or, Fanout, Choice };
enum class Backend { General, Cartesian, Triangular };
enum class PortDirection { In, Out };
enum class WireParity { Even, Odd };

std::string_view to_string(GadgetKind k);
std::string_view to_string(Backend b);
GadgetKind gadget_kind_from_string(std::string_view s);
Backend backend_from_string(std::string_view s);
Lattice lattice_of(Backend b);

/**
 * Four-vertex interface: I = (center, i_end), A = (center, a_end),
 * Top = (center, top_end). Neighbouring structure attaches at a_end on an
 * In port and at i_end on an Out port.
 */
struct InterfacePort {
    std::string name;
    PortDirection direction = PortDirection::In;
    int center = -1;
    int i_end = -1;
    int a_end = -1;
    int top_end = -1;
    int I = -1;
    int A = -1;
    int Top = -1;
    int companion = -1; // isolated red edge paired with this interface

    /// Vertex where the rest of the gadget attaches.
    int attachment() const { return direction == PortDirection::In ? a_end : i_end; }
};

struct GadgetTemplate {
    GadgetKind kind = GadgetKind::Interface;
    Backend backend = Backend::General;
    ColouredGraph fragment;
    std::vector<InterfacePort> ports;     // In ports first, then Out ports
    std::vector<int> internal_reds;       // red edges not tied to a port
    std::vector<std::string> vertex_names; // indexed by vertex id

    std::vector<const InterfacePort*> in_ports() const;
    std::vector<const InterfacePort*> out_ports() const;
    const InterfacePort& port(std::string_view name) const;
    int edge_by_label(std::string_view label) const;
    int vertex_by_name(std::string_view name) const;
    std::vector<int> red_edges() const;
};

/// Throws Error{UndefinedTemplate} for pairs without a template.
GadgetTemplate gadget_template(GadgetKind kind, Backend backend);

/// Lattice backends only; General connects ports directly.
GadgetTemplate make_wire(WireParity parity, Backend backend);

/// Every (kind, backend) pair with a template, in a fixed order.
std::vector<std::pair<GadgetKind, Backend>> defined_templates();

} // namespace arck
