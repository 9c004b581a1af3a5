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

#include "arck/gadgets.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "arck/error.hpp"

namespace arck {

std::string_view to_string(GadgetKind k)
{
    switch (k) {
    case GadgetKind::Interface: return "interface";
    case GadgetKind::Goal: return "goal";
    case GadgetKind::Variable: return "variable";
    case GadgetKind::WireEven: return "wire_even";
    case GadgetKind::WireOdd: return "wire_odd";
    case GadgetKind::And: return "and";
    case GadgetKind::Or: return "or";
    case GadgetKind::Fanout: return "fanout";
    case GadgetKind::Choice: return "choice";
    }
    return "?";
}

std::string_view to_string(Backend b)
{
    switch (b) {
    case Backend::General: return "general";
    case Backend::Cartesian: return "cartesian";
    case Backend::Triangular: return "triangular";
    }
    return "?";
}

GadgetKind gadget_kind_from_string(std::string_view s)
{
    for (auto k : {GadgetKind::Interface, GadgetKind::Goal, GadgetKind::Variable, GadgetKind::WireEven,
                   GadgetKind::WireOdd, GadgetKind::And, GadgetKind::Or, GadgetKind::Fanout, GadgetKind::Choice})
        if (to_string(k) == s) return k;
    throw Error(ErrorCode::ParseError, "unknown gadget kind '" + std::string(s) + "'");
}

Backend backend_from_string(std::string_view s)
{
    for (auto b : {Backend::General, Backend::Cartesian, Backend::Triangular})
        if (to_string(b) == s) return b;
    throw Error(ErrorCode::ParseError, "unknown backend '" + std::string(s) + "'");
}

Lattice lattice_of(Backend b)
{
    switch (b) {
    case Backend::Cartesian: return Lattice::Cartesian;
    case Backend::Triangular: return Lattice::Triangular;
    default: return Lattice::None;
    }
}

std::vector<const InterfacePort*> GadgetTemplate::in_ports() const
{
    std::vector<const InterfacePort*> out;
    for (const auto& p : ports)
        if (p.direction == PortDirection::In) out.push_back(&p);
    return out;
}

std::vector<const InterfacePort*> GadgetTemplate::out_ports() const
{
    std::vector<const InterfacePort*> out;
    for (const auto& p : ports)
        if (p.direction == PortDirection::Out) out.push_back(&p);
    return out;
}

const InterfacePort& GadgetTemplate::port(std::string_view name) const
{
    for (const auto& p : ports)
        if (p.name == name) return p;
    throw Error(ErrorCode::PortMismatch, "no port '" + std::string(name) + "'");
}

int GadgetTemplate::edge_by_label(std::string_view label) const
{
    for (const auto& e : fragment.edges())
        if (e.label && *e.label == label) return e.id;
    return -1;
}

int GadgetTemplate::vertex_by_name(std::string_view name) const
{
    auto it = std::find(vertex_names.begin(), vertex_names.end(), name);
    return it == vertex_names.end() ? -1 : static_cast<int>(it - vertex_names.begin());
}

std::vector<int> GadgetTemplate::red_edges() const
{
    std::vector<int> out;
    for (const auto& e : fragment.edges())
        if (e.colour == EdgeColour::Red) out.push_back(e.id);
    return out;
}

namespace {

using Place = std::vector<std::pair<const char*, Coord>>;

/// Accumulates a template by vertex name. Red edges are laid out last so
/// they can sit in a strip clear of the blue structure.
class Builder {
public:
    Builder(GadgetKind kind, Backend backend) : kind_(kind), backend_(backend) {}

    /// Registers coordinates; ignored on the General backend.
    Builder& place(const Place& coords)
    {
        for (const auto& [name, c] : coords) vertex(name, c);
        return *this;
    }

    Builder& edge(const char* u, const char* v, const std::string& label)
    {
        add_edge(vertex(u), vertex(v), EdgeColour::Blue, label);
        return *this;
    }

    Builder& port(const std::string& name, PortDirection dir, const char* center, const char* i_end,
                  const char* a_end, const char* top)
    {
        InterfacePort p;
        p.name = name;
        p.direction = dir;
        p.center = vertex(center);
        p.i_end = vertex(i_end);
        p.a_end = vertex(a_end);
        p.top_end = vertex(top);
        p.I = add_edge(p.center, p.i_end, EdgeColour::Blue, name + ".I");
        p.A = add_edge(p.center, p.a_end, EdgeColour::Blue, name + ".A");
        p.Top = add_edge(p.center, p.top_end, EdgeColour::Blue, name + ".top");
        ports_.push_back(std::move(p));
        return *this;
    }

    /// Red edge between named vertices (part of the drawn structure).
    Builder& red(const char* u, const char* v, const std::string& label)
    {
        internal_reds_.push_back(add_edge(vertex(u), vertex(v), EdgeColour::Red, label));
        return *this;
    }

    /// Isolated red edge with no port owner.
    Builder& loose_red()
    {
        loose_.push_back(static_cast<int>(loose_.size()));
        return *this;
    }

    GadgetTemplate finish()
    {
        bool lattice = backend_ != Backend::General;
        int xmin = INT_MAX, ymin = INT_MAX;
        for (const auto& v : vertices_)
            if (v.coord) {
                xmin = std::min(xmin, v.coord->x);
                ymin = std::min(ymin, v.coord->y);
            }
        int slot = 0;
        auto isolated = [&](const std::string& stem) {
            std::optional<Coord> a, b;
            if (lattice) {
                a = Coord{xmin + 3 * slot, ymin - 2};
                b = Coord{xmin + 3 * slot + 1, ymin - 2};
            }
            ++slot;
            int u = fresh(stem + ".r", a);
            int v = fresh(stem + ".s", b);
            return add_edge(u, v, EdgeColour::Red, stem + ".red");
        };
        // Ordered as ports first, then internal companions.
        for (auto& p : ports_) p.companion = isolated(p.name);
        for (std::size_t i = 0; i < loose_.size(); ++i) internal_reds_.push_back(isolated("x" + std::to_string(i + 1)));

        GadgetTemplate t;
        t.kind = kind_;
        t.backend = backend_;
        std::stable_partition(ports_.begin(), ports_.end(),
                              [](const InterfacePort& p) { return p.direction == PortDirection::In; });
        t.ports = ports_;
        t.internal_reds = internal_reds_;
        t.vertex_names = names_;
        t.fragment = assemble_graph(vertices_, edges_, lattice_of(backend_));
        return t;
    }

private:
    int vertex(const char* name, std::optional<Coord> c = std::nullopt)
    {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        if (backend_ != Backend::General && !c)
            throw Error(ErrorCode::MissingCoordinate, std::string("template vertex ") + name);
        return fresh(name, backend_ == Backend::General ? std::nullopt : c);
    }

    int fresh(const std::string& name, std::optional<Coord> c)
    {
        int id = static_cast<int>(vertices_.size());
        vertices_.push_back({id, c});
        names_.push_back(name);
        index_[name] = id;
        return id;
    }

    int add_edge(int u, int v, EdgeColour colour, const std::string& label)
    {
        int id = static_cast<int>(edges_.size());
        edges_.push_back({id, u, v, colour, label});
        return id;
    }

    GadgetKind kind_;
    Backend backend_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<InterfacePort> ports_;
    std::vector<int> internal_reds_;
    std::vector<int> loose_;
};

constexpr auto In = PortDirection::In;
constexpr auto Out = PortDirection::Out;

const Place& pick(Backend b, const Place& cart, const Place& tri)
{
    static const Place none;
    if (b == Backend::Cartesian) return cart;
    if (b == Backend::Triangular) return tri;
    return none;
}

GadgetTemplate interface_gadget(Backend be)
{
    Place cart{{"a", {1, 0}}, {"b", {0, 0}}, {"c", {2, 0}}, {"d", {1, 1}}};
    Place tri{{"a", {1, 0}}, {"b", {0, 0}}, {"c", {2, 0}}, {"d", {0, 1}}};
    return Builder(GadgetKind::Interface, be).place(pick(be, cart, tri)).port("port", In, "a", "b", "c", "d").finish();
}

GadgetTemplate goal_gadget(Backend be)
{
    // The G edge bends upward on lattices.
    Place cart{{"a", {-2, 0}}, {"b", {-3, 0}}, {"c", {-1, 0}}, {"d", {-2, 1}}, {"e", {-1, 1}}};
    Place tri{{"a", {-2, 0}}, {"b", {-3, 0}}, {"c", {-1, 0}}, {"d", {-3, 1}}, {"e", {-1, 1}}};
    return Builder(GadgetKind::Goal, be)
        .place(pick(be, cart, tri))
        .port("in", In, "a", "b", "c", "d")
        .edge("c", "e", "G")
        .finish();
}

GadgetTemplate variable_gadget(Backend be)
{
    Place cart{{"a", {-4, 0}}, {"b", {-3, 0}}, {"c", {-2, 0}}, {"d", {-1, 0}}, {"e", {0, 0}},
               {"f", {1, 0}},  {"g", {2, 0}},  {"h", {3, 0}},  {"j", {2, 1}}};
    Place tri = cart;
    tri.back().second = {1, 1};
    return Builder(GadgetKind::Variable, be)
        .place(pick(be, cart, tri))
        .edge("a", "b", "a")
        .red("b", "c", "b")
        .red("c", "d", "c")
        .edge("d", "e", "d")
        .edge("e", "f", "e")
        .port("out", Out, "g", "f", "h", "j")
        .finish();
}

GadgetTemplate and_gadget(Backend be)
{
    Place cart{{"a", {0, 0}}, {"b", {1, 0}}, {"c", {2, 0}}, {"d", {1, 1}}, {"e", {0, 2}}, {"f", {1, 2}},
               {"g", {2, 2}}, {"h", {1, 3}}, {"i", {2, 1}}, {"j", {3, 1}}, {"k", {4, 1}}, {"l", {3, 2}}};
    Place tri{{"a", {0, 0}},  {"b", {1, 0}}, {"c", {2, 0}}, {"d", {0, 1}}, {"e", {-1, 2}}, {"f", {0, 2}},
              {"g", {1, 2}},  {"h", {-1, 3}}, {"i", {2, 1}}, {"j", {3, 1}}, {"k", {4, 1}}, {"l", {2, 2}}};
    return Builder(GadgetKind::And, be)
        .place(pick(be, cart, tri))
        .port("in1", In, "f", "e", "g", "h")
        .port("in2", In, "b", "a", "c", "d")
        .edge("i", "c", "a")
        .edge("i", "g", "b")
        .port("out", Out, "j", "i", "k", "l")
        .finish();
}

GadgetTemplate or_general()
{
    return Builder(GadgetKind::Or, Backend::General)
        .port("in1", In, "f", "e", "g", "h")
        .port("in2", In, "b", "a", "c", "d")
        .edge("g", "c", "a")
        .edge("g", "i", "b")
        .edge("i", "c", "c")
        .edge("i", "l", "d")
        .edge("l", "j", "e")
        .port("out", Out, "k", "j", "m", "o")
        .loose_red()
        .finish();
}

GadgetTemplate or_cartesian()
{
    Place cart{{"a", {0, 0}}, {"b", {1, 0}}, {"c", {2, 0}}, {"d", {1, 1}},  {"e", {0, 2}},
               {"f", {1, 2}}, {"h", {1, 3}}, {"g", {2, 2}}, {"i", {3, 0}},  {"j", {2, 3}},
               {"k", {3, 1}}, {"l", {3, 2}}, {"m", {4, 1}}, {"n", {5, 1}},  {"o", {6, 1}},
               {"p", {2, -1}}, {"q", {3, -1}}, {"u", {3, 3}}, {"v", {5, 2}}};
    return Builder(GadgetKind::Or, Backend::Cartesian)
        .place(cart)
        .port("in1", In, "f", "e", "g", "h")
        .port("in2", In, "b", "a", "c", "d")
        .edge("j", "g", "a")
        .edge("l", "g", "b")
        .edge("u", "l", "c")
        .edge("l", "k", "d")
        .edge("c", "p", "e")
        .edge("i", "c", "f")
        .edge("i", "q", "g")
        .edge("i", "k", "h")
        .edge("m", "k", "i")
        .port("out", Out, "n", "m", "o", "v")
        .loose_red()
        .loose_red()
        .finish();
}

GadgetTemplate or_triangular()
{
    Place tri{{"a", {0, 0}}, {"b", {1, 0}}, {"c", {2, 0}}, {"d", {0, 1}}, {"e", {-1, 2}},
              {"f", {0, 2}}, {"g", {1, 2}}, {"h", {-1, 3}}, {"i", {2, 1}}, {"j", {3, 1}},
              {"k", {4, 1}}, {"l", {2, 2}}, {"m", {5, 1}}, {"n", {6, 1}}, {"o", {4, 2}}};
    return Builder(GadgetKind::Or, Backend::Triangular)
        .place(tri)
        .port("in1", In, "f", "e", "g", "h")
        .port("in2", In, "b", "a", "c", "d")
        .edge("l", "g", "a")
        .edge("c", "i", "b")
        .edge("l", "i", "c")
        .edge("j", "i", "d")
        .edge("l", "j", "e")
        .edge("j", "k", "f")
        .port("out", Out, "m", "k", "n", "o")
        .loose_red()
        .finish();
}

Builder fanout_base(GadgetKind kind, Backend be)
{
    Place cart{{"a", {0, 1}}, {"b", {1, 1}}, {"c", {2, 1}}, {"d", {1, 2}}, {"e", {2, 0}}, {"f", {3, 0}},
               {"g", {4, 0}}, {"h", {3, 1}}, {"i", {2, 2}}, {"j", {3, 2}}, {"k", {4, 2}}, {"l", {3, 3}}};
    Place tri{{"a", {0, 0}},  {"b", {1, 0}},  {"c", {2, 0}},  {"d", {0, 1}}, {"e", {3, -1}}, {"f", {4, -1}},
              {"g", {5, -1}}, {"h", {3, 0}},  {"i", {2, 1}},  {"j", {3, 1}}, {"k", {4, 1}},  {"l", {2, 2}}};
    Builder b(kind, be);
    b.place(pick(be, cart, tri))
        .port("in", In, "b", "a", "c", "d")
        .edge("c", "i", "a")
        .edge("c", "e", "b")
        .port("upper", Out, "j", "i", "k", "l")
        .port("lower", Out, "f", "e", "g", "h");
    return b;
}

GadgetTemplate choice_cartesian()
{
    Place cart{{"a", {1, 1}},   {"b", {0, 1}},   {"c", {2, 1}},   {"d", {1, 2}},   {"da", {2, 0}},
               {"dc", {2, 2}},  {"ea", {3, 0}},  {"eb", {3, 1}},  {"ec", {3, 2}},  {"fa", {4, 0}},
               {"fb", {4, 1}},  {"fc", {4, 2}},  {"ga", {5, 0}},  {"gc", {5, 2}},  {"aa", {7, 0}},
               {"bb", {6, 0}},  {"cc", {8, 0}},  {"dd", {7, 1}},  {"aaa", {7, 2}}, {"bbb", {6, 2}},
               {"ccc", {8, 2}}, {"ddd", {7, 3}}};
    return Builder(GadgetKind::Choice, Backend::Cartesian)
        .place(cart)
        .port("in", In, "a", "b", "c", "d")
        .edge("c", "dc", "a")
        .edge("c", "da", "b")
        .edge("ec", "dc", "c")
        .edge("c", "eb", "d")
        .edge("ea", "da", "e")
        .edge("ec", "eb", "f")
        .edge("ea", "eb", "g")
        .edge("ec", "fc", "h")
        .edge("eb", "fb", "i")
        .edge("ea", "fa", "j")
        .edge("gc", "fc", "k")
        .edge("ga", "fa", "l")
        .edge("gc", "bbb", "m")
        .edge("ga", "bb", "n")
        .port("upper", Out, "aaa", "bbb", "ccc", "ddd")
        .port("lower", Out, "aa", "bb", "cc", "dd")
        .loose_red()
        .loose_red()
        .loose_red()
        .finish();
}

GadgetTemplate choice_triangular()
{
    Place tri{{"a", {0, 0}}, {"b", {1, 0}},  {"c", {2, 0}},  {"e", {0, 1}},  {"f", {2, 1}}, {"d", {3, 0}},
              {"h", {3, 1}}, {"j", {3, 2}},  {"g", {4, -1}}, {"i", {5, -2}}, {"n", {4, 2}}, {"o", {5, 2}},
              {"p", {3, 3}}, {"k", {6, -2}}, {"l", {7, -2}}, {"m", {5, -1}}};
    return Builder(GadgetKind::Choice, Backend::Triangular)
        .place(tri)
        .port("in", In, "b", "a", "c", "e")
        .edge("c", "f", "a")
        .edge("c", "d", "b")
        .edge("h", "d", "c")
        .edge("g", "d", "d")
        .edge("h", "j", "e")
        .edge("g", "i", "f")
        .port("upper", Out, "n", "j", "o", "p")
        .port("lower", Out, "k", "i", "l", "m")
        .loose_red()
        .finish();
}

GadgetTemplate wire(WireParity parity, Backend be)
{
    if (parity == WireParity::Even) {
        Place cart{{"a", {0, 0}}, {"b", {1, 0}}, {"c", {2, 0}}, {"d", {3, 0}}, {"e", {4, 0}}, {"f", {5, 0}},
                   {"g", {6, 0}}, {"h", {1, 1}}, {"i", {2, 1}}, {"j", {3, 1}}, {"k", {4, 1}}, {"l", {5, 1}}};
        Place tri{{"a", {0, 0}}, {"b", {1, 0}}, {"c", {2, 0}}, {"d", {3, 0}}, {"e", {4, 0}}, {"f", {5, 0}},
                  {"g", {6, 0}}, {"h", {0, 1}}, {"i", {1, 1}}, {"j", {2, 1}}, {"k", {3, 1}}, {"l", {4, 1}}};
        return Builder(GadgetKind::WireEven, be)
            .place(pick(be, cart, tri))
            .port("in", In, "b", "a", "c", "h")
            .edge("c", "i", "a")
            .edge("c", "d", "b")
            .edge("d", "j", "c")
            .edge("d", "e", "d")
            .edge("e", "k", "e")
            .port("out", Out, "f", "e", "g", "l")
            .loose_red()
            .finish();
    }
    Place cart{{"a", {0, 0}}, {"b", {1, 0}}, {"c", {2, 0}}, {"d", {3, 0}}, {"e", {4, 0}}, {"f", {5, 0}},
               {"g", {6, 0}}, {"h", {7, 0}}, {"i", {1, 1}}, {"j", {4, 1}}, {"k", {5, 1}}, {"l", {6, 1}}};
    Place tri{{"a", {0, 0}}, {"b", {1, 0}}, {"c", {2, 0}}, {"d", {3, 0}}, {"e", {4, 0}}, {"f", {5, 0}},
              {"g", {6, 0}}, {"h", {7, 0}}, {"i", {0, 1}}, {"j", {3, 1}}, {"k", {4, 1}}, {"l", {5, 1}}};
    return Builder(GadgetKind::WireOdd, be)
        .place(pick(be, cart, tri))
        .port("in", In, "b", "a", "c", "i")
        .edge("d", "c", "a")
        .edge("d", "e", "b")
        .edge("e", "j", "c")
        .edge("e", "f", "d")
        .edge("f", "k", "e")
        .port("out", Out, "g", "f", "h", "l")
        .loose_red()
        .finish();
}

[[noreturn]] void undefined(GadgetKind k, Backend b)
{
    throw Error(ErrorCode::UndefinedTemplate, std::string(to_string(k)) + " on " + std::string(to_string(b)));
}

} // namespace

GadgetTemplate gadget_template(GadgetKind kind, Backend backend)
{
    switch (kind) {
    case GadgetKind::Interface: return interface_gadget(backend);
    case GadgetKind::Goal: return goal_gadget(backend);
    case GadgetKind::Variable: return variable_gadget(backend);
    case GadgetKind::And: return and_gadget(backend);
    case GadgetKind::Or:
        if (backend == Backend::Cartesian) return or_cartesian();
        if (backend == Backend::Triangular) return or_triangular();
        return or_general();
    case GadgetKind::Fanout: return fanout_base(kind, backend).finish();
    case GadgetKind::Choice:
        if (backend == Backend::Cartesian) return choice_cartesian();
        if (backend == Backend::Triangular) return choice_triangular();
        return fanout_base(kind, backend).edge("e", "i", "c").finish();
    case GadgetKind::WireEven:
    case GadgetKind::WireOdd:
        if (backend == Backend::General) undefined(kind, backend);
        return wire(kind == GadgetKind::WireEven ? WireParity::Even : WireParity::Odd, backend);
    }
    undefined(kind, backend);
}

GadgetTemplate make_wire(WireParity parity, Backend backend)
{
    return gadget_template(parity == WireParity::Even ? GadgetKind::WireEven : GadgetKind::WireOdd, backend);
}

std::vector<std::pair<GadgetKind, Backend>> defined_templates()
{
    std::vector<std::pair<GadgetKind, Backend>> out;
    for (auto b : {Backend::General, Backend::Cartesian, Backend::Triangular})
        for (auto k : {GadgetKind::Interface, GadgetKind::Goal, GadgetKind::Variable, GadgetKind::WireEven,
                       GadgetKind::WireOdd, GadgetKind::And, GadgetKind::Or, GadgetKind::Fanout,
                       GadgetKind::Choice}) {
            if (b == Backend::General && (k == GadgetKind::WireEven || k == GadgetKind::WireOdd)) continue;
            out.emplace_back(k, b);
        }
    return out;
}

} // namespace arck
