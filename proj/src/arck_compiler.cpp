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

#include "arck/arck_compiler.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <set>

#include "arck/cost_oracle.hpp"
#include "arck/error.hpp"

namespace arck {

ColouredGraph cl_skeleton(const CLInstance& inst)
{
    std::vector<Vertex> vs;
    for (const auto& v : inst.vertices) vs.push_back({v.id, std::nullopt});
    std::vector<Edge> es;
    for (const auto& e : inst.edges)
        es.push_back({e.id, e.initial_tail(), e.initial_head(),
                      e.colour == Player::Blue ? EdgeColour::Blue : EdgeColour::Red, std::nullopt});
    return assemble_graph(std::move(vs), std::move(es));
}

namespace {

std::optional<GadgetKind> gadget_kind(VertexKind k)
{
    switch (k) {
    case VertexKind::And: return GadgetKind::And;
    case VertexKind::Or: return GadgetKind::Or;
    case VertexKind::Fanout: return GadgetKind::Fanout;
    case VertexKind::Choice: return GadgetKind::Choice;
    case VertexKind::Variable: return GadgetKind::Variable;
    default: return std::nullopt;
    }
}

bool isolated_red(const GadgetTemplate& t, int edge_id)
{
    const Edge& e = t.fragment.edge(edge_id);
    return e.colour == EdgeColour::Red && t.fragment.degree(e.u) == 1 && t.fragment.degree(e.v) == 1;
}

/// Out port of `producer` feeds In port of `consumer`.
struct Link {
    int producer;
    int out_port;
    int consumer;
    int in_port;
    int connection = -1; // set on the link that lands on the consumer
};

struct Placed {
    GadgetInstance info;
    GadgetTemplate tmpl;
};

class Lowering {
public:
    Lowering(const CLInstance& inst, Backend backend, const ArcKCompileOptions& opts)
        : inst_(inst), backend_(backend), opts_(opts)
    {
    }

    ArcKCompilation run()
    {
        absorb();
        instantiate();
        connect();
        int variables = 0;
        for (const auto& p : placed_) variables += p.info.kind == GadgetKind::Variable;
        if (variables % 2)
            throw Error(ErrorCode::OddVariableCount,
                        std::to_string(variables) + " Variable gadgets; pad with an unused variable");
        if (backend_ != Backend::General) place();
        return emit(variables / 2);
    }

private:
    bool terminal(int v) const { return inst_.vertex(v).terminal; }

    void absorb()
    {
        std::set<int> drop_vertices;
        for (const auto& e : inst_.edges)
            if (e.goal_for == Player::Red) {
                drop_vertices.insert(e.initial_head());
                drop_vertices.insert(e.initial_tail());
            }
        for (const auto& v : inst_.vertices) {
            if (v.terminal) continue;
            bool all_red = true, any = false;
            for (const auto& e : inst_.edges)
                if (e.initial_head() == v.id || e.initial_tail() == v.id) {
                    any = true;
                    all_red = all_red && e.colour == Player::Red;
                }
            if (any && all_red) drop_vertices.insert(v.id);
        }
        for (const auto& e : inst_.edges) {
            bool dropped = (drop_vertices.contains(e.initial_head()) && !terminal(e.initial_head())) ||
                           (drop_vertices.contains(e.initial_tail()) && !terminal(e.initial_tail())) ||
                           e.goal_for == Player::Red;
            // A Variable's claim arc lives inside its gadget.
            bool claim = e.colour == Player::Red && !terminal(e.initial_head()) &&
                         classify_vertex(inst_, e.initial_head()) == VertexKind::Variable;
            if (dropped || claim) trace_.absorbed_cl_edges.push_back(e.id);
            else if (e.colour == Player::Red)
                throw Error(ErrorCode::NonBasisVertex, "red arc " + std::to_string(e.id) + " outside a Variable");
            else kept_.push_back(e.id);
        }
        for (const auto& v : inst_.vertices) {
            if (v.terminal || drop_vertices.contains(v.id)) continue;
            if (!gadget_kind(classify_vertex(inst_, v.id)))
                throw Error(ErrorCode::NonBasisVertex,
                            "vertex " + std::to_string(v.id) + " (" + std::string(to_string(classify_vertex(inst_, v.id))) +
                                ")");
            gadget_vertices_.push_back(v.id);
        }
    }

    int add_instance(GadgetKind kind, int cl_vertex, int cl_edge)
    {
        Placed p{GadgetInstance{}, gadget_template(kind, backend_)};
        p.info.index = static_cast<int>(placed_.size());
        p.info.kind = kind;
        p.info.cl_vertex = cl_vertex;
        p.info.cl_edge = cl_edge;
        for (const auto& port : p.tmpl.ports) p.info.port_names.push_back(port.name);
        placed_.push_back(std::move(p));
        return placed_.back().info.index;
    }

    void instantiate()
    {
        for (int v : gadget_vertices_) {
            int idx = add_instance(*gadget_kind(classify_vertex(inst_, v)), v, -1);
            instance_of_[v] = idx;
            const GadgetTemplate& t = placed_[idx].tmpl;
            std::vector<int> ins, outs;
            for (int id : kept_) {
                const CLEdge& e = inst_.edge(id);
                if (e.initial_tail() == v) ins.push_back(id);
                if (e.initial_head() == v) outs.push_back(id);
            }
            if (ins.size() != t.in_ports().size() || outs.size() != t.out_ports().size())
                throw Error(ErrorCode::PortMismatch, "vertex " + std::to_string(v) + " arity");
            int port = 0;
            for (int id : ins) in_port_[id] = port++;
            for (int id : outs) out_port_[id] = port++;
        }
    }

    void connect()
    {
        for (int id : kept_) {
            const CLEdge& e = inst_.edge(id);
            Connection c;
            c.cl_edge = id;
            int head = e.initial_head(), tail = e.initial_tail();
            if (instance_of_.contains(head)) {
                c.producer = instance_of_[head];
                c.out_port = placed_[c.producer].tmpl.ports[out_port_[id]].name;
            }
            if (instance_of_.contains(tail)) {
                c.consumer = instance_of_[tail];
                c.in_port = placed_[c.consumer].tmpl.ports[in_port_[id]].name;
            } else if (e.goal_for == Player::Blue) {
                c.consumer = add_instance(GadgetKind::Goal, -1, id);
                c.in_port = "in";
            }
            if (c.producer >= 0 && c.consumer >= 0) {
                c.kind = e.goal_for == Player::Blue ? Connection::Kind::Goal : Connection::Kind::Merged;
                int from = c.producer;
                int from_port = out_port_[id];
                if (backend_ != Backend::General)
                    for (int w = 0; w < opts_.wires_per_connection; ++w) {
                        int wi = add_instance(GadgetKind::WireEven, -1, id);
                        c.wires.push_back(wi);
                        links_.push_back({from, from_port, wi, 0});
                        from = wi;
                        from_port = 1;
                    }
                int in_idx = e.goal_for == Player::Blue && !instance_of_.contains(tail) ? 0 : in_port_[id];
                links_.push_back({from, from_port, c.consumer, in_idx, static_cast<int>(trace_.connections.size())});
            } else if (c.producer >= 0) {
                c.kind = Connection::Kind::DanglingOut;
            } else if (c.consumer >= 0) {
                c.kind = Connection::Kind::DanglingIn;
            } else {
                c.kind = Connection::Kind::Isolated;
                c.consumer = add_instance(GadgetKind::Interface, -1, id);
                c.in_port = "port";
            }
            trace_.connections.push_back(std::move(c));
        }
    }

    Coord center_of(int inst, int port) const
    {
        const auto& t = placed_[inst].tmpl;
        return *t.fragment.vertex(t.ports[port].center).coord;
    }

    /// Breadth-first translation of each connected group so merged ports coincide,
    /// then groups side by side.
    void place()
    {
        std::vector<std::vector<std::pair<int, Coord>>> adj(placed_.size());
        for (const auto& l : links_) {
            Coord d = center_of(l.producer, l.out_port) - center_of(l.consumer, l.in_port);
            adj[l.consumer].push_back({l.producer, d});
            adj[l.producer].push_back({l.consumer, Coord{0, 0} - d});
        }
        std::vector<bool> done(placed_.size(), false);
        int cursor = 0;
        for (std::size_t root = 0; root < placed_.size(); ++root) {
            if (done[root]) continue;
            std::vector<int> group{static_cast<int>(root)};
            std::deque<int> queue{static_cast<int>(root)};
            done[root] = true;
            placed_[root].info.offset = {0, 0};
            while (!queue.empty()) {
                int a = queue.front();
                queue.pop_front();
                for (auto [b, d] : adj[a]) {
                    // producer offset = consumer offset + (consumer center - producer center)
                    Coord want = placed_[a].info.offset - d;
                    if (done[b]) {
                        if (placed_[b].info.offset != want)
                            throw Error(ErrorCode::PortMismatch,
                                        "gadget graph has a cycle that does not close on the lattice");
                        continue;
                    }
                    done[b] = true;
                    placed_[b].info.offset = want;
                    group.push_back(b);
                    queue.push_back(b);
                }
            }
            int xmin = INT_MAX, xmax = INT_MIN, ymin = INT_MAX;
            for (int g : group)
                for (const auto& v : placed_[g].tmpl.fragment.vertices()) {
                    Coord c = *v.coord + placed_[g].info.offset;
                    xmin = std::min(xmin, c.x);
                    xmax = std::max(xmax, c.x);
                    ymin = std::min(ymin, c.y);
                }
            Coord shift{cursor - xmin, -ymin};
            for (int g : group) placed_[g].info.offset = placed_[g].info.offset + shift;
            cursor += xmax - xmin + 3;
        }
    }

    ArcKCompilation emit(int pairs)
    {
        // Union the consumer side of each link into the producer side.
        std::map<std::pair<int, int>, std::pair<int, int>> parent;
        auto find = [&](std::pair<int, int> x) {
            while (parent.contains(x) && parent[x] != x) x = parent[x];
            return x;
        };
        std::set<std::pair<int, int>> consumed_ports; // (instance, port index)
        for (const auto& l : links_) {
            const auto& pp = placed_[l.producer].tmpl.ports[l.out_port];
            const auto& cp = placed_[l.consumer].tmpl.ports[l.in_port];
            const int pv[] = {pp.center, pp.i_end, pp.a_end, pp.top_end};
            const int cv[] = {cp.center, cp.i_end, cp.a_end, cp.top_end};
            for (int i = 0; i < 4; ++i) {
                auto a = find({l.producer, pv[i]});
                auto b = find({l.consumer, cv[i]});
                if (a != b) parent[b] = a;
            }
            consumed_ports.insert({l.consumer, l.in_port});
        }

        const bool lattice = backend_ != Backend::General;
        std::vector<Vertex> vs;
        std::vector<Edge> es;
        std::map<std::pair<int, int>, int> gid;
        auto global = [&](int inst, int tv) {
            auto root = find({inst, tv});
            auto it = gid.find(root);
            std::optional<Coord> c;
            if (lattice) c = *placed_[inst].tmpl.fragment.vertex(tv).coord + placed_[inst].info.offset;
            if (it != gid.end()) {
                if (lattice && vs[it->second].coord != c)
                    throw Error(ErrorCode::PortMismatch, "merged interface vertices disagree on coordinates");
                return it->second;
            }
            int id = static_cast<int>(vs.size());
            vs.push_back({id, c});
            gid[root] = id;
            return id;
        };
        auto add_edge = [&](int u, int v, EdgeColour col, std::optional<std::string> label) {
            int id = static_cast<int>(es.size());
            es.push_back({id, u, v, col, std::move(label)});
            return id;
        };

        int loose_reds = 0;
        for (auto& p : placed_) {
            const auto& t = p.tmpl;
            std::set<int> skip;
            for (std::size_t i = 0; i < t.ports.size(); ++i) {
                bool consumed = consumed_ports.contains({p.info.index, static_cast<int>(i)});
                if (consumed) skip.insert({t.ports[i].I, t.ports[i].A, t.ports[i].Top});
                if (!consumed) ++loose_reds;
                skip.insert(t.ports[i].companion);
            }
            for (int r : t.internal_reds)
                if (isolated_red(t, r)) {
                    skip.insert(r);
                    ++loose_reds;
                }
            std::string prefix = "g" + std::to_string(p.info.index) + ":";
            for (const auto& e : t.fragment.edges()) {
                if (skip.contains(e.id)) continue;
                int id = add_edge(global(p.info.index, e.u), global(p.info.index, e.v), e.colour,
                                  prefix + e.label.value_or(""));
                p.info.edges.push_back(id);
                trace_.structure.push_back(id);
            }
            for (const auto& port : t.ports) p.info.port_centers.push_back(global(p.info.index, port.center));
        }
        for (const auto& l : links_)
            if (l.connection >= 0)
                trace_.connections[l.connection].interface_center =
                    global(l.consumer, placed_[l.consumer].tmpl.ports[l.in_port].center);

        // Isolated reds: companions, then the per-pair extras, in a strip below.
        int xmin = 0, ymin = 0;
        if (lattice && !vs.empty()) {
            xmin = ymin = INT_MAX;
            for (const auto& v : vs) {
                xmin = std::min(xmin, v.coord->x);
                ymin = std::min(ymin, v.coord->y);
            }
        }
        int slot = 0;
        auto red = [&](const std::string& label) {
            std::optional<Coord> a, b;
            if (lattice) {
                a = Coord{xmin + 2 * slot, ymin - 2};
                b = Coord{xmin + 2 * slot + 1, ymin - 2};
            }
            ++slot;
            int u = static_cast<int>(vs.size());
            vs.push_back({u, a});
            vs.push_back({u + 1, b});
            return add_edge(u, u + 1, EdgeColour::Red, label);
        };
        for (int i = 0; i < loose_reds; ++i) trace_.companions.push_back(red("companion"));
        for (int i = 0; i < pairs; ++i) trace_.pair_reds.push_back(red("variable-pair"));

        ArcKCompilation out;
        out.position.graph = assemble_graph(std::move(vs), std::move(es), lattice_of(backend_));
        out.position.convention = Convention::Misere;
        out.position.to_move = Player::Blue;
        if (lattice) {
            SnapReport rep = grid_snap_check(out.position.graph, lattice_of(backend_));
            if (!rep.empty())
                throw Error(ErrorCode::PortMismatch, std::to_string(rep.violations.size()) +
                                                         " lattice violations; the layout needs crossings or bends");
        }
        trace_.backend = backend_;
        for (auto& p : placed_) trace_.gadgets.push_back(std::move(p.info));
        out.trace = std::move(trace_);
        return out;
    }

    const CLInstance& inst_;
    Backend backend_;
    ArcKCompileOptions opts_;
    ArcKTrace trace_;
    std::vector<int> kept_;
    std::vector<int> gadget_vertices_;
    std::map<int, int> instance_of_;
    std::map<int, int> in_port_;  // CL edge -> consumer port index
    std::map<int, int> out_port_; // CL edge -> producer port index
    std::vector<Placed> placed_;
    std::vector<Link> links_;
};

} // namespace

ArcKCompilation compile_b2cl_to_arck(const CLInstance& inst, Backend backend, const std::optional<Embedding>& embedding,
                                     const ArcKCompileOptions& options)
{
    ColouredGraph skeleton = cl_skeleton(inst);
    if (embedding) {
        if (!is_plane_embedding(skeleton, *embedding))
            throw Error(ErrorCode::NotPlanarEmbedding, "rotation system is not a plane embedding of the instance");
    } else if (!is_planar(skeleton).planar) {
        throw Error(ErrorCode::NotPlanarEmbedding, "instance graph is not planar");
    }
    return Lowering(inst, backend, options).run();
}

ArcKCompilation compile_poscnf_to_arck(const PosCNFFormula& f, Backend backend, const ArcKCompileOptions& options)
{
    PosCNFFormula padded = f;
    if (padded.num_vars % 2) padded.num_vars += 1;
    CLCompilation cl = compile_poscnf_to_b2cl(padded);
    ArcKCompilation out = compile_b2cl_to_arck(cl.instance, backend, std::nullopt, options);
    out.trace.k = cl.params.k;
    return out;
}

RedBudget red_budget(const ArcKCompilation& c)
{
    const ArcKTrace& t = c.trace;
    const ColouredGraph& g = c.position.graph;
    RedBudget b;
    b.companions = static_cast<int>(t.companions.size());
    b.pair_reds = static_cast<int>(t.pair_reds.size());
    for (int id : t.structure) b.structural += g.edge(id).colour == EdgeColour::Red;
    for (const auto& e : g.edges()) b.emitted_red += e.colour == EdgeColour::Red;
    b.k = t.k;
    std::map<GadgetKind, int> cache;
    for (const auto& gi : t.gadgets) {
        auto it = cache.find(gi.kind);
        if (it == cache.end()) {
            GadgetTemplate tmpl = gadget_template(gi.kind, t.backend);
            std::vector<InterfacePort> outs;
            for (const auto* p : tmpl.out_ports()) outs.push_back(*p);
            int best = INT_MAX;
            for (const auto& pat : all_patterns(tmpl.in_ports().size()))
                best = std::min(best, min_blue_moves(resolve_inputs(tmpl, pat).graph, outs).min_cost);
            it = cache.emplace(gi.kind, best).first;
        }
        b.blue_min_moves.emplace_back(gi.index, it->second);
    }
    return b;
}

namespace {

std::string_view to_string(Connection::Kind k)
{
    switch (k) {
    case Connection::Kind::Merged: return "merged";
    case Connection::Kind::DanglingOut: return "dangling_out";
    case Connection::Kind::DanglingIn: return "dangling_in";
    case Connection::Kind::Goal: return "goal";
    case Connection::Kind::Isolated: return "isolated";
    }
    return "?";
}

} // namespace

Json to_json(const ArcKTrace& t)
{
    Json gs = Json::array();
    for (const auto& g : t.gadgets)
        gs.push_back(Json{{"index", g.index},
                          {"kind", std::string(to_string(g.kind))},
                          {"cl_vertex", g.cl_vertex},
                          {"cl_edge", g.cl_edge},
                          {"ports", g.port_names},
                          {"port_centers", g.port_centers},
                          {"edges", g.edges},
                          {"offset", Json::array({g.offset.x, g.offset.y})}});
    Json cs = Json::array();
    for (const auto& c : t.connections)
        cs.push_back(Json{{"cl_edge", c.cl_edge},
                          {"kind", std::string(to_string(c.kind))},
                          {"producer", c.producer},
                          {"out_port", c.out_port},
                          {"consumer", c.consumer},
                          {"in_port", c.in_port},
                          {"wires", c.wires}});
    return Json{{"backend", std::string(to_string(t.backend))},
                {"gadgets", gs},
                {"connections", cs},
                {"absorbed_cl_edges", t.absorbed_cl_edges},
                {"structure", t.structure},
                {"companions", t.companions},
                {"pair_reds", t.pair_reds},
                {"k", t.k}};
}

Json to_json(const RedBudget& b)
{
    Json per = Json::array();
    for (auto [i, m] : b.blue_min_moves) per.push_back(Json{{"gadget", i}, {"min_blue_moves", m}});
    return Json{{"companions", b.companions}, {"structural", b.structural}, {"pair_reds", b.pair_reds},
                {"k_components", b.k_components}, {"k", b.k},           {"emitted_red", b.emitted_red},
                {"total", b.total()},            {"balanced", b.balanced()}, {"blue_min_moves", per}};
}

} // namespace arck
