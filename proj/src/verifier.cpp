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

#include "arck/verifier.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <numeric>
#include <sstream>

#include "arck/error.hpp"

namespace arck {

const char* const kCostOwnership =
    "interfaces and their red companions are charged to the gadget drawing them; "
    "a merged interface is charged once, to its producing gadget";
const char* const kChoiceGeneralClaim = "forcing Blue to take an inactive output for both branches";
const char* const kChoiceTriangularClaim = "leads to active outputs in both branches";

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Warn: return "WARN";
    case Verdict::Fail: return "FAIL";
    }
    return "?";
}

std::vector<Pattern> logical_outputs(GadgetKind kind, const Pattern& in)
{
    using enum Signal;
    auto all = [&](Signal s) { return std::all_of(in.begin(), in.end(), [&](Signal x) { return x == s; }); };
    switch (kind) {
    case GadgetKind::And: return {{all(A) ? A : I}};
    case GadgetKind::Or: return {{all(I) ? I : A}};
    case GadgetKind::Fanout: return {{in.at(0), in.at(0)}};
    case GadgetKind::Choice:
        if (in.at(0) == A) return {{A, I}, {I, A}};
        return {{I, I}};
    case GadgetKind::WireEven:
    case GadgetKind::WireOdd: return {{in.at(0)}};
    case GadgetKind::Interface:
    case GadgetKind::Goal: return {{}};
    case GadgetKind::Variable: return {{A}};
    }
    return {};
}

namespace {

std::vector<InterfacePort> outs_of(const GadgetTemplate& t)
{
    std::vector<InterfacePort> out;
    for (const auto* p : t.out_ports()) out.push_back(*p);
    return out;
}

CaseResult run_case(const GadgetTemplate& t, const Pattern& inputs)
{
    CaseResult c;
    c.inputs = inputs;
    c.input_plays = static_cast<int>(inputs.size());
    c.expected = downward_closure(logical_outputs(t.kind, inputs));
    c.cost = min_blue_moves(resolve_inputs(t, inputs).graph, outs_of(t));
    c.closure_ok = c.cost.achievable == c.expected;
    c.penalty_ok = true;
    for (const auto& [p, cost] : c.cost.pattern_costs)
        if (!std::binary_search(c.expected.begin(), c.expected.end(), p) && cost < c.cost.min_cost + 1)
            c.penalty_ok = false;
    c.balance_ok = static_cast<int>(t.red_edges().size()) == c.input_plays + c.cost.min_cost;
    return c;
}

/// Removes components away from every port that a single red play clears,
/// i.e. blue leftovers Red is forced to take care of.
ColouredGraph drop_red_forced(const ColouredGraph& g, const GadgetTemplate& t, bool& dropped)
{
    std::map<int, int> parent;
    for (const auto& v : g.vertices()) parent[v.id] = v.id;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) parent[find(e.u)] = find(e.v);
    std::map<int, std::vector<int>> comp_edges;
    for (const auto& e : g.edges()) comp_edges[find(e.u)].push_back(e.id);
    std::set<int> port_roots;
    for (const auto& p : t.ports)
        for (int v : {p.center, p.i_end, p.a_end, p.top_end})
            if (g.has_vertex(v)) port_roots.insert(find(v));

    std::vector<int> remove;
    dropped = false;
    for (const auto& [root, es] : comp_edges) {
        if (port_roots.contains(root)) continue;
        std::vector<int> blues;
        for (int id : es)
            if (g.edge(id).colour == EdgeColour::Blue) blues.push_back(id);
        if (blues.empty()) continue;
        bool forced = false;
        for (int id : es) {
            const Edge& r = g.edge(id);
            if (r.colour != EdgeColour::Red) continue;
            forced = forced || std::all_of(blues.begin(), blues.end(), [&](int b) {
                         const Edge& be = g.edge(b);
                         return r.touches(be.u) || r.touches(be.v);
                     });
        }
        if (!forced) continue;
        dropped = true;
        for (const auto& v : g.vertices())
            if (find(v.id) == root) remove.push_back(v.id);
    }
    return g.without_vertices(remove);
}

int cost_of(const CostReport& r, Signal s)
{
    auto it = r.pattern_costs.find(Pattern{s});
    return it == r.pattern_costs.end() ? -1 : it->second;
}

} // namespace

VariableReport verify_variable_gadget(Backend backend)
{
    GadgetTemplate t = gadget_template(GadgetKind::Variable, backend);
    auto outs = outs_of(t);
    ArcKPosition start{t.fragment, Convention::Misere, Player::Red};
    VariableReport r;
    r.backend = backend;

    CostReport rc = min_blue_moves(apply_move(start, t.edge_by_label("c")).graph, outs);
    r.red_c_inactive = cost_of(rc, Signal::I);
    r.red_c_active = cost_of(rc, Signal::A);

    CostReport rb = min_blue_moves(apply_move(start, t.edge_by_label("b")).graph, outs);
    r.red_b_inactive = cost_of(rb, Signal::I);
    r.red_b_active = cost_of(rb, Signal::A);

    start.to_move = Player::Blue;
    ColouredGraph after_d = apply_move(start, t.edge_by_label("d")).graph;
    ColouredGraph rest = drop_red_forced(after_d, t, r.blue_d_detaches);
    int act = cost_of(min_blue_moves(rest, outs), Signal::A);
    r.blue_d_active = act < 0 ? -1 : act + 1;

    int floor = std::min({r.red_c_inactive, r.red_b_inactive, r.red_b_active});
    r.pass = r.red_c_active == r.red_c_inactive + 1 && r.red_c_active > std::max(r.red_b_inactive, r.red_b_active) &&
             r.blue_d_detaches && r.blue_d_active == floor;
    return r;
}

GoalReport verify_goal_gadget(Backend backend)
{
    GadgetTemplate t = gadget_template(GadgetKind::Goal, backend);
    GoalReport r;
    r.backend = backend;
    r.active_total = 1 + min_blue_moves(resolve_inputs(t, {Signal::A}).graph, {}).min_cost;
    r.inactive_total = 1 + min_blue_moves(resolve_inputs(t, {Signal::I}).graph, {}).min_cost;
    r.pass = r.active_total == 1 && r.inactive_total == 2;
    return r;
}

TruthTableReport verify_truth_table(GadgetKind kind, Backend backend)
{
    GadgetTemplate t = gadget_template(kind, backend);
    TruthTableReport rep;
    rep.kind = kind;
    rep.backend = backend;
    rep.red_edges = static_cast<int>(t.red_edges().size());
    rep.notes.emplace_back(std::string("cost ownership: ") + kCostOwnership);

    if (kind == GadgetKind::Variable) {
        VariableReport v = verify_variable_gadget(backend);
        std::ostringstream os;
        os << "red plays c: inactive " << v.red_c_inactive << ", active " << v.red_c_active << "; red plays b: inactive "
           << v.red_b_inactive << ", active " << v.red_b_active << "; blue plays d: active " << v.blue_d_active
           << (v.blue_d_detaches ? ", a/b pair detached" : ", no detached pair");
        rep.notes.push_back(os.str());
        rep.verdict = v.pass ? Verdict::Pass : Verdict::Fail;
        return rep;
    }

    bool ok = true;
    for (const auto& in : all_patterns(t.in_ports().size())) {
        CaseResult c = run_case(t, in);
        if (kind == GadgetKind::Goal && in == Pattern{Signal::I}) {
            // The goal penalises inactivity by exactly one Blue move.
            c.balance_ok = c.input_plays + c.cost.min_cost == rep.red_edges + 1;
        }
        ok = ok && c.pass();
        rep.cases.push_back(std::move(c));
    }
    rep.verdict = ok ? Verdict::Pass : Verdict::Fail;

    if (kind == GadgetKind::Choice && backend == Backend::Triangular) {
        const CaseResult* inactive = nullptr;
        for (const auto& c : rep.cases)
            if (c.inputs == Pattern{Signal::I}) inactive = &c;
        bool both_active = inactive && std::find(inactive->cost.achievable.begin(), inactive->cost.achievable.end(),
                                                 Pattern{Signal::A, Signal::A}) != inactive->cost.achievable.end();
        std::string computed = inactive ? "computed min-cost outputs for input I: " : "";
        if (inactive)
            for (const auto& p : inactive->cost.achievable) computed += to_string(p) + " ";
        rep.notes.push_back(computed);
        rep.notes.push_back(std::string("general semantics: \"") + kChoiceGeneralClaim + "\" -> " +
                            (inactive && inactive->closure_ok ? "agrees" : "disagrees"));
        rep.notes.push_back(std::string("triangular claim: \"") + kChoiceTriangularClaim + "\" -> " +
                            (both_active ? "agrees" : "disagrees"));
        if (!both_active && rep.verdict == Verdict::Pass) rep.verdict = Verdict::Warn;
    }
    return rep;
}

std::vector<std::pair<GadgetKind, Backend>> truth_table_matrix()
{
    using K = GadgetKind;
    std::vector<std::pair<GadgetKind, Backend>> m;
    for (K k : {K::And, K::Or, K::Fanout, K::Choice, K::Goal, K::Variable}) m.emplace_back(k, Backend::General);
    for (Backend b : {Backend::Cartesian, Backend::Triangular})
        for (K k : {K::And, K::Or, K::Fanout, K::Choice, K::Variable, K::WireEven, K::WireOdd}) m.emplace_back(k, b);
    return m;
}

std::vector<TruthTableReport> verify_matrix()
{
    auto m = truth_table_matrix();
    std::vector<TruthTableReport> out(m.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < m.size(); ++i) {
        try {
            out[i] = verify_truth_table(m[i].first, m[i].second);
        } catch (...) {
#pragma omp critical
            err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

namespace {

ColouredGraph complete_graph(int n)
{
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) vs.push_back({i, std::nullopt});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({static_cast<int>(es.size()), i, j, EdgeColour::Blue, {}});
    return build_graph(vs, es);
}

ColouredGraph complete_bipartite(int a, int b)
{
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int i = 0; i < a + b; ++i) vs.push_back({i, std::nullopt});
    for (int i = 0; i < a; ++i)
        for (int j = a; j < a + b; ++j) es.push_back({static_cast<int>(es.size()), i, j, EdgeColour::Blue, {}});
    return build_graph(vs, es);
}

PlanarityEntry check(const std::string& name, const ColouredGraph& g)
{
    PlanarityEntry e;
    e.name = name;
    e.line_vertices = static_cast<int>(g.vertex_count());
    e.line_edges = static_cast<int>(g.edge_count());
    PlanarityResult r = is_planar(g);
    e.planar = r.planar;
    e.witness = r.witness_kind;
    if (r.planar) {
        e.embedding = r.embedding;
        e.embedding_valid = is_plane_embedding(g, r.embedding);
    }
    return e;
}

} // namespace

bool PlanarityReport::pass() const
{
    bool ok = !templates.empty() && !controls.empty();
    for (const auto& e : templates) ok = ok && e.planar && e.embedding_valid;
    for (const auto& e : controls) ok = ok && !e.planar;
    return ok;
}

PlanarityReport verify_line_graph_planarity()
{
    PlanarityReport rep;
    for (auto [k, b] : defined_templates()) {
        GadgetTemplate t = gadget_template(k, b);
        rep.templates.push_back(
            check(std::string(to_string(k)) + "/" + std::string(to_string(b)), line_graph(t.fragment).graph));
    }
    rep.controls.push_back(check("K5", complete_graph(5)));
    rep.controls.push_back(check("K3,3", complete_bipartite(3, 3)));
    rep.controls.push_back(check("line(K5)", line_graph(complete_graph(5)).graph));
    rep.controls.push_back(check("line(K3,3)", line_graph(complete_bipartite(3, 3)).graph));
    return rep;
}

Json to_json(const CostReport& r)
{
    Json ach = Json::array();
    for (const auto& p : r.achievable) ach.push_back(to_string(p));
    Json costs = Json::object();
    for (const auto& [p, c] : r.pattern_costs) costs[to_string(p)] = c;
    return Json{{"min_cost", r.min_cost},
                {"achievable", ach},
                {"pattern_costs", costs},
                {"top_avoiding_min_line", r.top_avoiding_min_line}};
}

Json to_json(const TruthTableReport& r)
{
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json exp = Json::array();
        for (const auto& p : c.expected) exp.push_back(to_string(p));
        cases.push_back(Json{{"inputs", to_string(c.inputs)},
                             {"expected", exp},
                             {"cost", to_json(c.cost)},
                             {"input_plays", c.input_plays},
                             {"closure_ok", c.closure_ok},
                             {"penalty_ok", c.penalty_ok},
                             {"balance_ok", c.balance_ok},
                             {"pass", c.pass()}});
    }
    return Json{{"kind", std::string(to_string(r.kind))},
                {"backend", std::string(to_string(r.backend))},
                {"verdict", std::string(to_string(r.verdict))},
                {"red_edges", r.red_edges},
                {"cases", cases},
                {"notes", r.notes}};
}

Json to_json(const VariableReport& r)
{
    return Json{{"backend", std::string(to_string(r.backend))},
                {"red_c", {{"inactive", r.red_c_inactive}, {"active", r.red_c_active}}},
                {"red_b", {{"inactive", r.red_b_inactive}, {"active", r.red_b_active}}},
                {"blue_d", {{"active", r.blue_d_active}, {"detaches", r.blue_d_detaches}}},
                {"pass", r.pass}};
}

Json to_json(const GoalReport& r)
{
    return Json{{"backend", std::string(to_string(r.backend))},
                {"active_total", r.active_total},
                {"inactive_total", r.inactive_total},
                {"pass", r.pass}};
}

namespace {

Json entry_json(const PlanarityEntry& e)
{
    Json j{{"name", e.name},
           {"planar", e.planar},
           {"line_vertices", e.line_vertices},
           {"line_edges", e.line_edges}};
    if (e.planar) {
        j["embedding_valid"] = e.embedding_valid;
        j["embedding"] = to_json(e.embedding);
    } else {
        j["witness"] = e.witness == KuratowskiKind::K5 ? "K5" : e.witness == KuratowskiKind::K33 ? "K3,3" : "none";
    }
    return j;
}

} // namespace

Json to_json(const PlanarityReport& r)
{
    Json ts = Json::array();
    for (const auto& e : r.templates) ts.push_back(entry_json(e));
    Json cs = Json::array();
    for (const auto& e : r.controls) cs.push_back(entry_json(e));
    return Json{{"templates", ts}, {"controls", cs}, {"pass", r.pass()}};
}

std::string describe(const TruthTableReport& r)
{
    std::ostringstream os;
    os << to_string(r.verdict) << ' ' << to_string(r.kind) << '/' << to_string(r.backend) << " reds=" << r.red_edges;
    for (const auto& c : r.cases) {
        os << "\n  in " << to_string(c.inputs) << ": min " << c.cost.min_cost << " ->";
        for (const auto& p : c.cost.achievable) os << ' ' << to_string(p);
        if (!c.pass())
            os << "  [closure " << c.closure_ok << " penalty " << c.penalty_ok << " balance " << c.balance_ok << " top "
               << c.cost.top_avoiding_min_line << "]";
    }
    for (const auto& n : r.notes) os << "\n  note: " << n;
    return os.str();
}

} // namespace arck
