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

#include "arck/cl_compiler.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "arck/error.hpp"

namespace arck {

namespace {

struct Signal {
    int vertex;
    int weight;
};

class Builder {
public:
    explicit Builder(CLInstance& inst) : inst_(inst)
    {
        for (const auto& v : inst.vertices) next_vertex_ = std::max(next_vertex_, v.id + 1);
        for (const auto& e : inst.edges) next_edge_ = std::max(next_edge_, e.id + 1);
    }

    int vertex(std::string name, bool terminal = false)
    {
        int id = next_vertex_++;
        inst_.vertices.push_back({id, terminal, std::move(name)});
        return id;
    }

    int arc(int tail, int head, Player colour, int weight, std::vector<int>& bucket,
            std::optional<Player> goal = std::nullopt)
    {
        int id = next_edge_++;
        inst_.edges.push_back({id, tail, head, colour, weight, false, goal});
        bucket.push_back(id);
        return id;
    }

    /// Appends `count` hidden Red components.
    void red_components(int count, CLTrace& t)
    {
        for (int i = 0; i < count; ++i) {
            const std::string n = std::to_string(t.red_components.size() + 1);
            int a = vertex("r" + n + "a", true);
            int m = vertex("r" + n + "m");
            int c = vertex("r" + n + "c", true);
            std::vector<int> ids;
            arc(a, m, Player::Red, 2, ids);
            arc(c, m, Player::Red, 2, ids);
            t.red_components.push_back({ids[0], ids[1]});
        }
    }

private:
    CLInstance& inst_;
    int next_vertex_ = 0;
    int next_edge_ = 0;
};

/// Circuit construction over Signals; every arc lands in the circuit bucket.
class Circuit {
public:
    Circuit(Builder& b, CLTrace& t) : b_(b), t_(t) {}

    void consume(Signal s, int consumer) { b_.arc(consumer, s.vertex, Player::Blue, s.weight, t_.circuit); }

    Signal to_w2(Signal s)
    {
        if (s.weight == 2) return s;
        int a = b_.vertex("up" + std::to_string(++n_));
        consume(s, a);
        b_.arc(a, b_.vertex("free" + std::to_string(n_), true), Player::Blue, 1, t_.circuit);
        return {a, 2};
    }

    Signal to_w1(Signal s)
    {
        if (s.weight == 1) return s;
        int f = b_.vertex("down" + std::to_string(++n_));
        consume(s, f);
        b_.arc(b_.vertex("stub" + std::to_string(n_), true), f, Player::Blue, 1, t_.circuit);
        return {f, 1};
    }

    std::vector<Signal> split(Signal s, std::size_t n)
    {
        if (n <= 1) return {s};
        int f = b_.vertex("fan" + std::to_string(++n_));
        consume(to_w2(s), f);
        auto rest = split({f, 1}, n - 1);
        rest.insert(rest.begin(), Signal{f, 1});
        return rest;
    }

    Signal disjoin(Signal a, Signal b)
    {
        int o = b_.vertex("or" + std::to_string(++n_));
        consume(to_w2(a), o);
        consume(to_w2(b), o);
        return {o, 2};
    }

    Signal conjoin(Signal a, Signal b)
    {
        int v = b_.vertex("and" + std::to_string(++n_));
        consume(to_w1(a), v);
        consume(to_w1(b), v);
        t_.spine.push_back(v);
        return {v, 2};
    }

private:
    Builder& b_;
    CLTrace& t_;
    int n_ = 0;
};

std::vector<int> all_trace_edges(const CLTrace& t)
{
    std::vector<int> out;
    for (const auto* bucket : {&t.variables, &t.circuit, &t.goal, &t.red_goal, &t.chain, &t.tail})
        out.insert(out.end(), bucket->begin(), bucket->end());
    for (const auto& rc : t.red_components) out.insert(out.end(), rc.begin(), rc.end());
    return out;
}

void remove_edges(CLInstance& inst, const std::set<int>& gone)
{
    std::erase_if(inst.edges, [&](const CLEdge& e) { return gone.contains(e.id); });
    std::set<int> used;
    for (const auto& e : inst.edges) {
        used.insert(e.tail);
        used.insert(e.head);
    }
    std::erase_if(inst.vertices, [&](const CLVertex& v) { return !used.contains(v.id); });
}

CLEdge& edge_ref(CLInstance& inst, int id)
{
    for (auto& e : inst.edges)
        if (e.id == id) return e;
    throw Error(ErrorCode::NotACompiledInstance, "goal edge " + std::to_string(id) + " missing");
}

CLVertex& vertex_ref(CLInstance& inst, int id)
{
    for (auto& v : inst.vertices)
        if (v.id == id) return v;
    throw Error(ErrorCode::NotACompiledInstance, "vertex " + std::to_string(id) + " missing");
}

void expect_variant(const CLCompilation& c, CLVariant v)
{
    check_trace(c);
    if (c.instance.variant != v)
        throw Error(ErrorCode::NotACompiledInstance, "expected a " + std::string(to_string(v)) + " instance, got " +
                                                         std::string(to_string(c.instance.variant)));
    if (c.trace.goal_edge < 0 || c.trace.goal.size() != 1)
        throw Error(ErrorCode::NotACompiledInstance, "trace has no goal edge");
}

} // namespace

CLCompilation compile_poscnf_to_b2cl(const PosCNFFormula& f)
{
    validate_formula(f);
    CLCompilation out;
    CLInstance& inst = out.instance;
    CLTrace& t = out.trace;
    inst.variant = CLVariant::Standard;
    inst.to_move = Player::Blue;
    Builder b(inst);
    Circuit circ(b, t);

    // variable row
    std::vector<std::size_t> occurrences(static_cast<std::size_t>(f.num_vars) + 1, 0);
    for (const auto& c : f.clauses)
        for (int v : c) occurrences[v]++;
    std::vector<std::vector<Signal>> pending(static_cast<std::size_t>(f.num_vars) + 1);
    for (int v = 1; v <= f.num_vars; ++v) {
        int vx = b.vertex("x" + std::to_string(v));
        t.variable_vertex[v] = vx;
        b.arc(b.vertex("claim" + std::to_string(v), true), vx, Player::Red, 2, t.variables);
        if (occurrences[v] == 0) b.arc(b.vertex("unused" + std::to_string(v), true), vx, Player::Blue, 2, t.variables);
    }
    for (int v = 1; v <= f.num_vars; ++v)
        if (occurrences[v] > 0) {
            pending[v] = circ.split({t.variable_vertex[v], 2}, occurrences[v]);
            std::reverse(pending[v].begin(), pending[v].end()); // consumed from the back, in clause order
        }

    // clauses, then the conjunction
    std::vector<Signal> clause_out;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        std::optional<Signal> acc;
        for (int v : f.clauses[i]) {
            Signal s = pending[v].back();
            pending[v].pop_back();
            acc = acc ? circ.disjoin(*acc, s) : s;
        }
        t.clause_root[static_cast<int>(i)] = acc->vertex;
        clause_out.push_back(*acc);
    }
    std::optional<Signal> root;
    for (const Signal& s : clause_out) root = root ? circ.conjoin(*root, s) : s;
    Signal top = root ? circ.to_w2(*root) : Signal{b.vertex("sat", true), 2};

    t.goal_edge = b.arc(b.vertex("goal", true), top.vertex, Player::Blue, 2, t.goal, Player::Blue);

    // Red goal guarded by a blue arc
    int g = b.vertex("red_goal");
    b.arc(b.vertex("red_goal_tail", true), g, Player::Red, 2, t.red_goal, Player::Red);
    b.arc(g, b.vertex("red_goal_guard", true), Player::Blue, 2, t.red_goal);

    out.params.k = count_blue_circuit_moves(inst, t);
    b.red_components(out.params.k, t);
    return out;
}

int count_blue_circuit_moves(const CLInstance& inst, const CLTrace& trace)
{
    int n = 0;
    for (const auto* bucket : {&trace.circuit, &trace.goal})
        for (int id : *bucket)
            if (inst.edge(id).colour == Player::Blue) ++n;
    return n;
}

void check_trace(const CLCompilation& c)
{
    auto ids = all_trace_edges(c.trace);
    std::multiset<int> seen(ids.begin(), ids.end());
    for (const auto& e : c.instance.edges)
        if (seen.count(e.id) != 1)
            throw Error(ErrorCode::NotACompiledInstance,
                        "edge " + std::to_string(e.id) + " appears in " + std::to_string(seen.count(e.id)) + " trace buckets");
    if (ids.size() != c.instance.edges.size())
        throw Error(ErrorCode::NotACompiledInstance, "trace names edges absent from the instance");
}

CLCompilation to_builder_blocker(const CLCompilation& c)
{
    expect_variant(c, CLVariant::Standard);
    CLCompilation out = c;
    std::set<int> gone(c.trace.red_goal.begin(), c.trace.red_goal.end());
    remove_edges(out.instance, gone);
    out.trace.red_goal.clear();
    out.instance.variant = CLVariant::BuilderBlocker;
    Builder b(out.instance);
    b.red_components(2 * c.params.k - static_cast<int>(c.trace.red_components.size()), out.trace);
    return out;
}

CLCompilation to_normal_play(const CLCompilation& c)
{
    expect_variant(c, CLVariant::BuilderBlocker);
    CLCompilation out = c;
    CLInstance& inst = out.instance;
    inst.variant = CLVariant::NormalPlay;
    CLEdge& goal = edge_ref(inst, c.trace.goal_edge);
    goal.goal_for.reset();
    const int c1 = goal.tail;
    CLVertex& head = vertex_ref(inst, c1);
    head.terminal = false;
    head.name = "c1";

    Builder b(inst);
    const int len = 2 * c.params.k;
    int prev = c1;
    for (int i = 1; i <= len; ++i) {
        const bool last = i == len;
        int next = b.vertex("c" + std::to_string(i + 1), last);
        b.arc(next, prev, Player::Blue, 2, out.trace.chain);
        b.arc(prev, b.vertex("p" + std::to_string(i)), Player::Blue, 2, out.trace.chain);
        prev = next;
    }
    return out;
}

CLCompilation to_misere_play(const CLCompilation& c)
{
    expect_variant(c, CLVariant::BuilderBlocker);
    CLCompilation out = c;
    CLInstance& inst = out.instance;
    inst.variant = CLVariant::MiserePlay;
    CLEdge& goal = edge_ref(inst, c.trace.goal_edge);
    goal.goal_for.reset();
    const int kn1 = goal.tail;
    CLVertex& head = vertex_ref(inst, kn1);
    head.terminal = false;
    head.name = "link";

    Builder b(inst);
    const int len = 2 * c.params.k;
    int k0 = b.vertex("k0");
    b.arc(k0, kn1, Player::Blue, 2, out.trace.tail);
    int prev = k0;
    for (int i = 1; i <= len; ++i) {
        const bool last = i == len;
        int ki = b.vertex("k" + std::to_string(i), last);
        b.arc(ki, prev, Player::Red, 2, out.trace.tail);
        if (!last) b.arc(ki, b.vertex("q" + std::to_string(i)), Player::Red, 2, out.trace.tail);
        prev = ki;
    }

    // separate Blue chain of 2k flips
    int bprev = b.vertex("b0", true);
    for (int i = 1; i <= len; ++i) {
        const bool last = i == len;
        int bi = b.vertex("b" + std::to_string(i), last);
        b.arc(bi, bprev, Player::Blue, 2, out.trace.chain);
        if (!last) b.arc(bi, b.vertex("bp" + std::to_string(i)), Player::Blue, 2, out.trace.chain);
        bprev = bi;
    }
    return out;
}

CLCompilation compile_variant(const PosCNFFormula& f, CLVariant variant)
{
    CLCompilation c = compile_poscnf_to_b2cl(f);
    if (variant == CLVariant::Standard) return c;
    c = to_builder_blocker(c);
    if (variant == CLVariant::NormalPlay) return to_normal_play(c);
    if (variant == CLVariant::MiserePlay) return to_misere_play(c);
    return c;
}

CLInstance restrict_to(const CLInstance& inst, const std::vector<int>& edge_ids)
{
    std::set<int> keep(edge_ids.begin(), edge_ids.end());
    std::set<int> cut; // vertices touching a dropped edge
    for (const auto& e : inst.edges)
        if (!keep.contains(e.id)) {
            cut.insert(e.tail);
            cut.insert(e.head);
        }
    CLInstance out = inst;
    std::set<int> gone;
    for (const auto& e : inst.edges)
        if (!keep.contains(e.id)) gone.insert(e.id);
    remove_edges(out, gone);
    for (auto& v : out.vertices)
        if (cut.contains(v.id)) v.terminal = true;
    return out;
}

int max_solo_flips(const CLInstance& inst, Player p)
{
    CLInstance s = inst;
    s.to_move = p;
    int best = 0;
    for (int id : legal_flips(s)) {
        CLInstance next = apply_flip(s, id).next;
        best = std::max(best, 1 + max_solo_flips(next, p));
    }
    return best;
}

namespace {

CLInstance saturate(CLInstance inst, Player p)
{
    while (true) {
        inst.to_move = p;
        auto flips = legal_flips(inst);
        if (flips.empty()) return inst;
        inst = apply_flip(inst, flips.front()).next;
    }
}

} // namespace

MisereLedger misere_ledger(const CLCompilation& mp)
{
    expect_variant(mp, CLVariant::MiserePlay);
    MisereLedger m;
    m.k = mp.params.k;
    std::vector<int> comps;
    for (const auto& rc : mp.trace.red_components) comps.insert(comps.end(), rc.begin(), rc.end());
    m.red_components = max_solo_flips(restrict_to(mp.instance, comps), Player::Red);

    std::vector<int> tail = mp.trace.tail;
    tail.push_back(mp.trace.goal_edge);
    m.red_tail = max_solo_flips(saturate(restrict_to(mp.instance, tail), Player::Blue), Player::Red);
    m.blue_chain = max_solo_flips(restrict_to(mp.instance, mp.trace.chain), Player::Blue);
    return m;
}

Json to_json(const CLTrace& t)
{
    Json vars = Json::object();
    for (auto [v, vx] : t.variable_vertex) vars[std::to_string(v)] = vx;
    Json clauses = Json::object();
    for (auto [c, r] : t.clause_root) clauses[std::to_string(c)] = r;
    return Json{{"variable_vertex", vars},
                {"clause_root", clauses},
                {"spine", t.spine},
                {"goal_edge", t.goal_edge},
                {"buckets",
                 {{"variables", t.variables},
                  {"circuit", t.circuit},
                  {"goal", t.goal},
                  {"red_goal", t.red_goal},
                  {"red_components", t.red_components},
                  {"chain", t.chain},
                  {"tail", t.tail}}}};
}

} // namespace arck
