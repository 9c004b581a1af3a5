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

// Independent reference implementations used only by tests. They share no
// code with the library beyond the plain data types: no memo, no pruning,
// no move ordering.

#pragma once

#include <map>
#include <random>
#include <set>
#include <vector>

#include "arck/arc_kayles.hpp"
#include "arck/constraint_logic.hpp"
#include "arck/cost_oracle.hpp"
#include "arck/poscnf.hpp"

namespace oracle {

using arck::Player;

// ---- Arc Kayles ----------------------------------------------------------

struct PlainEdge {
    int u, v;
    arck::EdgeColour colour;
};

inline bool playable(const PlainEdge& e, Player p)
{
    return e.colour == arck::EdgeColour::Either || e.colour == arck::colour_of(p);
}

inline Player arck_winner(const std::vector<PlainEdge>& edges, Player mover, arck::Convention conv)
{
    bool any = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!playable(edges[i], mover)) continue;
        any = true;
        std::vector<PlainEdge> rest;
        for (const auto& f : edges)
            if (f.u != edges[i].u && f.u != edges[i].v && f.v != edges[i].u && f.v != edges[i].v) rest.push_back(f);
        if (arck_winner(rest, arck::opponent(mover), conv) == mover) return mover;
    }
    if (!any) return conv == arck::Convention::Misere ? mover : arck::opponent(mover);
    return arck::opponent(mover);
}

inline Player arck_winner(const arck::ArcKPosition& pos)
{
    std::vector<PlainEdge> edges;
    for (const auto& e : pos.graph.edges()) edges.push_back({e.u, e.v, e.colour});
    return arck_winner(edges, pos.to_move, pos.convention);
}

// ---- Constraint logic ----------------------------------------------------

struct Arc {
    int tail, head;
    Player colour;
    int weight;
    bool flipped;
    std::optional<Player> goal;
};

struct CLState {
    std::vector<Arc> arcs;
    std::set<int> terminals;
    arck::CLVariant variant;
    Player mover;
};

inline CLState from_instance(const arck::CLInstance& inst)
{
    CLState s{{}, {}, inst.variant, inst.to_move};
    for (const auto& v : inst.vertices)
        if (v.terminal) s.terminals.insert(v.id);
    for (const auto& e : inst.edges) s.arcs.push_back({e.tail, e.head, e.colour, e.weight, e.flipped, e.goal_for});
    return s;
}

inline int in_weight(const CLState& s, int v)
{
    int w = 0;
    for (const auto& a : s.arcs)
        if (a.head == v) w += a.weight;
    return w;
}

inline bool can_flip(const CLState& s, std::size_t i)
{
    const Arc& a = s.arcs[i];
    if (a.flipped || a.colour != s.mover) return false;
    return s.terminals.contains(a.head) || in_weight(s, a.head) - a.weight >= 2;
}

inline arck::CLOutcome win_for(Player p)
{
    return p == Player::Blue ? arck::CLOutcome::BlueWin : arck::CLOutcome::RedWin;
}

/// Value for the mover: 2 win, 1 draw, 0 loss.
inline int score(arck::CLOutcome o, Player mover)
{
    if (o == arck::CLOutcome::Draw) return 1;
    return o == win_for(mover) ? 2 : 0;
}

inline arck::CLOutcome cl_outcome(const CLState& s)
{
    std::optional<arck::CLOutcome> best;
    for (std::size_t i = 0; i < s.arcs.size(); ++i) {
        if (!can_flip(s, i)) continue;
        CLState t = s;
        std::swap(t.arcs[i].tail, t.arcs[i].head);
        t.arcs[i].flipped = true;
        t.mover = arck::opponent(s.mover);
        arck::CLOutcome o = s.arcs[i].goal == s.mover ? win_for(s.mover) : cl_outcome(t);
        if (!best || score(o, s.mover) > score(*best, s.mover)) best = o;
    }
    if (best) return *best;
    switch (s.variant) {
    case arck::CLVariant::Standard: return arck::CLOutcome::Draw;
    case arck::CLVariant::BuilderBlocker: return arck::CLOutcome::RedWin;
    case arck::CLVariant::NormalPlay: return win_for(arck::opponent(s.mover));
    case arck::CLVariant::MiserePlay: return win_for(s.mover);
    }
    return arck::CLOutcome::Draw;
}

inline arck::CLOutcome cl_outcome(const arck::CLInstance& inst) { return cl_outcome(from_instance(inst)); }

/// Longest run of flips by `p` alone.
inline int solo_flips(CLState s, Player p)
{
    s.mover = p;
    int best = 0;
    for (std::size_t i = 0; i < s.arcs.size(); ++i) {
        if (!can_flip(s, i)) continue;
        CLState t = s;
        std::swap(t.arcs[i].tail, t.arcs[i].head);
        t.arcs[i].flipped = true;
        best = std::max(best, 1 + solo_flips(t, p));
    }
    return best;
}

/// Keeps the listed arcs; vertices that lose an arc become free ends.
inline CLState restrict_arcs(const arck::CLInstance& inst, const std::set<int>& keep)
{
    CLState s{{}, {}, inst.variant, inst.to_move};
    for (const auto& v : inst.vertices)
        if (v.terminal) s.terminals.insert(v.id);
    for (const auto& e : inst.edges) {
        if (keep.contains(e.id)) {
            s.arcs.push_back({e.tail, e.head, e.colour, e.weight, e.flipped, e.goal_for});
        } else {
            s.terminals.insert(e.tail);
            s.terminals.insert(e.head);
        }
    }
    return s;
}

// ---- PosCNF --------------------------------------------------------------

inline bool satisfied(const arck::PosCNFFormula& f, const std::vector<int>& truth)
{
    for (const auto& c : f.clauses) {
        bool any = false;
        for (int v : c) any = any || truth[v - 1] == 1;
        if (!any) return false;
    }
    return true;
}

/// truth: -1 unassigned, 0 false, 1 true. Returns true iff True wins.
inline bool poscnf_true_wins(const arck::PosCNFFormula& f, std::vector<int> truth, bool true_moves)
{
    bool any = false;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] != -1) continue;
        any = true;
        truth[i] = true_moves ? 1 : 0;
        bool r = poscnf_true_wins(f, truth, !true_moves);
        truth[i] = -1;
        if (r == true_moves) return r;
    }
    if (!any) return satisfied(f, truth);
    return !true_moves;
}

inline bool poscnf_true_wins(const arck::PosCNFFormula& f, bool true_first)
{
    return poscnf_true_wins(f, std::vector<int>(f.num_vars, -1), true_first);
}

// ---- Gadget costs --------------------------------------------------------

struct MatchingCosts {
    int min_cost = -1;
    std::map<arck::Pattern, int> pattern_costs;
    bool top_avoiding_min = false;
};

/// Enumerates every set of blue edges that is a matching touching all blue
/// edges (exactly the sets of Blue plays that clear the blue edges) and
/// reads the Out ports: A iff the port's A edge is in the set.
inline MatchingCosts brute_force_costs(const arck::ColouredGraph& g, const std::vector<arck::InterfacePort>& outs)
{
    std::vector<arck::Edge> blue;
    for (const auto& e : g.edges())
        if (e.colour == arck::EdgeColour::Blue) blue.push_back(e);
    std::set<int> tops;
    for (const auto& p : outs) tops.insert(p.Top);

    MatchingCosts r;
    const std::size_t n = blue.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::set<int> used;
        bool matching = true;
        for (std::size_t i = 0; i < n && matching; ++i) {
            if (!(mask >> i & 1)) continue;
            matching = !used.contains(blue[i].u) && !used.contains(blue[i].v);
            used.insert(blue[i].u);
            used.insert(blue[i].v);
        }
        if (!matching) continue;
        bool maximal = true;
        for (const auto& e : blue) maximal = maximal && (used.contains(e.u) || used.contains(e.v));
        if (!maximal) continue;

        int cost = std::popcount(mask);
        arck::Pattern out;
        bool top = false;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) top = top || tops.contains(blue[i].id);
        for (const auto& p : outs) {
            bool a = false;
            for (std::size_t i = 0; i < n; ++i) a = a || ((mask >> i & 1) && blue[i].id == p.A);
            out.push_back(a ? arck::Signal::A : arck::Signal::I);
        }
        auto it = r.pattern_costs.find(out);
        if (it == r.pattern_costs.end() || cost < it->second) r.pattern_costs[out] = cost;
        if (r.min_cost < 0 || cost < r.min_cost) {
            r.min_cost = cost;
            r.top_avoiding_min = !top;
        } else if (cost == r.min_cost) {
            r.top_avoiding_min = r.top_avoiding_min || !top;
        }
    }
    return r;
}

// ---- Random instances ----------------------------------------------------

inline arck::ArcKPosition random_position(std::mt19937& rng, int max_edges, arck::Convention conv)
{
    std::uniform_int_distribution<int> nv(2, 9);
    int n = nv(rng);
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    std::shuffle(all.begin(), all.end(), rng);
    int m = std::uniform_int_distribution<int>(0, std::min<int>(max_edges, static_cast<int>(all.size())))(rng);
    std::vector<arck::Vertex> vs;
    for (int i = 0; i < n; ++i) vs.push_back({i, std::nullopt});
    std::vector<arck::Edge> es;
    std::uniform_int_distribution<int> col(0, 5);
    for (int i = 0; i < m; ++i) {
        int c = col(rng);
        auto colour = c < 3 ? arck::EdgeColour::Blue : c < 5 ? arck::EdgeColour::Red : arck::EdgeColour::Either;
        es.push_back({i, all[i].first, all[i].second, colour, std::nullopt});
    }
    arck::ArcKPosition p;
    p.graph = arck::build_graph(vs, es);
    p.convention = conv;
    p.to_move = rng() % 2 ? Player::Blue : Player::Red;
    return p;
}

/// Random valid instance: vertices whose in-weight is below 2 are made free ends.
inline arck::CLInstance random_cl(std::mt19937& rng, int max_edges, arck::CLVariant variant)
{
    arck::CLInstance inst;
    inst.variant = variant;
    inst.to_move = rng() % 2 ? Player::Blue : Player::Red;
    int n = std::uniform_int_distribution<int>(3, 7)(rng);
    int m = std::uniform_int_distribution<int>(2, max_edges)(rng);
    for (int i = 0; i < n; ++i) inst.vertices.push_back({i, false, "v" + std::to_string(i)});
    std::set<std::pair<int, int>> seen;
    for (int i = 0; static_cast<int>(inst.edges.size()) < m && i < 200; ++i) {
        int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (a == b || seen.contains({std::min(a, b), std::max(a, b)})) continue;
        seen.insert({std::min(a, b), std::max(a, b)});
        arck::CLEdge e;
        e.id = static_cast<int>(inst.edges.size());
        e.tail = a;
        e.head = b;
        e.colour = rng() % 2 ? Player::Blue : Player::Red;
        e.weight = rng() % 3 ? 2 : 1;
        inst.edges.push_back(e);
    }
    auto claim_goal = [&](Player p) {
        for (auto& e : inst.edges)
            if (e.colour == p && !e.goal_for) {
                e.goal_for = p;
                return;
            }
        arck::CLEdge e;
        e.id = static_cast<int>(inst.edges.size());
        e.tail = static_cast<int>(inst.vertices.size());
        e.head = e.tail + 1;
        e.colour = p;
        e.goal_for = p;
        inst.vertices.push_back({e.tail, true, "g" + std::to_string(e.tail)});
        inst.vertices.push_back({e.head, true, "g" + std::to_string(e.head)});
        inst.edges.push_back(e);
    };
    if (variant == arck::CLVariant::Standard || variant == arck::CLVariant::BuilderBlocker) claim_goal(Player::Blue);
    if (variant == arck::CLVariant::Standard) claim_goal(Player::Red);
    for (auto& v : inst.vertices)
        if (inst.in_weight(v.id) < 2) v.terminal = true;
    return inst;
}

} // namespace oracle
