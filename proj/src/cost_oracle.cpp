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

#include "arck/cost_oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "arck/error.hpp"

namespace arck {

std::string to_string(const Pattern& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += p[i] == Signal::A ? 'A' : 'I';
    }
    return s + ")";
}

Pattern pattern_from_string(std::string_view s)
{
    Pattern p;
    for (char c : s) {
        if (c == 'A') p.push_back(Signal::A);
        else if (c == 'I') p.push_back(Signal::I);
        else if (c != '(' && c != ')' && c != ',' && c != ' ')
            throw Error(ErrorCode::ParseError, "bad pattern '" + std::string(s) + "'");
    }
    return p;
}

std::vector<Pattern> all_patterns(std::size_t arity)
{
    std::vector<Pattern> out;
    for (std::uint32_t m = 0; m < (1u << arity); ++m) {
        Pattern p(arity, Signal::I);
        for (std::size_t i = 0; i < arity; ++i)
            if (m >> (arity - 1 - i) & 1) p[i] = Signal::A;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Pattern> downward_closure(const std::vector<Pattern>& set)
{
    std::set<Pattern> out;
    for (const auto& p : set)
        for (auto q : all_patterns(p.size())) {
            bool below = true;
            for (std::size_t i = 0; i < p.size(); ++i) below = below && q[i] <= p[i];
            if (below) out.insert(std::move(q));
        }
    return {out.begin(), out.end()};
}

ArcKPosition resolve_inputs(const GadgetTemplate& t, const Pattern& inputs)
{
    auto ins = t.in_ports();
    if (ins.size() != inputs.size())
        throw Error(ErrorCode::ArityMismatch, std::string(to_string(t.kind)) + " has " + std::to_string(ins.size()) +
                                                  " inputs, pattern " + to_string(inputs));
    ArcKPosition pos{t.fragment, Convention::Misere, Player::Blue};
    for (std::size_t i = 0; i < ins.size(); ++i) {
        pos.to_move = Player::Blue;
        pos = apply_move(pos, inputs[i] == Signal::A ? ins[i]->A : ins[i]->I);
    }
    pos.to_move = Player::Blue;
    return pos;
}

namespace {

constexpr int kInf = INT_MAX / 4;

/// Costs indexed by (output bits << 1 | top flag).
using Table = std::vector<int>;

class Search {
public:
    Search(const ColouredGraph& g, const std::vector<InterfacePort>& outs) : outs_(outs.size())
    {
        std::vector<int> ids;
        for (const auto& e : g.edges())
            if (e.colour == EdgeColour::Blue) ids.push_back(e.id);
        if (ids.size() > 64) throw Error(ErrorCode::SearchBudgetExceeded, "more than 64 blue edges");
        n_ = ids.size();
        adj_.assign(n_, 0);
        tag_.assign(n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                const Edge& a = g.edge(ids[i]);
                const Edge& b = g.edge(ids[j]);
                if (a.touches(b.u) || a.touches(b.v)) adj_[i] |= std::uint64_t{1} << j;
            }
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t p = 0; p < outs.size(); ++p) {
                if (ids[i] == outs[p].A) tag_[i] |= 2u << p;
                if (ids[i] == outs[p].Top) tag_[i] |= 1u;
            }
        }
        full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    Table run() { return solve(full_); }
    std::size_t slots() const { return std::size_t{2} << outs_; }

private:
    // Any complete line touches the lowest live edge, either by playing it or a
    // live neighbour, so branching on those covers every line once per set.
    Table solve(std::uint64_t alive)
    {
        if (!alive) {
            Table t(slots(), kInf);
            t[0] = 0;
            return t;
        }
        if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
        Table best(slots(), kInf);
        int low = std::countr_zero(alive);
        std::uint64_t choices = adj_[low] & alive;
        while (choices) {
            int c = std::countr_zero(choices);
            choices &= choices - 1;
            Table sub = solve(alive & ~adj_[c]);
            for (std::size_t k = 0; k < sub.size(); ++k) {
                if (sub[k] >= kInf) continue;
                std::size_t to = k | tag_[c];
                best[to] = std::min(best[to], sub[k] + 1);
            }
        }
        memo_.emplace(alive, best);
        return best;
    }

    std::size_t outs_;
    std::size_t n_ = 0;
    std::uint64_t full_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<unsigned> tag_;
    std::unordered_map<std::uint64_t, Table> memo_;
};

} // namespace

CostReport min_blue_moves(const ColouredGraph& fragment, const std::vector<InterfacePort>& out_ports)
{
    Search s(fragment, out_ports);
    Table t = s.run();
    std::size_t outs = out_ports.size();
    CostReport r;
    r.min_cost = kInf;
    for (int c : t) r.min_cost = std::min(r.min_cost, c);
    for (std::size_t bits = 0; bits < (std::size_t{1} << outs); ++bits) {
        int c = std::min(t[bits << 1], t[bits << 1 | 1]);
        if (c >= kInf) continue;
        Pattern p(outs, Signal::I);
        for (std::size_t i = 0; i < outs; ++i)
            if (bits >> i & 1) p[i] = Signal::A;
        r.pattern_costs[p] = c;
        if (c == r.min_cost) r.achievable.push_back(p);
        if (t[bits << 1] == r.min_cost) r.top_avoiding_min_line = true;
    }
    std::sort(r.achievable.begin(), r.achievable.end());
    return r;
}

} // namespace arck
