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

#include "arck/constraint_logic.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "arck/error.hpp"
#include "bits.hpp"

namespace arck {

std::string_view to_string(CLVariant v)
{
    switch (v) {
    case CLVariant::Standard: return "standard";
    case CLVariant::BuilderBlocker: return "bbb2cl";
    case CLVariant::NormalPlay: return "npb2cl";
    case CLVariant::MiserePlay: return "mpb2cl";
    }
    return "?";
}

std::string_view to_string(CLOutcome o)
{
    switch (o) {
    case CLOutcome::BlueWin: return "blue_win";
    case CLOutcome::RedWin: return "red_win";
    case CLOutcome::Draw: return "draw";
    }
    return "?";
}

std::string_view to_string(VertexKind k)
{
    switch (k) {
    case VertexKind::And: return "and";
    case VertexKind::Or: return "or";
    case VertexKind::Fanout: return "fanout";
    case VertexKind::Choice: return "choice";
    case VertexKind::Variable: return "variable";
    case VertexKind::BlueToRed: return "blue_to_red";
    case VertexKind::RedOr: return "red_or";
    case VertexKind::Other: return "other";
    }
    return "?";
}

CLVariant cl_variant_from_string(std::string_view s)
{
    if (s == "standard") return CLVariant::Standard;
    if (s == "bbb2cl") return CLVariant::BuilderBlocker;
    if (s == "npb2cl") return CLVariant::NormalPlay;
    if (s == "mpb2cl") return CLVariant::MiserePlay;
    throw Error(ErrorCode::ParseError, "unknown variant '" + std::string(s) + "'");
}

const CLVertex& CLInstance::vertex(int id) const
{
    for (const auto& v : vertices)
        if (v.id == id) return v;
    throw Error(ErrorCode::DanglingEndpoint, "no CL vertex " + std::to_string(id));
}

const CLEdge& CLInstance::edge(int id) const
{
    for (const auto& e : edges)
        if (e.id == id) return e;
    throw Error(ErrorCode::IllegalFlip, "edge " + std::to_string(id) + ": absent");
}

bool CLInstance::has_edge(int id) const
{
    return std::any_of(edges.begin(), edges.end(), [&](const CLEdge& e) { return e.id == id; });
}

int CLInstance::in_weight(int vertex_id) const
{
    int w = 0;
    for (const auto& e : edges)
        if (e.head == vertex_id) w += e.weight;
    return w;
}

CLValidationReport validate_instance(const CLInstance& inst)
{
    CLValidationReport r;
    std::set<int> vids;
    for (const auto& v : inst.vertices)
        if (!vids.insert(v.id).second) r.structural_violations.push_back("duplicate vertex " + std::to_string(v.id));
    std::set<int> eids;
    int blue_goals = 0;
    int red_goals = 0;
    for (const auto& e : inst.edges) {
        const std::string name = "edge " + std::to_string(e.id);
        if (!eids.insert(e.id).second) r.structural_violations.push_back("duplicate " + name);
        if (e.weight != 1 && e.weight != 2) r.structural_violations.push_back(name + " has weight " + std::to_string(e.weight));
        if (!vids.contains(e.tail) || !vids.contains(e.head)) r.structural_violations.push_back(name + " has a dangling end");
        if (e.tail == e.head) r.structural_violations.push_back(name + " is a loop");
        if (e.goal_for) {
            if (*e.goal_for != e.colour) r.goal_violations.push_back(name + " is a goal for the other colour");
            (*e.goal_for == Player::Blue ? blue_goals : red_goals)++;
        }
    }
    for (const auto& v : inst.vertices) {
        if (v.terminal) continue;
        int w = 0;
        for (const auto& e : inst.edges)
            if (e.initial_head() == v.id) w += e.weight;
        if (w < 2) r.in_weight_violations.push_back({v.id, w});
    }
    auto expect = [&](int want_blue, int want_red) {
        if (blue_goals != want_blue)
            r.goal_violations.push_back("expected " + std::to_string(want_blue) + " blue goal(s), found " +
                                        std::to_string(blue_goals));
        if (red_goals != want_red)
            r.goal_violations.push_back("expected " + std::to_string(want_red) + " red goal(s), found " +
                                        std::to_string(red_goals));
    };
    switch (inst.variant) {
    case CLVariant::Standard: expect(1, 1); break;
    case CLVariant::BuilderBlocker: expect(1, 0); break;
    case CLVariant::NormalPlay:
    case CLVariant::MiserePlay: expect(0, 0); break;
    }
    return r;
}

VertexKind classify_vertex(const CLInstance& inst, int vertex_id)
{
    // (colour, weight) multisets of arcs pointing in and out initially
    std::multiset<std::pair<Player, int>> in;
    std::multiset<std::pair<Player, int>> out;
    for (const auto& e : inst.edges) {
        if (e.initial_head() == vertex_id) in.insert({e.colour, e.weight});
        else if (e.initial_tail() == vertex_id) out.insert({e.colour, e.weight});
    }
    using P = std::pair<Player, int>;
    using S = std::multiset<P>;
    const P b1{Player::Blue, 1}, b2{Player::Blue, 2}, r2{Player::Red, 2};
    if (in == S{b2} && out == S{b1, b1}) return VertexKind::And;
    if (in == S{b2} && out == S{b2, b2}) return VertexKind::Or;
    if (in == S{b1, b1} && out == S{b1}) return VertexKind::Choice;
    if (in == S{b1, b1} && out == S{b2}) return VertexKind::Fanout;
    if (in == S{b2, r2} && out.empty()) return VertexKind::Variable;
    if (in == S{r2} && out == S{b2}) return VertexKind::BlueToRed;
    if (in == S{r2} && out == S{r2, r2}) return VertexKind::RedOr;
    return VertexKind::Other;
}

CLOutcome stuck_outcome(CLVariant variant, Player stuck)
{
    auto win = [](Player p) { return p == Player::Blue ? CLOutcome::BlueWin : CLOutcome::RedWin; };
    switch (variant) {
    case CLVariant::Standard: return CLOutcome::Draw;
    case CLVariant::BuilderBlocker: return CLOutcome::RedWin;
    case CLVariant::NormalPlay: return win(opponent(stuck));
    case CLVariant::MiserePlay: return win(stuck);
    }
    return CLOutcome::Draw;
}

namespace {

bool vertex_terminal(const CLInstance& inst, int id)
{
    for (const auto& v : inst.vertices)
        if (v.id == id) return v.terminal;
    return false;
}

std::string flip_problem(const CLInstance& inst, const CLEdge& e)
{
    if (e.flipped) return "already flipped";
    if (e.colour != inst.to_move) return "wrong colour";
    if (!vertex_terminal(inst, e.head) && inst.in_weight(e.head) - e.weight < 2)
        return "in-weight at vertex " + std::to_string(e.head) + " would drop below 2";
    return {};
}

} // namespace

std::vector<int> legal_flips(const CLInstance& inst)
{
    std::vector<int> out;
    for (const auto& e : inst.edges)
        if (flip_problem(inst, e).empty()) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
}

FlipResult apply_flip(const CLInstance& inst, int edge_id)
{
    const CLEdge& e = inst.edge(edge_id);
    if (auto why = flip_problem(inst, e); !why.empty())
        throw Error(ErrorCode::IllegalFlip, "edge " + std::to_string(edge_id) + ": " + why);
    FlipResult r{inst, std::nullopt};
    for (auto& f : r.next.edges)
        if (f.id == edge_id) {
            std::swap(f.tail, f.head);
            f.flipped = true;
        }
    const Player mover = inst.to_move;
    r.next.to_move = opponent(mover);
    if (e.goal_for == mover) {
        r.terminal = mover == Player::Blue ? CLOutcome::BlueWin : CLOutcome::RedWin;
    } else if (legal_flips(r.next).empty()) {
        r.terminal = stuck_outcome(inst.variant, r.next.to_move);
    }
    return r;
}

namespace {

int value_for(CLOutcome o, int mover)
{
    if (o == CLOutcome::Draw) return 0;
    return (o == CLOutcome::BlueWin) == (mover == 0) ? 1 : -1;
}

template <std::size_t W>
class SerialMemo {
public:
    bool find(const detail::Key<W>& k, std::int8_t& out) const
    {
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void insert(const detail::Key<W>& k, std::int8_t v) { map_.emplace(k, v); }

private:
    std::unordered_map<detail::Key<W>, std::int8_t, detail::KeyHash<W>> map_;
};

template <std::size_t W>
class Kernel {
public:
    using B = detail::Bits<W>;

    Kernel(const CLInstance& inst, std::uint64_t budget) : variant_(inst.variant), budget_(budget)
    {
        std::map<int, int> vindex;
        for (const auto& v : inst.vertices) {
            int idx = static_cast<int>(terminal_.size());
            vindex[v.id] = idx;
            terminal_.push_back(v.terminal);
        }
        std::vector<const CLEdge*> es;
        for (const auto& e : inst.edges) es.push_back(&e);
        std::sort(es.begin(), es.end(), [](auto* a, auto* b) { return a->id < b->id; });
        base_inw_.assign(terminal_.size(), 0);
        for (std::size_t i = 0; i < es.size(); ++i) {
            const CLEdge& e = *es[i];
            ids_.push_back(e.id);
            tail_.push_back(vindex.at(e.tail));
            head_.push_back(vindex.at(e.head));
            weight_.push_back(e.weight);
            goal_.push_back(e.goal_for == e.colour);
            if (!e.flipped) mask_[e.colour == Player::Blue ? 0 : 1].set(i);
            base_inw_[head_.back()] += e.weight;
        }
        find_pools();
    }

    const std::vector<int>& base_in_weight() const { return base_inw_; }
    int id(std::size_t i) const { return ids_[i]; }
    bool goal(std::size_t i) const { return goal_[i]; }
    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

    std::vector<std::size_t> moves(const B& flipped, const std::vector<int>& inw, int mover) const
    {
        std::vector<std::size_t> out;
        bool pool_seen = false;
        mask_[mover].without(flipped).for_each([&](std::size_t i) {
            if (pool_[i] == PoolRole::Twin) return;
            if (pool_[i] == PoolRole::Lead) {
                if (pool_seen) return;
                pool_seen = true;
            }
            if (terminal_[head_[i]] || inw[head_[i]] - weight_[i] >= 2) out.push_back(i);
        });
        return out;
    }

    void flip(std::vector<int>& inw, std::size_t i) const
    {
        inw[head_[i]] -= weight_[i];
        inw[tail_[i]] += weight_[i];
    }
    void unflip(std::vector<int>& inw, std::size_t i) const
    {
        inw[head_[i]] += weight_[i];
        inw[tail_[i]] -= weight_[i];
    }

    int stuck_value(int mover) const
    {
        return value_for(stuck_outcome(variant_, mover == 0 ? Player::Blue : Player::Red), mover);
    }

    /// Value for the mover: 1 win, 0 draw, -1 loss.
    template <class Memo>
    int value(B& flipped, std::vector<int>& inw, int mover, Memo& memo)
    {
        auto mv = moves(flipped, inw, mover);
        if (mv.empty()) return stuck_value(mover);
        for (std::size_t i : mv)
            if (goal_[i]) return 1;
        detail::Key<W> key{flipped, static_cast<std::uint8_t>(mover)};
        std::int8_t cached;
        if (memo.find(key, cached)) return cached;
        if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_)
            throw Error(ErrorCode::BudgetExceeded, "node limit " + std::to_string(budget_));
        int best = -2;
        for (std::size_t i : mv) {
            int v = child_value(flipped, inw, mover, i, memo);
            best = std::max(best, v);
            if (best == 1) break;
        }
        memo.insert(key, static_cast<std::int8_t>(best));
        return best;
    }

    template <class Memo>
    int child_value(B& flipped, std::vector<int>& inw, int mover, std::size_t i, Memo& memo)
    {
        if (goal_[i]) return 1;
        flipped.set(i);
        flip(inw, i);
        int v = -value(flipped, inw, 1 - mover, memo);
        unflip(inw, i);
        flipped.reset(i);
        return v;
    }

private:
    enum class PoolRole : std::uint8_t { None, Lead, Twin };

    /// A pool is a non-terminal vertex fed by exactly two same-colour weight-2
    /// arcs from private terminal ends, with nothing else attached. Only one of
    /// its arcs can ever flip and untouched pools are interchangeable, so the
    /// search expands just the lowest untouched pool (its lower arc).
    void find_pools()
    {
        pool_.assign(ids_.size(), PoolRole::None);
        std::vector<std::vector<std::size_t>> incident(terminal_.size());
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            incident[tail_[i]].push_back(i);
            incident[head_[i]].push_back(i);
        }
        for (std::size_t v = 0; v < incident.size(); ++v) {
            const auto& inc = incident[v];
            if (terminal_[v] || inc.size() != 2) continue;
            std::size_t a = inc[0], b = inc[1];
            auto private_arc = [&](std::size_t i) {
                return head_[i] == static_cast<int>(v) && weight_[i] == 2 && terminal_[tail_[i]] &&
                       incident[tail_[i]].size() == 1 && mask_[0].test(i) + mask_[1].test(i) == 1;
            };
            if (!private_arc(a) || !private_arc(b) || mask_[0].test(a) != mask_[0].test(b)) continue;
            pool_[a] = PoolRole::Lead;
            pool_[b] = PoolRole::Twin;
        }
    }

    CLVariant variant_;
    std::vector<PoolRole> pool_;
    std::vector<bool> terminal_;
    std::vector<int> ids_, tail_, head_, weight_;
    std::vector<bool> goal_;
    std::vector<int> base_inw_;
    B mask_[2];
    std::uint64_t budget_;
    std::atomic<std::uint64_t> nodes_{0};
};

CLOutcome outcome_of(int value, int mover)
{
    if (value == 0) return CLOutcome::Draw;
    return (value == 1) == (mover == 0) ? CLOutcome::BlueWin : CLOutcome::RedWin;
}

template <std::size_t W, class Memo>
std::vector<int> principal_line(Kernel<W>& k, int mover, Memo& memo)
{
    std::vector<int> line;
    detail::Bits<W> flipped;
    std::vector<int> inw = k.base_in_weight();
    while (true) {
        auto mv = k.moves(flipped, inw, mover);
        if (mv.empty()) break;
        std::size_t pick = mv.front();
        int best = -2;
        for (std::size_t i : mv) {
            int v = k.child_value(flipped, inw, mover, i, memo);
            if (v > best) {
                best = v;
                pick = i;
            }
            if (best == 1) break;
        }
        line.push_back(k.id(pick));
        if (k.goal(pick)) break;
        flipped.set(pick);
        k.flip(inw, pick);
        mover = 1 - mover;
    }
    return line;
}

template <std::size_t W>
CLSolveResult run(const CLInstance& inst, const SolveOptions& opts)
{
    Kernel<W> k(inst, opts.node_budget);
    const int mover = inst.to_move == Player::Blue ? 0 : 1;
    CLSolveResult res;
    detail::Bits<W> flipped;
    std::vector<int> inw = k.base_in_weight();

    if (!opts.parallel) {
        SerialMemo<W> memo;
        int v = k.value(flipped, inw, mover, memo);
        res.outcome = outcome_of(v, mover);
        res.principal_line = principal_line(k, mover, memo);
    } else {
        detail::ShardedMemo<W, std::int8_t> memo;
        auto roots = k.moves(flipped, inw, mover);
        std::vector<int> vals(roots.size(), -2);
        std::exception_ptr failure;
        const long count = static_cast<long>(roots.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (long r = 0; r < count; ++r) {
            try {
                detail::Bits<W> f;
                std::vector<int> local = k.base_in_weight();
                vals[r] = k.child_value(f, local, mover, roots[r], memo);
            } catch (...) {
#pragma omp critical(arck_cl_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        int v = roots.empty() ? k.stuck_value(mover) : *std::max_element(vals.begin(), vals.end());
        res.outcome = outcome_of(v, mover);
        res.principal_line = principal_line(k, mover, memo);
    }
    res.nodes_searched = k.nodes();
    return res;
}

} // namespace

CLSolveResult solve_cl(const CLInstance& inst, const SolveOptions& opts)
{
    return detail::dispatch_width(inst.edges.size(), [&]<std::size_t W>() { return run<W>(inst, opts); });
}

std::string to_dot(const CLInstance& inst, std::string_view name)
{
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (const auto& v : inst.vertices) {
        os << "  n" << v.id << " [label=\"" << (v.name.empty() ? std::to_string(v.id) : v.name) << "\"";
        if (v.terminal) os << ", shape=point";
        os << "];\n";
    }
    for (const auto& e : inst.edges) {
        os << "  n" << e.tail << " -> n" << e.head << " [color=" << (e.colour == Player::Blue ? "blue" : "red")
           << ", arrowhead=" << (e.weight == 2 ? "normalnormal" : "normal");
        if (e.goal_for) os << ", penwidth=3, label=\"" << to_string(*e.goal_for) << " goal\"";
        if (e.flipped) os << ", style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace arck
