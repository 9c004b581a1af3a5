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

#include "arck/arc_kayles.hpp"

#include <algorithm>
#include <atomic>
#include <exception>

#include "arck/error.hpp"
#include "bits.hpp"

namespace arck {

std::string_view to_string(Player p) { return p == Player::Blue ? "blue" : "red"; }
std::string_view to_string(Convention c) { return c == Convention::Normal ? "normal" : "misere"; }

Player player_from_string(std::string_view s)
{
    if (s == "blue") return Player::Blue;
    if (s == "red") return Player::Red;
    throw Error(ErrorCode::ParseError, "unknown player '" + std::string(s) + "'");
}

Convention convention_from_string(std::string_view s)
{
    if (s == "normal") return Convention::Normal;
    if (s == "misere") return Convention::Misere;
    throw Error(ErrorCode::ParseError, "unknown convention '" + std::string(s) + "'");
}

namespace {

bool playable(EdgeColour c, Player p) { return c == EdgeColour::Either || c == colour_of(p); }

} // namespace

std::vector<int> legal_moves(const ArcKPosition& pos)
{
    std::vector<int> out;
    for (const auto& e : pos.graph.edges())
        if (playable(e.colour, pos.to_move)) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
}

ArcKPosition apply_move(const ArcKPosition& pos, int edge_id)
{
    if (!pos.graph.has_edge(edge_id))
        throw Error(ErrorCode::IllegalMove, "edge " + std::to_string(edge_id) + ": absent");
    const Edge& e = pos.graph.edge(edge_id);
    if (!playable(e.colour, pos.to_move))
        throw Error(ErrorCode::IllegalMove, "edge " + std::to_string(edge_id) + ": wrong colour");
    const int gone[2] = {e.u, e.v};
    return {pos.graph.without_vertices(gone), pos.convention, opponent(pos.to_move)};
}

bool is_terminal(const ArcKPosition& pos) { return legal_moves(pos).empty(); }

Player terminal_winner(const ArcKPosition& pos)
{
    return pos.convention == Convention::Misere ? pos.to_move : opponent(pos.to_move);
}

namespace {

template <std::size_t W>
class SerialMemo {
public:
    bool find(const detail::Key<W>& k, bool& out) const
    {
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void insert(const detail::Key<W>& k, bool v) { map_.emplace(k, v); }

private:
    std::unordered_map<detail::Key<W>, bool, detail::KeyHash<W>> map_;
};

template <std::size_t W>
class Kernel {
public:
    using B = detail::Bits<W>;

    Kernel(const ArcKPosition& pos, std::uint64_t budget) : budget_(budget)
    {
        std::vector<const Edge*> edges;
        for (const auto& e : pos.graph.edges()) edges.push_back(&e);
        std::sort(edges.begin(), edges.end(), [](auto* a, auto* b) { return a->id < b->id; });
        n_ = edges.size();
        conflict_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            ids_.push_back(edges[i]->id);
            if (playable(edges[i]->colour, Player::Blue)) mask_[0].set(i);
            if (playable(edges[i]->colour, Player::Red)) mask_[1].set(i);
            for (std::size_t j = 0; j < n_; ++j)
                if (edges[i]->touches(edges[j]->u) || edges[i]->touches(edges[j]->v)) conflict_[i].set(j);
            all_.set(i);
        }
        misere_ = pos.convention == Convention::Misere;
    }

    const B& all() const { return all_; }
    int id(std::size_t i) const { return ids_[i]; }
    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

    B moves(const B& alive, int mover) const { return alive & mask_[mover]; }
    B after(const B& alive, std::size_t i) const { return alive.without(conflict_[i]); }

    /// True iff the player to move (0 Blue, 1 Red) wins from `alive`.
    template <class Memo>
    bool wins(const B& alive, int mover, Memo& memo)
    {
        B mv = moves(alive, mover);
        if (!mv.any()) return misere_;
        detail::Key<W> key{alive, static_cast<std::uint8_t>(mover)};
        bool cached;
        if (memo.find(key, cached)) return cached;
        if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_)
            throw Error(ErrorCode::BudgetExceeded, "node limit " + std::to_string(budget_));
        bool result = false;
        for (std::size_t k = 0; k < W && !result; ++k) {
            std::uint64_t x = mv.w[k];
            while (x) {
                std::size_t i = k * 64 + static_cast<std::size_t>(std::countr_zero(x));
                x &= x - 1;
                if (!wins(after(alive, i), 1 - mover, memo)) {
                    result = true;
                    break;
                }
            }
        }
        memo.insert(key, result);
        return result;
    }

private:
    std::size_t n_ = 0;
    std::vector<int> ids_;
    std::vector<B> conflict_;
    B mask_[2];
    B all_;
    bool misere_ = true;
    std::uint64_t budget_;
    std::atomic<std::uint64_t> nodes_{0};
};

template <std::size_t W>
SolveResult run(const ArcKPosition& pos, const SolveOptions& opts)
{
    Kernel<W> kernel(pos, opts.node_budget);
    const int mover = pos.to_move == Player::Blue ? 0 : 1;
    std::vector<std::size_t> roots;
    kernel.moves(kernel.all(), mover).for_each([&](std::size_t i) { roots.push_back(i); });

    SolveResult res;
    if (roots.empty()) {
        res.winner = terminal_winner(pos);
        return res;
    }

    std::optional<std::size_t> winning;
    if (!opts.parallel) {
        SerialMemo<W> memo;
        for (std::size_t i : roots)
            if (!kernel.wins(kernel.after(kernel.all(), i), 1 - mover, memo)) {
                winning = i;
                break;
            }
    } else {
        // Every root child is evaluated so the chosen move does not depend on scheduling.
        detail::ShardedMemo<W, bool> memo;
        std::vector<char> child_wins(roots.size(), 0);
        std::exception_ptr failure;
        const long count = static_cast<long>(roots.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (long r = 0; r < count; ++r) {
            try {
                child_wins[r] = kernel.wins(kernel.after(kernel.all(), roots[r]), 1 - mover, memo);
            } catch (...) {
#pragma omp critical(arck_solve_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        for (std::size_t r = 0; r < roots.size(); ++r)
            if (!child_wins[r]) {
                winning = roots[r];
                break;
            }
    }

    res.winner = winning ? pos.to_move : opponent(pos.to_move);
    res.principal_move = kernel.id(winning ? *winning : roots.front());
    res.nodes_searched = kernel.nodes();
    return res;
}

} // namespace

SolveResult solve(const ArcKPosition& pos, const SolveOptions& opts)
{
    return detail::dispatch_width(pos.graph.edge_count(),
                                  [&]<std::size_t W>() { return run<W>(pos, opts); });
}

std::optional<int> best_move(const ArcKPosition& pos, const SolveOptions& opts)
{
    return solve(pos, opts).principal_move;
}

} // namespace arck
