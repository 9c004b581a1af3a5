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

#include "arck/poscnf.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "arck/error.hpp"

namespace arck {

std::string_view to_string(Claimer c) { return c == Claimer::True ? "true" : "false"; }

Claimer claimer_from_string(std::string_view s)
{
    if (s == "true") return Claimer::True;
    if (s == "false") return Claimer::False;
    throw Error(ErrorCode::ParseError, "unknown claimer '" + std::string(s) + "'");
}

namespace {

struct Token {
    std::string_view text;
    int line;
    int column;
};

std::string where(const Token& t) { return "line " + std::to_string(t.line) + ", column " + std::to_string(t.column); }

std::vector<std::vector<Token>> tokenize(std::string_view text)
{
    std::vector<std::vector<Token>> lines;
    int line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view row = text.substr(pos, end - pos);
        ++line;
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < row.size()) {
            while (i < row.size() && std::isspace(static_cast<unsigned char>(row[i]))) ++i;
            std::size_t start = i;
            while (i < row.size() && !std::isspace(static_cast<unsigned char>(row[i]))) ++i;
            if (i > start) toks.push_back({row.substr(start, i - start), line, static_cast<int>(start) + 1});
        }
        if (!toks.empty() && toks.front().text != "c") lines.push_back(std::move(toks));
        pos = end + 1;
    }
    return lines;
}

long parse_int(const Token& t)
{
    long v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || p != t.text.data() + t.text.size())
        throw Error(ErrorCode::ParseError, "expected an integer at " + where(t) + ", got '" + std::string(t.text) + "'");
    return v;
}

} // namespace

PosCNFFormula parse_formula(std::string_view text)
{
    auto lines = tokenize(text);
    if (lines.empty()) throw Error(ErrorCode::ParseError, "missing header 'p poscnf n m' at line 1, column 1");
    const auto& h = lines.front();
    if (h.size() != 4 || h[0].text != "p" || h[1].text != "poscnf")
        throw Error(ErrorCode::ParseError, "expected header 'p poscnf n m' at " + where(h[0]));
    PosCNFFormula f;
    long n = parse_int(h[2]);
    long m = parse_int(h[3]);
    if (n < 0 || m < 0) throw Error(ErrorCode::ParseError, "negative count in header at " + where(h[2]));
    f.num_vars = static_cast<int>(n);

    std::vector<int> current;
    Token last = h[3];
    for (std::size_t li = 1; li < lines.size(); ++li) {
        for (const auto& t : lines[li]) {
            last = t;
            long v = parse_int(t);
            if (v < 0) throw Error(ErrorCode::NegativeLiteral, "literal " + std::string(t.text) + " at " + where(t));
            if (v == 0) {
                if (current.empty()) throw Error(ErrorCode::EmptyClause, "clause ending at " + where(t));
                f.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (v > n)
                throw Error(ErrorCode::ParseError, "variable " + std::to_string(v) + " out of range at " + where(t));
            current.push_back(static_cast<int>(v));
        }
    }
    if (!current.empty()) throw Error(ErrorCode::ParseError, "unterminated clause at " + where(last));
    if (static_cast<long>(f.clauses.size()) != m)
        throw Error(ErrorCode::ParseError, "header declares " + std::to_string(m) + " clauses, found " +
                                               std::to_string(f.clauses.size()));
    return f;
}

std::string format_formula(const PosCNFFormula& f)
{
    std::ostringstream os;
    os << "p poscnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (int v : c) os << v << ' ';
        os << "0\n";
    }
    return os.str();
}

void validate_formula(const PosCNFFormula& f)
{
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        if (f.clauses[i].empty()) throw Error(ErrorCode::EmptyClause, "clause " + std::to_string(i + 1));
        for (int v : f.clauses[i]) {
            if (v < 0) throw Error(ErrorCode::NegativeLiteral, "literal " + std::to_string(v));
            if (v == 0 || v > f.num_vars)
                throw Error(ErrorCode::ParseError, "variable " + std::to_string(v) + " out of range");
        }
    }
}

PosCNFGame new_game(const PosCNFFormula& f, Claimer first)
{
    validate_formula(f);
    return {f, std::vector<Truth>(static_cast<std::size_t>(f.num_vars), Truth::Unassigned), first};
}

PosCNFGame apply_assignment(const PosCNFGame& game, int variable, Truth value)
{
    if (variable < 1 || variable > game.formula.num_vars)
        throw Error(ErrorCode::ParseError, "variable " + std::to_string(variable) + " out of range");
    if (game.assignment[variable - 1] != Truth::Unassigned)
        throw Error(ErrorCode::AlreadyAssigned, "variable " + std::to_string(variable));
    PosCNFGame next = game;
    next.assignment[variable - 1] = value;
    next.to_move = other(game.to_move);
    return next;
}

PosCNFGame apply_assignment(const PosCNFGame& game, int variable)
{
    return apply_assignment(game, variable, game.to_move == Claimer::True ? Truth::True : Truth::False);
}

bool evaluate(const PosCNFFormula& f, const std::vector<Truth>& assignment)
{
    for (std::size_t i = 0; i < assignment.size(); ++i)
        if (assignment[i] == Truth::Unassigned)
            throw Error(ErrorCode::Incomplete, "variable " + std::to_string(i + 1) + " unassigned");
    for (const auto& c : f.clauses) {
        bool sat = false;
        for (int v : c) sat = sat || assignment[v - 1] == Truth::True;
        if (!sat) return false;
    }
    return true;
}

namespace {

class Solver {
public:
    Solver(const PosCNFFormula& f, bool permissive) : f_(f), permissive_(permissive)
    {
        if (f.num_vars > 31) throw Error(ErrorCode::BudgetExceeded, "more than 31 variables");
    }

    /// True iff the True player wins with `t` true and `fl` false, `mover` to move.
    bool true_wins(std::uint32_t t, std::uint32_t fl, Claimer mover)
    {
        const std::uint32_t all = f_.num_vars == 0 ? 0 : (std::uint32_t{1} << f_.num_vars) - 1;
        if ((t | fl) == all) return satisfied(t);
        std::uint64_t key = (std::uint64_t{t} << 32 | fl) * 2 + (mover == Claimer::True);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool result = mover != Claimer::True;
        for (int v = 0; v < f_.num_vars; ++v) {
            std::uint32_t bit = std::uint32_t{1} << v;
            if ((t | fl) & bit) continue;
            for (Truth val : options(mover)) {
                bool r = val == Truth::True ? true_wins(t | bit, fl, other(mover)) : true_wins(t, fl | bit, other(mover));
                if (r == (mover == Claimer::True)) {
                    result = r;
                    goto done;
                }
            }
        }
    done:
        memo_[key] = result;
        return result;
    }

    std::vector<Truth> options(Claimer mover) const
    {
        Truth own = mover == Claimer::True ? Truth::True : Truth::False;
        if (!permissive_) return {own};
        return {Truth::True, Truth::False};
    }

private:
    bool satisfied(std::uint32_t t) const
    {
        for (const auto& c : f_.clauses) {
            bool sat = false;
            for (int v : c) sat = sat || ((t >> (v - 1)) & 1);
            if (!sat) return false;
        }
        return true;
    }

    const PosCNFFormula& f_;
    bool permissive_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

} // namespace

PosCNFSolveResult solve_poscnf(const PosCNFGame& game, bool permissive)
{
    validate_formula(game.formula);
    Solver s(game.formula, permissive);
    std::uint32_t t = 0;
    std::uint32_t fl = 0;
    for (std::size_t i = 0; i < game.assignment.size(); ++i) {
        if (game.assignment[i] == Truth::True) t |= std::uint32_t{1} << i;
        if (game.assignment[i] == Truth::False) fl |= std::uint32_t{1} << i;
    }
    const Claimer mover = game.to_move;
    PosCNFSolveResult res;
    res.winner = s.true_wins(t, fl, mover) ? Claimer::True : Claimer::False;
    for (int v = 0; v < game.formula.num_vars && !res.principal_variable; ++v) {
        std::uint32_t bit = std::uint32_t{1} << v;
        if ((t | fl) & bit) continue;
        for (Truth val : s.options(mover)) {
            bool r = val == Truth::True ? s.true_wins(t | bit, fl, other(mover)) : s.true_wins(t, fl | bit, other(mover));
            if ((r ? Claimer::True : Claimer::False) == res.winner) {
                res.principal_variable = v + 1;
                res.principal_value = val;
                break;
            }
        }
    }
    if (!res.principal_variable) {
        // mover loses everywhere: lowest unassigned variable
        for (int v = 0; v < game.formula.num_vars; ++v)
            if (game.assignment[v] == Truth::Unassigned) {
                res.principal_variable = v + 1;
                res.principal_value = s.options(mover).front();
                break;
            }
    }
    return res;
}

} // namespace arck
