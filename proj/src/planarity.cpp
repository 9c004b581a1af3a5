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

#include "arck/planarity.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

namespace arck {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

struct Converted {
    BGraph graph;
    std::vector<int> vertex_id; // boost index -> our vertex id
    std::vector<int> edge_id;   // boost edge index -> our edge id
};

Converted convert(const ColouredGraph& g)
{
    Converted c;
    c.graph = BGraph(g.vertex_count());
    std::unordered_map<int, std::size_t> idx;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        idx[g.vertices()[i].id] = i;
        c.vertex_id.push_back(g.vertices()[i].id);
    }
    for (const auto& e : g.edges()) {
        boost::add_edge(idx.at(e.u), idx.at(e.v), static_cast<int>(c.edge_id.size()), c.graph);
        c.edge_id.push_back(e.id);
    }
    return c;
}

bool planar_subset(const ColouredGraph& g, const std::vector<int>& edge_ids)
{
    std::unordered_map<int, std::size_t> idx;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) idx[g.vertices()[i].id] = i;
    BGraph b(g.vertex_count());
    int n = 0;
    for (int id : edge_ids) boost::add_edge(idx.at(g.edge(id).u), idx.at(g.edge(id).v), n++, b);
    return boost::boyer_myrvold_planarity_test(b);
}

/// Drops edges one at a time while the rest stays non-planar. An edge-minimal
/// non-planar subgraph is a subdivision of K5 or K3,3.
std::vector<int> minimal_nonplanar(const ColouredGraph& g, std::vector<int> edges)
{
    for (std::size_t i = 0; i < edges.size();) {
        std::vector<int> rest = edges;
        rest.erase(rest.begin() + static_cast<long>(i));
        if (planar_subset(g, rest)) ++i;
        else edges = std::move(rest);
    }
    return edges;
}

} // namespace

PlanarityResult is_planar(const ColouredGraph& g)
{
    PlanarityResult result;
    Converted c = convert(g);
    auto eidx = boost::get(boost::edge_index, c.graph);

    using EmbeddingStorage = std::vector<std::vector<BEdge>>;
    EmbeddingStorage storage(boost::num_vertices(c.graph));
    auto emb = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, c.graph));

    if (boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = c.graph,
                                            boost::boyer_myrvold_params::embedding = emb)) {
        result.planar = true;
        for (std::size_t v = 0; v < storage.size(); ++v) {
            auto& rot = result.embedding[c.vertex_id[v]];
            for (const auto& e : storage[v]) rot.push_back(c.edge_id[eidx[e]]);
        }
        return result;
    }

    std::vector<BEdge> witness;
    boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = c.graph,
                                        boost::boyer_myrvold_params::kuratowski_subgraph =
                                            std::back_inserter(witness));
    for (const auto& e : witness) result.witness_edges.push_back(c.edge_id[eidx[e]]);
    std::sort(result.witness_edges.begin(), result.witness_edges.end());
    result.witness_kind = classify_kuratowski(g, result.witness_edges);
    if (result.witness_kind == KuratowskiKind::None) {
        // The reported subgraph can carry extra edges; shrink it (or the whole
        // graph, if it is not even non-planar) to a minimal obstruction.
        std::vector<int> start = result.witness_edges;
        if (planar_subset(g, start)) {
            start.clear();
            for (const auto& e : g.edges()) start.push_back(e.id);
        }
        result.witness_edges = minimal_nonplanar(g, std::move(start));
        result.witness_kind = classify_kuratowski(g, result.witness_edges);
    }
    return result;
}

namespace {

/// Darts are (edge index, direction). Returns per-component face counts keyed
/// by a representative vertex, or empty on a malformed rotation.
bool trace_faces(const ColouredGraph& g, const Embedding& rotation, std::map<int, int>& faces_per_root,
                 std::map<int, int>& root_of)
{
    // position of each edge in each endpoint's rotation
    std::map<std::pair<int, int>, std::size_t> pos; // (vertex, edge) -> index
    for (const auto& v : g.vertices()) {
        auto expected = g.incident_edges(v.id);
        auto it = rotation.find(v.id);
        std::vector<int> got = it == rotation.end() ? std::vector<int>{} : it->second;
        auto sorted = got;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != expected) return false;
        for (std::size_t i = 0; i < got.size(); ++i) pos[{v.id, got[i]}] = i;
    }
    for (const auto& [vid, rot] : rotation)
        if (!g.has_vertex(vid)) return false;

    // components by union-find
    std::map<int, int> parent;
    for (const auto& v : g.vertices()) parent[v.id] = v.id;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) parent[find(e.u)] = find(e.v);
    for (const auto& v : g.vertices()) root_of[v.id] = find(v.id);

    std::set<std::pair<int, int>> seen; // (edge id, from vertex)
    for (const auto& e : g.edges()) {
        for (int from : {e.u, e.v}) {
            if (seen.contains({e.id, from})) continue;
            int cur_edge = e.id;
            int cur_from = from;
            while (!seen.contains({cur_edge, cur_from})) {
                seen.insert({cur_edge, cur_from});
                const Edge& ce = g.edge(cur_edge);
                int to = ce.other(cur_from);
                const auto& rot = rotation.at(to);
                std::size_t i = pos.at({to, cur_edge});
                int next = rot[(i + 1) % rot.size()];
                cur_from = to;
                cur_edge = next;
            }
            faces_per_root[root_of[from]]++;
        }
    }
    return true;
}

} // namespace

int count_faces(const ColouredGraph& g, const Embedding& rotation)
{
    std::map<int, int> faces;
    std::map<int, int> roots;
    if (!trace_faces(g, rotation, faces, roots)) return -1;
    int total = 0;
    for (auto [r, f] : faces) total += f;
    return total;
}

bool is_plane_embedding(const ColouredGraph& g, const Embedding& rotation)
{
    std::map<int, int> faces;
    std::map<int, int> roots;
    if (!trace_faces(g, rotation, faces, roots)) return false;
    std::map<int, int> vcount;
    std::map<int, int> ecount;
    for (const auto& v : g.vertices()) vcount[roots[v.id]]++;
    for (const auto& e : g.edges()) ecount[roots[e.u]]++;
    for (auto [root, edges] : ecount)
        if (vcount[root] - edges + faces[root] != 2) return false;
    return true;
}

KuratowskiKind classify_kuratowski(const ColouredGraph& g, const std::vector<int>& edge_ids)
{
    if (edge_ids.empty()) return KuratowskiKind::None;
    std::map<int, std::vector<int>> adj; // vertex -> incident edges in subset
    for (int id : edge_ids) {
        const Edge& e = g.edge(id);
        adj[e.u].push_back(id);
        adj[e.v].push_back(id);
    }
    std::vector<int> branch;
    for (const auto& [v, es] : adj) {
        if (es.size() < 2) return KuratowskiKind::None;
        if (es.size() > 2) branch.push_back(v);
    }
    // follow each path out of a branch vertex to the next branch vertex
    std::set<std::pair<int, int>> links;
    std::set<int> used;
    std::set<int> branch_set(branch.begin(), branch.end());
    for (int b : branch) {
        for (int start : adj[b]) {
            if (used.contains(start)) continue;
            int cur = b;
            int edge = start;
            while (true) {
                used.insert(edge);
                int nxt = g.edge(edge).other(cur);
                if (branch_set.contains(nxt)) {
                    if (nxt == b) return KuratowskiKind::None;
                    if (!links.insert(std::minmax(b, nxt)).second) return KuratowskiKind::None;
                    break;
                }
                const auto& es = adj[nxt];
                edge = es[0] == edge ? es[1] : es[0];
                cur = nxt;
            }
        }
    }
    if (used.size() != edge_ids.size()) return KuratowskiKind::None; // stray cycles
    std::map<int, int> deg;
    for (auto [a, b] : links) {
        deg[a]++;
        deg[b]++;
    }
    if (branch.size() == 5 && links.size() == 10) {
        for (int b : branch)
            if (deg[b] != 4) return KuratowskiKind::None;
        return KuratowskiKind::K5;
    }
    if (branch.size() == 6 && links.size() == 9) {
        // bipartition by 2-colouring the branch graph
        std::map<int, int> side;
        std::vector<int> stack{branch[0]};
        side[branch[0]] = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [a, b] : links) {
                if (a != x && b != x) continue;
                int y = a == x ? b : a;
                if (!side.contains(y)) {
                    side[y] = 1 - side[x];
                    stack.push_back(y);
                } else if (side[y] == side[x]) {
                    return KuratowskiKind::None;
                }
            }
        }
        if (side.size() != 6) return KuratowskiKind::None;
        int left = 0;
        for (auto [v, s] : side) left += s == 0;
        if (left != 3) return KuratowskiKind::None;
        for (int b : branch)
            if (deg[b] != 3) return KuratowskiKind::None;
        return KuratowskiKind::K33;
    }
    return KuratowskiKind::None;
}

} // namespace arck
