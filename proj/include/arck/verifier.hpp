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

#pragma once

#include <string>
#include <vector>

#include "arck/cost_oracle.hpp"
#include "arck/gadgets.hpp"
#include "arck/planarity.hpp"
#include "arck/serialize.hpp"

namespace arck {

enum class Verdict { Pass, Warn, Fail };
std::string_view to_string(Verdict v);

/// Expected output patterns of a logic gadget for one input pattern.
std::vector<Pattern> logical_outputs(GadgetKind kind, const Pattern& inputs);

struct CaseResult {
    Pattern inputs;
    std::vector<Pattern> expected; // downward closure of the logical outputs
    CostReport cost;
    int input_plays = 0;
    bool closure_ok = false;  // achievable set equals the expected closure
    bool penalty_ok = false;  // patterns outside the closure cost at least min + 1
    bool balance_ok = false;  // red companions equal input plays + min cost
    bool pass() const { return closure_ok && penalty_ok && balance_ok && cost.top_avoiding_min_line; }
};

struct TruthTableReport {
    GadgetKind kind = GadgetKind::And;
    Backend backend = Backend::General;
    Verdict verdict = Verdict::Pass;
    int red_edges = 0;
    std::vector<CaseResult> cases;
    std::vector<std::string> notes;
};

/// Cost convention recorded in every report.
extern const char* const kCostOwnership;

/// Text claimed for inactive input in the general and the triangular
/// choice case analyses; the two disagree.
extern const char* const kChoiceGeneralClaim;
extern const char* const kChoiceTriangularClaim;

struct VariableReport {
    Backend backend = Backend::General;
    int red_c_inactive = 0;
    int red_c_active = 0;
    int red_b_inactive = 0;
    int red_b_active = 0;
    int blue_d_active = 0;
    bool blue_d_detaches = false; // remaining a/b pair is a mixed component Red must clear
    bool pass = false;
};
VariableReport verify_variable_gadget(Backend backend);

struct GoalReport {
    Backend backend = Backend::General;
    int active_total = 0;
    int inactive_total = 0;
    bool pass = false;
};
GoalReport verify_goal_gadget(Backend backend = Backend::General);

/// Goal and Variable delegate to their dedicated checks. Triangular Choice
/// reports Warn when the computed inactive-input result matches the general
/// semantics but not the triangular claim.
TruthTableReport verify_truth_table(GadgetKind kind, Backend backend);

/// The acceptance matrix in a fixed order; entries are computed in parallel.
std::vector<std::pair<GadgetKind, Backend>> truth_table_matrix();
std::vector<TruthTableReport> verify_matrix();

struct PlanarityEntry {
    std::string name; // "<kind>/<backend>" or a control name
    bool planar = false;
    bool embedding_valid = false;
    int line_vertices = 0;
    int line_edges = 0;
    Embedding embedding;
    KuratowskiKind witness = KuratowskiKind::None;
};

struct PlanarityReport {
    std::vector<PlanarityEntry> templates;
    std::vector<PlanarityEntry> controls; // expected non-planar
    bool pass() const;
};
PlanarityReport verify_line_graph_planarity();

Json to_json(const CostReport& r);
Json to_json(const TruthTableReport& r);
Json to_json(const VariableReport& r);
Json to_json(const GoalReport& r);
Json to_json(const PlanarityReport& r);
std::string describe(const TruthTableReport& r);

} // namespace arck
