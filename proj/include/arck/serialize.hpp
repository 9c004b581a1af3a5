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
#include <string_view>

#include "json.hpp"

#include "arck/arc_kayles.hpp"
#include "arck/constraint_logic.hpp"
#include "arck/graph.hpp"
#include "arck/planarity.hpp"
#include "arck/poscnf.hpp"

namespace arck {

using Json = nlohmann::ordered_json;

/// Parses JSON text. Throws Error{ParseError} with line and column.
Json parse_json(std::string_view text);

Json to_json(const ColouredGraph& g);
ColouredGraph graph_from_json(const Json& j);

/// Graph schema plus "convention" and "to_move".
Json to_json(const ArcKPosition& pos);
ArcKPosition position_from_json(const Json& j);

Json to_json(const CLInstance& inst);
CLInstance cl_from_json(const Json& j);

/// {"rotation":[{"vertex":id,"edges":[...]}...]}
Json to_json(const Embedding& emb);
Embedding embedding_from_json(const Json& j);

Json to_json(const PosCNFGame& game);

std::string encode(const ColouredGraph& g);
ColouredGraph decode(std::string_view text);

} // namespace arck
