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

#include <mutex>
#include <optional>

#include "httplib.h"

#include "arck/arc_kayles.hpp"
#include "arck/serialize.hpp"

namespace arck::serve {

/// Single game held by a server. Every handler takes the lock, so requests
/// are applied one at a time.
class Session {
public:
    explicit Session(std::optional<ArcKPosition> start = std::nullopt, SolveOptions opts = {})
        : position_(std::move(start)), opts_(opts)
    {
    }

    struct Reply {
        int status = 200;
        Json body;
    };

    Reply position();
    Reply move(const std::string& body);
    Reply reset(const std::string& body);
    Reply hint();
    Reply legal();

private:
    Json state() const;

    std::mutex mu_;
    std::optional<ArcKPosition> position_;
    SolveOptions opts_;
};

/// Binds GET /position, POST /move, POST /new, GET /hint, GET /legal.
void install_routes(httplib::Server& server, Session& session);

} // namespace arck::serve
