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

#include "serve.hpp"

#include "arck/error.hpp"

namespace arck::serve {

namespace {

Session::Reply error(int status, const std::string& msg) { return {status, Json{{"error", msg}}}; }

} // namespace

Json Session::state() const
{
    const ArcKPosition& p = *position_;
    bool done = is_terminal(p);
    Json j{{"position", to_json(p)}, {"terminal", done}};
    j["winner"] = done ? Json(std::string(to_string(terminal_winner(p)))) : Json(nullptr);
    return j;
}

Session::Reply Session::position()
{
    std::lock_guard lock(mu_);
    if (!position_) return error(404, "no position loaded");
    return {200, state()};
}

Session::Reply Session::move(const std::string& body)
{
    std::lock_guard lock(mu_);
    if (!position_) return error(404, "no position loaded");
    if (is_terminal(*position_)) return error(409, "game over");
    try {
        Json req = parse_json(body);
        if (!req.is_object() || !req.contains("edge") || !req["edge"].is_number_integer())
            return error(400, "body must be {\"edge\": id}");
        int edge = req["edge"].get<int>();
        position_ = apply_move(*position_, edge);
        Json out = state();
        out["move"] = edge;
        return {200, out};
    } catch (const Error& e) {
        return error(400, e.what());
    }
}

Session::Reply Session::reset(const std::string& body)
{
    std::lock_guard lock(mu_);
    try {
        Json req = parse_json(body);
        if (!req.is_object() || !req.contains("position")) return error(400, "body must be {\"position\": {...}}");
        position_ = position_from_json(req["position"]);
        return {200, state()};
    } catch (const Error& e) {
        return error(400, e.what());
    }
}

Session::Reply Session::hint()
{
    std::lock_guard lock(mu_);
    if (!position_) return error(404, "no position loaded");
    if (is_terminal(*position_)) return error(409, "game over");
    try {
        auto m = best_move(*position_, opts_);
        return {200, Json{{"edge", m ? Json(*m) : Json(nullptr)}}};
    } catch (const Error& e) {
        return error(503, e.what());
    }
}

Session::Reply Session::legal()
{
    std::lock_guard lock(mu_);
    if (!position_) return error(404, "no position loaded");
    return {200, Json{{"edges", legal_moves(*position_)}}};
}

void install_routes(httplib::Server& server, Session& session)
{
    auto send = [](httplib::Response& res, const Session::Reply& r) {
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
        res.set_header("Access-Control-Allow-Origin", "*");
    };
    server.Get("/position", [&, send](const httplib::Request&, httplib::Response& res) { send(res, session.position()); });
    server.Get("/hint", [&, send](const httplib::Request&, httplib::Response& res) { send(res, session.hint()); });
    server.Get("/legal", [&, send](const httplib::Request&, httplib::Response& res) { send(res, session.legal()); });
    server.Post("/move",
                [&, send](const httplib::Request& req, httplib::Response& res) { send(res, session.move(req.body)); });
    server.Post("/new",
                [&, send](const httplib::Request& req, httplib::Response& res) { send(res, session.reset(req.body)); });
}

} // namespace arck::serve
