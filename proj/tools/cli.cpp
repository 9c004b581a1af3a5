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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "arck/arck_compiler.hpp"
#include "arck/error.hpp"
#include "arck/verifier.hpp"
#include "serve.hpp"

namespace arck::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
    out << text << '\n';
}

struct Options {
    std::string in;
    std::string out;
    std::string from = "poscnf";
    std::string to = "arck";
    std::string variant = "standard";
    std::string backend = "general";
    std::string embedding;
    std::string kind;
    std::string first = "true";
    std::string host = "127.0.0.1";
    std::string position;
    int port = 8080;
    int wires = 0;
    std::uint64_t budget = SolveOptions{}.node_budget;
    std::uint64_t seed = 0; // reserved; every operation is deterministic
    bool parallel = false;
    bool dot = false;
};

SolveOptions solve_options(const Options& o) { return {o.budget, o.parallel}; }

int solve_arck_cmd(const Options& o, std::ostream& out)
{
    ArcKPosition pos = position_from_json(parse_json(read_file(o.in)));
    SolveResult r = solve(pos, solve_options(o));
    out << Json{{"winner", std::string(to_string(r.winner))},
                {"principal_move", r.principal_move ? Json(*r.principal_move) : Json(nullptr)},
                {"nodes_searched", r.nodes_searched}}
               .dump(2)
        << '\n';
    return 0;
}

int solve_cl_cmd(const Options& o, std::ostream& out)
{
    CLInstance inst = cl_from_json(parse_json(read_file(o.in)));
    CLSolveResult r = solve_cl(inst, solve_options(o));
    out << Json{{"outcome", std::string(to_string(r.outcome))},
                {"principal_line", r.principal_line},
                {"nodes_searched", r.nodes_searched}}
               .dump(2)
        << '\n';
    return 0;
}

int solve_poscnf_cmd(const Options& o, std::ostream& out)
{
    PosCNFGame g = new_game(parse_formula(read_file(o.in)), claimer_from_string(o.first));
    PosCNFSolveResult r = solve_poscnf(g);
    Json j{{"winner", std::string(to_string(r.winner))}};
    j["principal_variable"] = r.principal_variable ? Json(*r.principal_variable) : Json(nullptr);
    out << j.dump(2) << '\n';
    return 0;
}

int compile_cmd(const Options& o, std::ostream& out)
{
    Json result;
    if (o.from == "poscnf" && o.to == "b2cl") {
        CLCompilation c = compile_variant(parse_formula(read_file(o.in)), cl_variant_from_string(o.variant));
        result = Json{{"instance", to_json(c.instance)}, {"trace", to_json(c.trace)}, {"k", c.params.k}};
    } else if (o.to == "arck") {
        Backend b = backend_from_string(o.backend);
        ArcKCompileOptions opts{o.wires};
        ArcKCompilation c;
        if (o.from == "poscnf") {
            c = compile_poscnf_to_arck(parse_formula(read_file(o.in)), b, opts);
        } else {
            std::optional<Embedding> emb;
            if (!o.embedding.empty()) emb = embedding_from_json(parse_json(read_file(o.embedding)));
            c = compile_b2cl_to_arck(cl_from_json(parse_json(read_file(o.in))), b, emb, opts);
        }
        result = Json{{"position", to_json(c.position)}, {"trace", to_json(c.trace)}, {"budget", to_json(red_budget(c))}};
    } else {
        throw CLI::ValidationError("--from/--to", "supported: poscnf->b2cl, poscnf->arck, b2cl->arck");
    }

    if (o.out.empty()) {
        out << result.dump(2) << '\n';
        return 0;
    }
    std::filesystem::path dir(o.out);
    std::filesystem::create_directories(dir);
    Json summary = Json::object();
    for (auto& [key, value] : result.items()) {
        if (!value.is_object()) {
            summary[key] = value;
            continue;
        }
        auto path = dir / (key + ".json");
        write_file(path, value.dump(2));
        summary[key] = path.string();
    }
    out << summary.dump(2) << '\n';
    return 0;
}

int verify_cmd(const Options& o, std::ostream& out, std::ostream& err)
{
    std::vector<TruthTableReport> reports;
    if (!o.kind.empty() && !o.backend.empty()) {
        reports.push_back(verify_truth_table(gadget_kind_from_string(o.kind), backend_from_string(o.backend)));
    } else {
        for (auto& r : verify_matrix())
            if ((o.kind.empty() || to_string(r.kind) == o.kind) && (o.backend.empty() || to_string(r.backend) == o.backend))
                reports.push_back(std::move(r));
    }
    int fails = 0, warns = 0;
    Json tables = Json::array();
    for (const auto& r : reports) {
        fails += r.verdict == Verdict::Fail;
        warns += r.verdict == Verdict::Warn;
        tables.push_back(to_json(r));
        err << describe(r) << '\n';
    }
    Json j{{"truth_tables", tables}};
    if (o.kind.empty() && o.backend.empty()) {
        GoalReport goal = verify_goal_gadget();
        Json vars = Json::array();
        for (Backend b : {Backend::General, Backend::Cartesian, Backend::Triangular}) {
            VariableReport v = verify_variable_gadget(b);
            fails += !v.pass;
            vars.push_back(to_json(v));
        }
        PlanarityReport planar = verify_line_graph_planarity();
        fails += !goal.pass + !planar.pass();
        j["goal"] = to_json(goal);
        j["variable"] = vars;
        j["line_graph_planarity"] = to_json(planar);
        err << "goal gadget " << (goal.pass ? "PASS" : "FAIL") << ", line-graph planarity "
            << (planar.pass() ? "PASS" : "FAIL") << '\n';
    }
    j["cost_ownership"] = kCostOwnership;
    j["summary"] = Json{{"reports", reports.size()}, {"warn", warns}, {"fail", fails}};
    out << j.dump(2) << '\n';
    return fails ? 1 : 0;
}

int export_cmd(const Options& o, std::ostream& out)
{
    Json j = parse_json(read_file(o.in));
    std::string dot;
    if (j.contains("variant") || (j.contains("edges") && !j["edges"].empty() && j["edges"][0].contains("tail")))
        dot = to_dot(cl_from_json(j));
    else
        dot = to_dot(graph_from_json(j));
    if (o.out.empty()) out << dot;
    else write_file(o.out, dot);
    return 0;
}

int serve_cmd(const Options& o, std::ostream& out)
{
    std::optional<ArcKPosition> start;
    if (!o.position.empty()) start = position_from_json(parse_json(read_file(o.position)));
    serve::Session session(start, solve_options(o));
    httplib::Server server;
    serve::install_routes(server, session);
    out << "serving on http://" << o.host << ':' << o.port << std::endl;
    if (!server.listen(o.host, o.port)) throw Error(ErrorCode::ParseError, "cannot listen on port " + std::to_string(o.port));
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact solver and reduction compiler for misere partizan Arc Kayles, bounded constraint logic and PosCNF",
                 "arck"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--seed", o.seed, "Reserved; ignored (all operations are deterministic)");

    auto budget = [&](CLI::App* c) {
        c->add_option("--budget", o.budget, "Node budget")->capture_default_str();
        c->add_flag("--parallel", o.parallel, "Split the root across OpenMP threads");
    };

    auto* sa = app.add_subcommand("solve-arck", "Solve an Arc Kayles position");
    sa->add_option("--in", o.in, "Position JSON")->required();
    budget(sa);
    auto* sc = app.add_subcommand("solve-cl", "Solve a constraint-logic instance");
    sc->add_option("--in", o.in, "Instance JSON")->required();
    budget(sc);
    auto* sp = app.add_subcommand("solve-poscnf", "Solve a PosCNF game");
    sp->add_option("--in", o.in, "Formula file")->required();
    sp->add_option("--first", o.first, "Who moves first")->check(CLI::IsMember({"true", "false"}))->capture_default_str();

    auto* co = app.add_subcommand("compile", "Compile PosCNF or B2CL");
    co->add_option("--in", o.in, "Input file")->required();
    co->add_option("--from", o.from)->check(CLI::IsMember({"poscnf", "b2cl"}))->capture_default_str();
    co->add_option("--to", o.to)->check(CLI::IsMember({"b2cl", "arck"}))->capture_default_str();
    co->add_option("--variant", o.variant)
        ->check(CLI::IsMember({"standard", "bbb2cl", "npb2cl", "mpb2cl"}))
        ->capture_default_str();
    co->add_option("--backend", o.backend)
        ->check(CLI::IsMember({"general", "cartesian", "triangular"}))
        ->capture_default_str();
    co->add_option("--embedding", o.embedding, "Rotation system JSON");
    co->add_option("--wires", o.wires, "Extra wires per merged arc (lattice backends)");
    co->add_option("--out", o.out, "Output directory");

    auto* ve = app.add_subcommand("verify", "Check gadget semantics");
    std::string vbackend;
    ve->add_option("--kind", o.kind);
    ve->add_option("--backend", vbackend);

    auto* ex = app.add_subcommand("export", "Render JSON as DOT");
    ex->add_flag("--dot", o.dot, "DOT output (the only format)")->required();
    ex->add_option("--in", o.in)->required();
    ex->add_option("--out", o.out);

    auto* se = app.add_subcommand("serve", "Play a position over HTTP");
    se->add_option("--port", o.port)->capture_default_str();
    se->add_option("--host", o.host)->capture_default_str();
    se->add_option("--position", o.position, "Initial position JSON");
    budget(se);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*sa) return solve_arck_cmd(o, out);
        if (*sc) return solve_cl_cmd(o, out);
        if (*sp) return solve_poscnf_cmd(o, out);
        if (*co) return compile_cmd(o, out);
        if (*ve) {
            o.backend = vbackend;
            return verify_cmd(o, out, err);
        }
        if (*ex) return export_cmd(o, out);
        if (*se) return serve_cmd(o, out);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace arck::cli
