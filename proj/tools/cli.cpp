#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trustroute/errors.hpp"
#include "trustroute/pathing.hpp"
#include "trustroute/propagation.hpp"
#include "trustroute/sim.hpp"
#include "trustroute/topology.hpp"
#include "trustroute/trust.hpp"

namespace trustroute::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

struct RunConfig {
    std::string topology_path = "-";
    Format format = Format::Text;
    int decimals = 2;
    bool strict = true;
    Chaining chaining = Chaining::Edge;
    std::size_t cap = kDefaultPathCap;
    ModelConstants constants;
};

Topology load(const RunConfig& cfg, std::istream& in) {
    std::string text;
    if (cfg.topology_path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream file(cfg.topology_path, std::ios::binary);
        if (!file) throw Error("cannot open topology file '" + cfg.topology_path + "'");
        std::ostringstream ss;
        ss << file.rdbuf();
        text = ss.str();
    }
    try {
        return parse_topology(text, PairPolicy{cfg.strict, kComplementTolerance});
    } catch (const ParseError& e) {
        const std::string where = cfg.topology_path == "-" ? "<stdin>" : cfg.topology_path;
        throw ParseError(e.line(), e.token(), std::string(e.what()).insert(0, where + ": "));
    }
}

Json constants_json(const ModelConstants& c) {
    return Json{{"theta_min", c.theta_min},     {"theta_max", c.theta_max},
                {"theta_ind", c.theta_ind},     {"upsilon_min", c.upsilon_min},
                {"upsilon_max", c.upsilon_max}, {"upsilon_ind", c.upsilon_ind}};
}

Json inputs_json(const RunConfig& cfg) {
    return Json{{"topology", cfg.topology_path},
                {"strict", cfg.strict},
                {"chaining", std::string(to_string(cfg.chaining))},
                {"cap", cfg.cap},
                {"constants", constants_json(cfg.constants)}};
}

void emit_json(std::ostream& out, std::string_view command, Json inputs, Json results) {
    Json doc{{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}};
    out << doc.dump(2) << '\n';
}

std::string num(double x) { return format_number(x); }

// ---------------------------------------------------------------------------

int cmd_check(const RunConfig& cfg, const std::string& spec, const std::string& mode_name,
              std::istream& in, std::ostream& out) {
    const Topology t = load(cfg, in);
    const Path path = parse_path_spec(t, spec);

    std::vector<TestMode> modes;
    if (mode_name == "trust" || mode_name == "both") modes.push_back(TestMode::Trust);
    if (mode_name == "untrust" || mode_name == "both") modes.push_back(TestMode::Untrust);

    std::vector<PathEvaluation> evals;
    for (TestMode m : modes) evals.push_back(evaluate_path(t, path, cfg.constants, m, cfg.chaining));
    bool confidential = true;
    for (const auto& e : evals) confidential = confidential && e.confidential;

    const std::string route = to_string(t, path);
    const int d = cfg.decimals;

    switch (cfg.format) {
    case Format::Text:
        for (const auto& e : evals) {
            const bool trust = e.mode == TestMode::Trust;
            out << (trust ? "trust" : "untrust") << " test of " << route << " ("
                << to_string(cfg.chaining) << " chaining)\n";
            // Each test prints its output vector in its own component order.
            out << "hop  edge  " << (trust ? "[F_T F_U]" : "[F_U F_T]") << "  verdict\n";
            for (std::size_t i = 0; i < e.hops.size(); ++i) {
                const HopResult& h = e.hops[i];
                const double first = trust ? h.f_trust : h.f_untrust;
                const double second = trust ? h.f_untrust : h.f_trust;
                out << (i + 1) << "  " << t.name(path.nodes[i]) << "→" << t.name(path.nodes[i + 1])
                    << "  [" << display_round(first, d) << ' ' << display_round(second, d) << "]  "
                    << to_string(h.verdict) << '\n';
            }
            out << "confidential: " << (e.confidential ? "yes" : "no") << '\n';
        }
        break;
    case Format::Csv:
        out << "mode,hop,from,to,f_trust,f_untrust,verdict,confidential\n";
        for (const auto& e : evals) {
            for (std::size_t i = 0; i < e.hops.size(); ++i) {
                const HopResult& h = e.hops[i];
                out << to_string(e.mode) << ',' << (i + 1) << ',' << t.name(path.nodes[i]) << ','
                    << t.name(path.nodes[i + 1]) << ',' << num(h.f_trust) << ',' << num(h.f_untrust)
                    << ',' << to_string(h.verdict) << ',' << (e.confidential ? "true" : "false")
                    << '\n';
            }
        }
        break;
    case Format::Json: {
        Json inputs = inputs_json(cfg);
        inputs["path"] = route;
        inputs["mode"] = mode_name;
        Json evaluations = Json::array();
        for (const auto& e : evals) {
            Json hops = Json::array();
            for (std::size_t i = 0; i < e.hops.size(); ++i) {
                const HopResult& h = e.hops[i];
                hops.push_back(Json{{"hop", i + 1},
                                    {"from", t.name(path.nodes[i])},
                                    {"to", t.name(path.nodes[i + 1])},
                                    {"f_trust", h.f_trust},
                                    {"f_untrust", h.f_untrust},
                                    {"verdict", std::string(to_string(h.verdict))}});
            }
            evaluations.push_back(Json{{"mode", std::string(to_string(e.mode))},
                                       {"confidential", e.confidential},
                                       {"hops", std::move(hops)}});
        }
        emit_json(out, "check", std::move(inputs),
                  Json{{"confidential", confidential}, {"evaluations", std::move(evaluations)}});
        break;
    }
    }
    return confidential ? kOk : kNegative;
}

int cmd_rank(const RunConfig& cfg, std::optional<std::size_t> top, std::istream& in, std::ostream& out) {
    const Topology t = load(cfg, in);
    std::vector<RankedPath> ranked = rank_paths(t, cfg.constants, cfg.cap);
    if (top && *top < ranked.size()) ranked.resize(*top);
    const int d = cfg.decimals;

    switch (cfg.format) {
    case Format::Text:
        out << "rank  index  path  mean_trust  mean_untrust  class  confidential\n";
        for (const auto& r : ranked) {
            out << r.rank << "  P" << r.enumeration_index << "  " << to_string(t, r.path) << "  "
                << display_round(r.mean_trust, d) << "  " << display_round(r.mean_untrust, d) << "  "
                << to_string(r.trust_class) << "  " << (r.confidential ? "yes" : "no") << '\n';
        }
        break;
    case Format::Csv:
        out << "rank,index,path,mean_trust,mean_untrust,class,confidential\n";
        for (const auto& r : ranked) {
            out << r.rank << ',' << r.enumeration_index << ',' << to_string(t, r.path) << ','
                << num(r.mean_trust) << ',' << num(r.mean_untrust) << ',' << to_string(r.trust_class)
                << ',' << (r.confidential ? "true" : "false") << '\n';
        }
        break;
    case Format::Json: {
        Json inputs = inputs_json(cfg);
        inputs["top"] = top ? Json(*top) : Json(nullptr);
        Json rows = Json::array();
        for (const auto& r : ranked) {
            rows.push_back(Json{{"rank", r.rank},
                                {"index", r.enumeration_index},
                                {"path", to_string(t, r.path)},
                                {"mean_trust", r.mean_trust},
                                {"mean_untrust", r.mean_untrust},
                                {"class", std::string(to_string(r.trust_class))},
                                {"confidential", r.confidential}});
        }
        emit_json(out, "rank", std::move(inputs), Json{{"paths", std::move(rows)}});
        break;
    }
    }
    return kOk;
}

int cmd_route(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    const Topology t = load(cfg, in);
    const RouteResult route = most_likely_route(t, cfg.constants);
    const int d = cfg.decimals;

    double mean = 0.0;
    for (const auto& h : route.hops) mean += h.edge.trust;
    if (!route.hops.empty()) mean /= static_cast<double>(route.hops.size());

    switch (cfg.format) {
    case Format::Text:
        out << (route.reached ? "route " : "partial route ") << to_string(t, route.path) << '\n';
        for (std::size_t i = 0; i < route.hops.size(); ++i) {
            const RouteHop& h = route.hops[i];
            out << "hop " << (i + 1) << "  " << t.name(h.from) << "→" << t.name(h.to) << "  trust "
                << display_round(h.edge.trust, d) << "  [" << display_round(h.result.f_trust, d) << ' '
                << display_round(h.result.f_untrust, d) << "]  " << to_string(h.result.verdict) << '\n';
        }
        if (route.reached) out << "mean trust " << display_round(mean, d) << '\n';
        break;
    case Format::Csv:
        out << "hop,from,to,trust,untrust,f_trust,f_untrust,verdict\n";
        for (std::size_t i = 0; i < route.hops.size(); ++i) {
            const RouteHop& h = route.hops[i];
            out << (i + 1) << ',' << t.name(h.from) << ',' << t.name(h.to) << ',' << num(h.edge.trust)
                << ',' << num(h.edge.untrust) << ',' << num(h.result.f_trust) << ','
                << num(h.result.f_untrust) << ',' << to_string(h.result.verdict) << '\n';
        }
        break;
    case Format::Json: {
        Json hops = Json::array();
        for (std::size_t i = 0; i < route.hops.size(); ++i) {
            const RouteHop& h = route.hops[i];
            hops.push_back(Json{{"hop", i + 1},
                                {"from", t.name(h.from)},
                                {"to", t.name(h.to)},
                                {"trust", h.edge.trust},
                                {"untrust", h.edge.untrust},
                                {"f_trust", h.result.f_trust},
                                {"f_untrust", h.result.f_untrust},
                                {"verdict", std::string(to_string(h.result.verdict))}});
        }
        Json results{{"reached", route.reached},
                     {"path", to_string(t, route.path)},
                     {"stuck_at", route.stuck_at ? Json(t.name(*route.stuck_at)) : Json(nullptr)},
                     {"mean_trust", route.reached ? Json(mean) : Json(nullptr)},
                     {"hops", std::move(hops)}};
        emit_json(out, "route", inputs_json(cfg), std::move(results));
        break;
    }
    }

    if (!route.reached) {
        err << "dead end at node '" << t.name(*route.stuck_at)
            << "': no acceptable unvisited neighbour\n";
        return kNegative;
    }
    return kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const Topology t = load(cfg, in);
    const std::vector<Path> paths = enumerate_paths(t, cfg.cap);

    switch (cfg.format) {
    case Format::Text:
        for (std::size_t i = 0; i < paths.size(); ++i) out << (i + 1) << ' ' << to_string(t, paths[i]) << '\n';
        break;
    case Format::Csv:
        out << "index,path\n";
        for (std::size_t i = 0; i < paths.size(); ++i) out << (i + 1) << ',' << to_string(t, paths[i]) << '\n';
        break;
    case Format::Json: {
        Json rows = Json::array();
        for (std::size_t i = 0; i < paths.size(); ++i) {
            rows.push_back(Json{{"index", i + 1}, {"path", to_string(t, paths[i])}});
        }
        emit_json(out, "enumerate", inputs_json(cfg), Json{{"count", paths.size()}, {"paths", std::move(rows)}});
        break;
    }
    }
    return kOk;
}

int cmd_fixture(std::ostream& out) {
    out << "# Layered 4-3-4 mesh between source S and destination D.\n"
           "# Edges S-1, S-3, 1-7, 3-7, 7-11 and 11-D carry the worked-example values;\n"
           "# every other edge is a (0.5, 0.5) placeholder, below all of those values.\n";
    out << serialize_topology(paper_fixture());
    return kOk;
}

int cmd_simulate(const RunConfig& cfg, std::size_t packets, std::istream& in, std::ostream& out) {
    const Topology t = load(cfg, in);
    const SimReport r = simulate(t, packets, cfg.constants);

    switch (cfg.format) {
    case Format::Text:
        out << "packets_sent " << r.packets_sent << "\ndelivered " << r.delivered << "\ndropped "
            << r.dropped << '\n';
        for (const auto& [p, n] : r.route_usage) out << "route " << to_string(t, p) << ' ' << n << '\n';
        for (const auto& [node, n] : r.drop_points) out << "drop " << node << ' ' << n << '\n';
        break;
    case Format::Csv:
        out << "kind,key,count\n";
        out << "total,packets_sent," << r.packets_sent << '\n';
        out << "total,delivered," << r.delivered << '\n';
        out << "total,dropped," << r.dropped << '\n';
        for (const auto& [p, n] : r.route_usage) out << "route," << to_string(t, p) << ',' << n << '\n';
        for (const auto& [node, n] : r.drop_points) out << "drop," << node << ',' << n << '\n';
        break;
    case Format::Json: {
        Json inputs = inputs_json(cfg);
        inputs["packets"] = packets;
        Json usage = Json::object();
        for (const auto& [p, n] : r.route_usage) usage[to_string(t, p)] = n;
        Json drops = Json::object();
        for (const auto& [node, n] : r.drop_points) drops[node] = n;
        emit_json(out, "simulate", std::move(inputs),
                  Json{{"packets_sent", r.packets_sent},
                       {"delivered", r.delivered},
                       {"dropped", r.dropped},
                       {"route_usage", std::move(usage)},
                       {"drop_points", std::move(drops)}});
        break;
    }
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuzzy trust propagation and route selection over P2P topologies", "trustroute"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "text";
    std::string chaining = "edge";
    app.add_option("--topology", cfg.topology_path, "Topology file ('-' or omitted: standard input)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--decimals", cfg.decimals, "Decimal places for text output (truncated)")
        ->check(CLI::Range(0, 12));
    app.add_flag("--strict,!--no-strict", cfg.strict, "Require complementary trust/untrust pairs");
    app.add_option("--chaining", chaining, "Hop chaining for check")->check(CLI::IsMember({"edge", "output"}));
    app.add_option("--cap", cfg.cap, "Maximum number of enumerated paths")->check(CLI::PositiveNumber);
    const auto unit = CLI::Range(0.0, 1.0);
    app.add_option("--theta-min", cfg.constants.theta_min)->check(unit);
    app.add_option("--theta-max", cfg.constants.theta_max)->check(unit);
    app.add_option("--theta-ind", cfg.constants.theta_ind)->check(unit);
    app.add_option("--upsilon-min", cfg.constants.upsilon_min)->check(unit);
    app.add_option("--upsilon-max", cfg.constants.upsilon_max)->check(unit);
    app.add_option("--upsilon-ind", cfg.constants.upsilon_ind)->check(unit);

    std::string path_spec;
    std::string mode = "trust";
    auto* check = app.add_subcommand("check", "Run the per-hop trust/untrust test along one path");
    check->add_option("path", path_spec, "Comma-separated node list, e.g. S,3,7,11,D")->required();
    check->add_option("--mode", mode)->check(CLI::IsMember({"trust", "untrust", "both"}));

    std::optional<std::size_t> top;
    auto* rank = app.add_subcommand("rank", "Rank every path by mean trust");
    rank->add_option("--top", top, "Show only the first N rows")->check(CLI::PositiveNumber);

    auto* route = app.add_subcommand("route", "Select the greedy most-likely route");
    auto* enumerate = app.add_subcommand("enumerate", "List every simple source-to-destination path");
    auto* fixture = app.add_subcommand("fixture", "Print the reference 4-3-4 topology");

    std::size_t packets = 1;
    auto* sim = app.add_subcommand("simulate", "Forward packets along the greedy route");
    sim->add_option("--packets", packets)->check(CLI::PositiveNumber);

    std::vector<std::string> argv_store{"trustroute"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    cfg.format = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Text;
    cfg.chaining = chaining == "output" ? Chaining::Output : Chaining::Edge;

    try {
        if (*check) return cmd_check(cfg, path_spec, mode, in, out);
        if (*rank) return cmd_rank(cfg, top, in, out);
        if (*route) return cmd_route(cfg, in, out, err);
        if (*enumerate) return cmd_enumerate(cfg, in, out);
        if (*fixture) return cmd_fixture(out);
        if (*sim) return cmd_simulate(cfg, packets, in, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace trustroute::cli
