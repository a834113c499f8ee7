#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>

#include "pgr/document.hpp"
#include "pgr/dot.hpp"
#include "pgr/server.hpp"

using namespace pgr;

namespace {

struct Input {
    std::string path;
    std::string kind;  // empty: guess from the extension
    std::string mode = "global";
};

Document load(const Input& in) {
    std::string text = read_file(in.path);
    DocKind kind = in.kind.empty() ? guess_doc_kind(in.path, text) : doc_kind_from_string(in.kind);
    return load_document(kind, text, mode_from_string(in.mode));
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error("cannot write '" + path + "'");
}

void add_input(CLI::App* cmd, Input& in, const std::string& what) {
    cmd->add_option("file", in.path, what)->required();
    cmd->add_option("--kind", in.kind, "proof, term, graph or trace (default: from the extension)")
        ->check(CLI::IsMember({"proof", "term", "graph", "trace"}));
}

int cmd_check(const Input& in) {
    Document d = load(in);
    switch (d.kind) {
        case DocKind::proof: std::cout << check_proof(d.proof).str() << "\n"; break;
        case DocKind::term: std::cout << d.term->str() << " : linear\n"; break;
        case DocKind::graph:
            d.graph.validate();
            std::cout << "graph: " << d.graph.node_count() << " nodes, " << d.graph.interface().size()
                      << " free ports\n";
            break;
        case DocKind::trace:
            std::cout << "trace: " << d.trace->size() << " steps replayed, final " << content_hash(d.graph) << "\n";
            break;
    }
    return 0;
}

int main_impl(int argc, char** argv) {
    CLI::App app{"Port-graph rewriting for natural deduction proofs and linear lambda terms", "pgr"};
    app.require_subcommand(1);

    Input in;
    std::string format = "json", output, trace_out, strategy = "lowest-id", direction;
    std::vector<std::string> rules;
    std::size_t step_limit = 10000;
    int port = 8080;
    std::string host = "127.0.0.1";

    auto* check = app.add_subcommand("check", "Parse and check a proof, term, graph or trace");
    add_input(check, in, "input file");

    auto* tr = app.add_subcommand("translate", "Translate to a port graph");
    add_input(tr, in, "input file");
    tr->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    tr->add_option("-o,--output", output, "output file (default: stdout)");

    auto* red = app.add_subcommand("reduce", "Normalise the graph of a proof or term");
    add_input(red, in, "input file");
    red->add_option("--strategy", strategy, "lowest-id, innermost or outermost")
        ->check(CLI::IsMember({"lowest-id", "innermost", "outermost"}));
    red->add_option("--mode", in.mode, "global or small-step")->check(CLI::IsMember({"global", "small-step"}));
    red->add_option("--rules", rules, "only rules matching these names (trailing * allowed)");
    red->add_option("--step-limit", step_limit, "give up after this many steps")->check(CLI::PositiveNumber);
    red->add_option("--trace", trace_out, "write the trace document here");
    red->add_option("-o,--output", output, "write the final graph here");

    auto* ren = app.add_subcommand("rename", "Curry-Howard renaming between logic and lambda graphs");
    add_input(ren, in, "graph, proof or term file");
    ren->add_option("--to", direction, "lambda or logic (default: the other side)")
        ->check(CLI::IsMember({"lambda", "logic"}));
    ren->add_option("-o,--output", output, "output file (default: stdout)");

    auto* serve = app.add_subcommand("serve", "Serve the HTTP session API");
    serve->add_option("--port", port, "TCP port (0: any free port)")->check(CLI::Range(0, 65535));
    serve->add_option("--host", host, "bind address");
    serve->add_option("--mode", in.mode, "default mode for loaded proofs")
        ->check(CLI::IsMember({"global", "small-step"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    if (*check) return cmd_check(in);
    if (*tr) {
        Document d = load(in);
        write_out(output, format == "dot" ? to_dot(d.graph) : graph_to_text(d.graph));
        return 0;
    }
    if (*red) {
        Document d = load(in);
        Strategy s;
        s.kind = strategy_from_string(strategy);
        s.rule_filter = rules;
        s.step_limit = step_limit;
        Trace t = normalise(d.graph, RuleCatalogue::from_label(d.catalogue), s);
        std::cout << "steps: " << t.size() << "\n";
        if (t.outcome == Outcome::step_limit) std::cout << "step limit reached before normal form\n";
        if (!trace_out.empty()) write_out(trace_out, trace_to_json(t).dump(2) + "\n");
        if (!output.empty()) write_out(output, graph_to_text(t.final_graph));
        return 0;
    }
    if (*ren) {
        Document d = load(in);
        RenameDirection dir;
        if (!direction.empty()) dir = direction == "lambda" ? RenameDirection::to_lambda : RenameDirection::to_logic;
        else if (d.graph.count_named("lam") + d.graph.count_named("app") > 0) dir = RenameDirection::to_logic;
        else dir = RenameDirection::to_lambda;
        write_out(output, graph_to_text(curry_howard_rename(d.graph, dir)));
        return 0;
    }
    if (*serve) {
        static Server server(mode_from_string(in.mode));
        std::signal(SIGINT, [](int) { server.stop(); });
        std::signal(SIGTERM, [](int) { server.stop(); });
        std::cerr << "serving on " << host << ":" << port << "\n";
        server.listen(host, port);
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return main_impl(argc, argv);
    } catch (const pgr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::ordered_json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
