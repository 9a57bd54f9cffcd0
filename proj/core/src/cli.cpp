#include "lpa/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpa/errors.hpp"
#include "lpa/explorer.hpp"
#include "lpa/invariants.hpp"
#include "lpa/json_io.hpp"
#include "lpa/pipeline.hpp"

namespace lpa {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::vector<long long>> parse_classes(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
        throw std::invalid_argument("--classes expects a JSON array of count vectors");
    }
    return j.get<std::vector<std::vector<long long>>>();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Classification toolkit for Leavitt path algebras of finite graphs"};
    app.name("lpaclass");
    app.fallthrough();
    app.require_subcommand(1);

    std::string output_format = "json";
    app.add_option("--output", output_format, "Output format")
        ->check(CLI::IsMember({"json", "pretty"}));

    std::string graph_path, graph_path2, cert_path, matrix_path;
    std::string opt_v, opt_w, opt_vertex, opt_classes, opt_vertices_list;
    long long opt_n = 0, opt_k = 0, opt_t = 0, opt_d = 0, opt_count = 0;
    SearchBounds bounds;
    bool parallel = false;
    bool dot = false;
    bool allow_infinite_field = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "Structural properties of a graph");
    analyze_cmd->add_option("graph", graph_path, "Graph JSON file (- for stdin)")->required();

    auto* k0_cmd = app.add_subcommand("k0", "Pointed K0 data of a graph");
    k0_cmd->add_option("graph", graph_path, "Graph JSON file (- for stdin)")->required();

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf_cmd->add_option("matrix", matrix_path, "Matrix JSON file (- for stdin)")->required();

    auto* move_cmd = app.add_subcommand("move", "Apply one graph move");
    move_cmd->require_subcommand(1);
    auto* shift_cmd = move_cmd->add_subcommand("shift", "Shift move");
    auto* unshift_cmd = move_cmd->add_subcommand("unshift", "Inverse shift move");
    auto* outsplit_cmd = move_cmd->add_subcommand("outsplit", "Out-split one vertex");
    auto* amalg_cmd = move_cmd->add_subcommand("amalgamate", "Merge out-split vertices");
    auto* maxsplit_cmd = move_cmd->add_subcommand("maxsplit", "Maximal out-split");
    for (auto* c : {shift_cmd, unshift_cmd}) {
        c->add_option("--v", opt_v, "Vertex whose out-row changes")->required();
        c->add_option("--w", opt_w, "Hooked vertex")->required();
    }
    outsplit_cmd->add_option("--vertex", opt_vertex, "Vertex to split")->required();
    outsplit_cmd->add_option("--classes", opt_classes, "Partition classes as JSON count vectors")
        ->required();
    amalg_cmd->add_option("--vertices", opt_vertices_list, "Comma-separated vertex group")
        ->required();
    for (auto* c : {shift_cmd, unshift_cmd, outsplit_cmd, amalg_cmd, maxsplit_cmd}) {
        c->add_option("graph", graph_path, "Graph JSON file (- for stdin)")->required();
        c->add_flag("--dot", dot, "Emit the resulting graph as DOT");
    }

    auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate the parallel-edge-free catalog");
    enum_cmd->add_option("--vertices", opt_count, "Vertex count")->required();
    enum_cmd->add_flag("--parallel", parallel, "Fan candidate filtering out over threads");
    enum_cmd->add_flag("--dot", dot, "Emit graphs as DOT");

    auto* classify_cmd = app.add_subcommand("classify", "Catalog partitioned by pointed K0");
    classify_cmd->add_option("--vertices", opt_count, "Vertex count")->required();

    auto* find_cmd = app.add_subcommand("find-path", "Search for a move certificate");
    find_cmd->add_option("from", graph_path, "Source graph JSON (- for stdin)")->required();
    find_cmd->add_option("to", graph_path2, "Target graph JSON")->required();
    find_cmd->add_option("--max-vertices", bounds.max_vertices, "Vertex bound");
    find_cmd->add_option("--max-mult", bounds.max_multiplicity, "Multiplicity bound");
    find_cmd->add_option("--max-steps", bounds.max_steps, "Step bound");

    auto* certify_cmd = app.add_subcommand("certify", "Build a constructive certificate");
    certify_cmd->require_subcommand(1);
    auto* fish_cmd = certify_cmd->add_subcommand("fish", "R_n^d to R_n when gcd(d, n-1) = 1");
    fish_cmd->add_option("--n", opt_n)->required();
    fish_cmd->add_option("--d", opt_d)->required();
    auto* stab_cmd = certify_cmd->add_subcommand("stabilize", "R_n^{k+t(n-1)} to R_n^k");
    stab_cmd->add_option("--n", opt_n)->required();
    stab_cmd->add_option("--k", opt_k)->required();
    stab_cmd->add_option("--t", opt_t)->required();
    auto* div_cmd = certify_cmd->add_subcommand("divides", "R_n^k to R_n when k divides n");
    div_cmd->add_option("--n", opt_n)->required();
    div_cmd->add_option("--k", opt_k)->required();
    auto* tails_cmd = certify_cmd->add_subcommand("open-tails", "R_n^k through A_n^k to B_n^k");
    tails_cmd->add_option("--n", opt_n)->required();
    tails_cmd->add_option("--k", opt_k)->required();
    auto* expand_cmd = certify_cmd->add_subcommand("expand", "Grow to a given vertex count");
    expand_cmd->add_option("graph", graph_path, "Graph JSON file (- for stdin)")->required();
    expand_cmd->add_option("--vertices", opt_count, "Target vertex count")->required();
    auto* desource_cmd = certify_cmd->add_subcommand("remove-sources", "Shift sources onto cycles");
    desource_cmd->add_option("graph", graph_path, "Graph JSON file (- for stdin)")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Replay and check a certificate");
    verify_cmd->add_option("certificate", cert_path, "Certificate JSON file (- for stdin)")
        ->required();
    verify_cmd->add_flag("--allow-infinite-field", allow_infinite_field,
                         "Relax the Condition (L) check at shift steps");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help() << std::flush;
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    bool pretty = output_format == "pretty";
    try {
        if (*analyze_cmd) {
            MultiGraph g = parse_graph(read_input(graph_path, in));
            out << property_report_to_json(analyze(g), pretty) << "\n";
        } else if (*k0_cmd) {
            MultiGraph g = parse_graph(read_input(graph_path, in));
            out << k0_to_json(k0_data(g), pretty) << "\n";
        } else if (*snf_cmd) {
            IntMatrix m = matrix_from_json(read_input(matrix_path, in));
            out << smith_to_json(smith_normal_form(m), pretty) << "\n";
        } else if (*move_cmd) {
            MultiGraph g = parse_graph(read_input(graph_path, in));
            std::vector<MoveStep> steps;
            if (*shift_cmd) {
                steps.push_back(MoveStep::shift(opt_v, opt_w));
            } else if (*unshift_cmd) {
                steps.push_back(MoveStep::unshift(opt_v, opt_w));
            } else if (*outsplit_cmd) {
                steps.push_back(MoveStep::outsplit({opt_vertex, parse_classes(opt_classes)}));
            } else if (*amalg_cmd) {
                steps.push_back(MoveStep::amalgamate(split_commas(opt_vertices_list)));
            } else if (*maxsplit_cmd) {
                steps = maximal_outsplit_steps(g);
            }
            MultiGraph result = g;
            for (const auto& s : steps) result = apply_step(result, s);
            if (dot) {
                out << graph_to_dot(result);
            } else {
                out << certificate_to_json(MoveCertificate{g, steps, result}, pretty) << "\n";
            }
        } else if (*enum_cmd) {
            auto graphs = enumerate_pis_sing(opt_count, parallel);
            if (dot) {
                for (const auto& g : graphs) out << graph_to_dot(g);
            } else {
                nlohmann::ordered_json j;
                j["vertices"] = opt_count;
                j["count"] = graphs.size();
                auto list = nlohmann::ordered_json::array();
                for (const auto& g : graphs) {
                    list.push_back(nlohmann::ordered_json::parse(graph_to_json(g)));
                }
                j["graphs"] = std::move(list);
                out << (pretty ? j.dump(2) : j.dump()) << "\n";
            }
        } else if (*classify_cmd) {
            auto table = classify(enumerate_pis_sing(opt_count));
            out << table_to_json(table, pretty) << "\n";
        } else if (*find_cmd) {
            MultiGraph g1 = parse_graph(read_input(graph_path, in));
            MultiGraph g2 = parse_graph(read_input(graph_path2, in));
            FindPathResult res = find_path(g1, g2, bounds);
            if (res.certificate) {
                out << certificate_to_json(*res.certificate, pretty) << "\n";
            } else {
                nlohmann::ordered_json j;
                j["found"] = false;
                j["reason"] = res.reason;
                out << (pretty ? j.dump(2) : j.dump()) << "\n";
            }
        } else if (*certify_cmd) {
            MoveCertificate cert =
                *fish_cmd     ? cert_fish(opt_n, opt_d)
                : *stab_cmd   ? cert_stabilize(opt_n, opt_k, opt_t)
                : *div_cmd    ? cert_divides(opt_n, opt_k)
                : *tails_cmd  ? cert_open_tails(opt_n, opt_k)
                : *expand_cmd ? cert_expand(parse_graph(read_input(graph_path, in)), opt_count)
                                    .second
                              : cert_remove_sources(parse_graph(read_input(graph_path, in)))
                                    .second;
            out << certificate_to_json(cert, pretty) << "\n";
        } else if (*verify_cmd) {
            MoveCertificate cert = certificate_from_json(read_input(cert_path, in));
            VerifyOptions opts;
            opts.allow_infinite_field = allow_infinite_field;
            out << verify_report_to_json(verify_certificate(cert, opts), pretty) << "\n";
        }
    } catch (const std::exception& e) {
        nlohmann::ordered_json j;
        j["error"] = e.what();
        out << j.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace lpa
