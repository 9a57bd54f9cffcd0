#include "lpa/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lpa {

namespace {

using json = nlohmann::ordered_json;

json parse_text(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* what) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : allowed) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw std::invalid_argument(std::string("unknown key \"") + key + "\" in " + what);
        }
    }
}

MultiGraph graph_from(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph JSON must be an object");
    reject_unknown_keys(j, {"vertices", "edges"}, "graph JSON");
    if (!j.contains("vertices") || !j.contains("edges")) {
        throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
    }
    if (!j["vertices"].is_array() || !j["edges"].is_array()) {
        throw std::invalid_argument("graph JSON fields must be arrays");
    }
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw std::invalid_argument("vertex names must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::tuple<std::string, std::string, long long>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
            !e[2].is_number_integer()) {
            throw std::invalid_argument("each edge must be [src, dst, mult]");
        }
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>(),
                           e[2].get<long long>());
    }
    return MultiGraph::from_edges(std::move(vertices), edges);
}

json graph_json(const MultiGraph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const auto& [src, dst, m] : g.edge_records()) {
        edges.push_back(json::array({src, dst, m}));
    }
    j["edges"] = std::move(edges);
    return j;
}

IntMatrix matrix_from(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("matrix JSON must be an object");
    reject_unknown_keys(j, {"rows", "cols", "entries"}, "matrix JSON");
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw std::invalid_argument("matrix JSON needs \"rows\", \"cols\" and \"entries\"");
    }
    long long rows = j["rows"].get<long long>();
    long long cols = j["cols"].get<long long>();
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows)) {
        throw std::invalid_argument("matrix entries must hold one array per row");
    }
    std::vector<std::vector<long long>> data;
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
            throw std::invalid_argument("matrix row length does not match cols");
        }
        std::vector<long long> r;
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw std::invalid_argument("matrix entries are integers");
            r.push_back(e.get<long long>());
        }
        data.push_back(std::move(r));
    }
    return IntMatrix::from_rows(data);
}

json matrix_json(const IntMatrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

MoveStep step_from(const json& j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw std::invalid_argument("certificate step must be an object with a \"kind\"");
    }
    MoveKind kind = move_kind_from_name(j["kind"].get<std::string>());
    switch (kind) {
        case MoveKind::Shift:
        case MoveKind::Unshift: {
            reject_unknown_keys(j, {"kind", "v", "w"}, "shift step");
            if (!j.contains("v") || !j.contains("w")) {
                throw std::invalid_argument("shift step needs \"v\" and \"w\"");
            }
            std::string v = j["v"].get<std::string>();
            std::string w = j["w"].get<std::string>();
            return kind == MoveKind::Shift ? MoveStep::shift(v, w) : MoveStep::unshift(v, w);
        }
        case MoveKind::Outsplit: {
            reject_unknown_keys(j, {"kind", "vertex", "classes"}, "outsplit step");
            if (!j.contains("vertex") || !j.contains("classes")) {
                throw std::invalid_argument("outsplit step needs \"vertex\" and \"classes\"");
            }
            PartitionSpec spec;
            spec.vertex = j["vertex"].get<std::string>();
            for (const auto& cls : j["classes"]) {
                spec.classes.push_back(cls.get<std::vector<long long>>());
            }
            return MoveStep::outsplit(std::move(spec));
        }
        case MoveKind::Amalgamate: {
            reject_unknown_keys(j, {"kind", "vertices"}, "amalgamate step");
            if (!j.contains("vertices")) {
                throw std::invalid_argument("amalgamate step needs \"vertices\"");
            }
            return MoveStep::amalgamate(j["vertices"].get<std::vector<std::string>>());
        }
    }
    throw std::logic_error("unreachable move kind");
}

json step_json(const MoveStep& s) {
    json j;
    j["kind"] = move_kind_name(s.kind);
    switch (s.kind) {
        case MoveKind::Shift:
        case MoveKind::Unshift:
            j["v"] = s.v;
            j["w"] = s.w;
            break;
        case MoveKind::Outsplit:
            j["vertex"] = s.partition.vertex;
            j["classes"] = s.partition.classes;
            break;
        case MoveKind::Amalgamate:
            j["vertices"] = s.group;
            break;
    }
    return j;
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace

MultiGraph parse_graph(std::string_view text) { return graph_from(parse_text(text)); }

std::string graph_to_json(const MultiGraph& g, bool pretty) {
    return dump(graph_json(g), pretty);
}

std::string graph_to_dot(const MultiGraph& g) {
    std::ostringstream os;
    os << "digraph {\n";
    for (const auto& v : g.vertices()) {
        os << "  \"" << v << "\";\n";
    }
    for (const auto& [src, dst, m] : g.edge_records()) {
        os << "  \"" << src << "\" -> \"" << dst << "\"";
        if (m > 1) os << " [label=" << m << "]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

IntMatrix matrix_from_json(std::string_view text) { return matrix_from(parse_text(text)); }

std::string matrix_to_json(const IntMatrix& m, bool pretty) {
    return dump(matrix_json(m), pretty);
}

std::string smith_to_json(const SmithForm& s, bool pretty) {
    json j;
    j["D"] = matrix_json(s.d);
    j["P"] = matrix_json(s.p);
    j["Q"] = matrix_json(s.q);
    return dump(j, pretty);
}

std::string k0_to_json(const PointedK0& k0, bool pretty) {
    json j;
    j["rank"] = k0.group.free_rank;
    j["factors"] = k0.group.invariant_factors;
    j["unit"] = k0.unit_class;
    return dump(j, pretty);
}

std::string property_report_to_json(const PropertyReport& r, bool pretty) {
    json j;
    j["sinks"] = r.sinks;
    j["sources"] = r.sources;
    j["condition_L"] = r.condition_L;
    j["condition_sing"] = r.condition_sing;
    j["cofinal"] = r.cofinal;
    j["all_connect_to_cycle"] = r.all_connect_to_cycle;
    j["purely_infinite_simple"] = r.purely_infinite_simple;
    return dump(j, pretty);
}

MoveCertificate certificate_from_json(std::string_view text) {
    json j = parse_text(text);
    if (!j.is_object()) throw std::invalid_argument("certificate JSON must be an object");
    reject_unknown_keys(j, {"source", "steps", "target"}, "certificate JSON");
    if (!j.contains("source") || !j.contains("steps") || !j.contains("target")) {
        throw std::invalid_argument("certificate JSON needs \"source\", \"steps\", \"target\"");
    }
    MultiGraph source = graph_from(j["source"]);
    MultiGraph target = graph_from(j["target"]);
    std::vector<MoveStep> steps;
    for (const auto& s : j["steps"]) steps.push_back(step_from(s));
    return MoveCertificate{std::move(source), std::move(steps), std::move(target)};
}

std::string certificate_to_json(const MoveCertificate& c, bool pretty) {
    json j;
    j["source"] = graph_json(c.source);
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back(step_json(s));
    j["steps"] = std::move(steps);
    j["target"] = graph_json(c.target);
    return dump(j, pretty);
}

std::string verify_report_to_json(const VerifyReport& r, bool pretty) {
    json j;
    j["valid"] = r.valid;
    j["steps"] = r.steps;
    j["field_conditional"] = r.field_conditional;
    json failures = json::array();
    for (const auto& f : r.failures) {
        json fj;
        fj["step"] = f.step;
        fj["check"] = f.check;
        fj["detail"] = f.detail;
        failures.push_back(std::move(fj));
    }
    j["failures"] = std::move(failures);
    return dump(j, pretty);
}

std::string table_to_json(const ClassificationTable& t, bool pretty) {
    json j;
    json classes = json::array();
    for (const auto& c : t.classes) {
        json cj;
        cj["k0"] = json::parse(k0_to_json(c.representative));
        cj["size"] = c.members.size();
        json graphs = json::array();
        for (const auto& g : c.members) graphs.push_back(graph_json(g));
        cj["graphs"] = std::move(graphs);
        classes.push_back(std::move(cj));
    }
    j["classes"] = std::move(classes);
    return dump(j, pretty);
}

}  // namespace lpa
