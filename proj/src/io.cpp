#include "curv/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "curv/constructions.hpp"
#include "curv/error.hpp"

namespace curv {

namespace {

bool parse_int(std::string_view token, long long& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

GraphDocument parse_json_document(std::string_view bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("JSON graph needs an integer field \"n\"", 1);
    long long n = doc["n"].get<long long>();
    if (n < 0 || n > 50'000'000) throw ParseError("vertex count out of range", 1);
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array", 1);
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw ParseError("each edge must be a pair of integers", 1);
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    GraphDocument out;
    out.graph = Graph::from_edge_list(static_cast<int>(n), edges);
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array() || static_cast<long long>(doc["labels"].size()) != n)
            throw ParseError("\"labels\" must list one string per vertex", 1);
        for (const auto& label : doc["labels"]) {
            if (!label.is_string()) throw ParseError("labels must be strings", 1);
            out.labels.push_back(label.get<std::string>());
        }
    }
    return out;
}

GraphDocument parse_edge_list(std::string_view bytes) {
    std::optional<long long> declared_n;
    std::vector<Edge> edges;
    int max_seen = -1;

    std::istringstream in{std::string(bytes)};
    std::string raw;
    int line_no = 0;
    bool saw_content = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::vector<std::string> tokens;
        for (std::string tok; line >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (!saw_content && tokens.size() == 2 && tokens[0] == "n") {
            long long n;
            if (!parse_int(tokens[1], n) || n < 0)
                throw ParseError("bad vertex count '" + tokens[1] + "'", line_no);
            declared_n = n;
            saw_content = true;
            continue;
        }
        saw_content = true;
        if (tokens.size() != 2)
            throw ParseError("expected 'u v', got " + std::to_string(tokens.size()) + " token(s)",
                             line_no);
        long long u, v;
        if (!parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            throw ParseError("expected integer endpoints, got '" + tokens[0] + " " + tokens[1] +
                                 "'",
                             line_no);
        if (u < 0 || v < 0) throw ParseError("negative vertex index", line_no);
        if (u > 50'000'000 || v > 50'000'000)
            throw ParseError("vertex index out of range", line_no);
        if (u == v)
            throw Error(ErrorCode::self_loop,
                        "line " + std::to_string(line_no) + ": self loop at vertex " +
                            std::to_string(u));
        if (declared_n && (u >= *declared_n || v >= *declared_n))
            throw Error(ErrorCode::index_out_of_range,
                        "line " + std::to_string(line_no) + ": endpoint " +
                            std::to_string(std::max(u, v)) + " >= n = " +
                            std::to_string(*declared_n));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_seen = std::max(max_seen, static_cast<int>(std::max(u, v)));
    }
    long long n = declared_n ? *declared_n : max_seen + 1;
    GraphDocument out;
    out.graph = Graph::from_edge_list(static_cast<int>(n), edges);
    return out;
}

}  // namespace

GraphDocument parse_graph(std::string_view bytes) {
    for (char c : bytes) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_json_document(bytes);
        break;
    }
    return parse_edge_list(bytes);
}

std::string render_edge_list(const Graph& g, std::string_view comment) {
    std::string out;
    if (!comment.empty()) {
        out += "# ";
        out += comment;
        out += '\n';
    }
    out += "n " + std::to_string(g.vertex_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph build_generator(std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view head = spec.substr(0, colon);
    std::string_view payload = colon == std::string_view::npos ? "" : spec.substr(colon + 1);

    auto bad = [&](const std::string& why) {
        return Error(ErrorCode::param_out_of_range,
                     "bad generator spec '" + std::string(spec) + "': " + why);
    };
    auto int_arg = [&](std::string_view token) {
        long long value;
        if (!parse_int(token, value)) throw bad("'" + std::string(token) + "' is not an integer");
        return value;
    };
    auto split_payload = [&](std::size_t expected) {
        std::vector<std::string_view> parts;
        std::string_view rest = payload;
        while (!rest.empty()) {
            auto next = rest.find(':');
            parts.push_back(rest.substr(0, next));
            if (next == std::string_view::npos) break;
            rest = rest.substr(next + 1);
        }
        if (parts.size() != expected)
            throw bad("expected " + std::to_string(expected) + " parameter(s)");
        return parts;
    };

    if (head == "complete") return complete(static_cast<int>(int_arg(split_payload(1)[0])));
    if (head == "cyclic") return cyclic(static_cast<int>(int_arg(split_payload(1)[0])));
    if (head == "discrete") return discrete(static_cast<int>(int_arg(split_payload(1)[0])));
    if (head == "wheel") return wheel(static_cast<int>(int_arg(split_payload(1)[0])));
    if (head == "cross") return cross_polytope(static_cast<int>(int_arg(split_payload(1)[0])));
    if (head == "stellated-cube")
        return stellated_cube_boundary(static_cast<int>(int_arg(split_payload(1)[0])));
    if (head == "platonic") return platonic(split_payload(1)[0]);
    if (head == "tree") {
        auto parts = split_payload(2);
        return tree_random(static_cast<int>(int_arg(parts[0])),
                           static_cast<std::uint64_t>(int_arg(parts[1])));
    }
    if (head == "er") {
        auto parts = split_payload(3);
        double p;
        auto [ptr, ec] =
            std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), p);
        if (ec != std::errc() || ptr != parts[1].data() + parts[1].size())
            throw bad("'" + std::string(parts[1]) + "' is not a probability");
        return erdos_renyi(static_cast<int>(int_arg(parts[0])), p,
                           static_cast<std::uint64_t>(int_arg(parts[2])));
    }
    if (head == "rect-hexeract") {
        if (!payload.empty()) throw bad("takes no parameters");
        return rectified_hexeract();
    }
    if (head == "600-cell") {
        if (!payload.empty()) throw bad("takes no parameters");
        return cell_600();
    }
    if (head == "bipyramid") {
        if (payload.empty()) throw bad("needs a nested spec");
        return bipyramid(build_generator(payload));
    }
    if (head == "pyramid") {
        if (payload.empty()) throw bad("needs a nested spec");
        return pyramid(build_generator(payload));
    }
    throw Error(ErrorCode::unknown_name,
                "unknown generator '" + std::string(head) + "'");
}

namespace {

const char* method_name(CurvatureMethod m) {
    return m == CurvatureMethod::general ? "general" : "euler-form";
}

}  // namespace

nlohmann::ordered_json to_json(const CurvatureReport& report) {
    nlohmann::ordered_json j;
    j["report"] = "curvature";
    j["method"] = method_name(report.method);
    if (report.dimension_used) j["dimension"] = *report.dimension_used;
    j["vertex_count"] = report.per_vertex.size();
    nlohmann::ordered_json per = nlohmann::ordered_json::array();
    for (const auto& k : report.per_vertex) per.push_back(to_fraction_string(k));
    j["per_vertex"] = std::move(per);
    nlohmann::ordered_json classes = nlohmann::ordered_json::object();
    for (const auto& [value, count] : report.class_multiplicities)
        classes[to_fraction_string(value)] = count;
    j["classes"] = std::move(classes);
    j["total"] = to_fraction_string(report.total);
    j["euler_characteristic"] = report.euler_characteristic;
    j["gbc_holds"] = report.gbc_holds;
    return j;
}

CurvatureReport curvature_report_from_json(const nlohmann::json& j) {
    CurvatureReport report;
    std::string method = j.at("method").get<std::string>();
    if (method == "general") {
        report.method = CurvatureMethod::general;
    } else if (method == "euler-form") {
        report.method = CurvatureMethod::euler_form;
    } else {
        throw ParseError("unknown curvature method '" + method + "'", 1);
    }
    if (j.contains("dimension")) report.dimension_used = j.at("dimension").get<int>();
    for (const auto& k : j.at("per_vertex"))
        report.per_vertex.push_back(rational_from_string(k.get<std::string>()));
    for (const auto& [key, count] : j.at("classes").items())
        report.class_multiplicities[rational_from_string(key)] = count.get<std::int64_t>();
    report.total = rational_from_string(j.at("total").get<std::string>());
    report.euler_characteristic = j.at("euler_characteristic").get<long long>();
    report.gbc_holds = j.at("gbc_holds").get<bool>();
    return report;
}

nlohmann::ordered_json to_json(const ValidationCertificate& cert) {
    nlohmann::ordered_json j;
    j["report"] = "validation";
    j["claimed_dimension"] = cert.claimed_d;
    j["valid"] = cert.valid;
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const auto& violation : cert.violations) {
        nlohmann::ordered_json v;
        v["path"] = violation.path;
        v["rule"] = std::string(rule_name(violation.rule));
        v["detail"] = violation.detail;
        violations.push_back(std::move(v));
    }
    j["violations"] = std::move(violations);
    return j;
}

ValidationCertificate certificate_from_json(const nlohmann::json& j) {
    ValidationCertificate cert;
    cert.claimed_d = j.at("claimed_dimension").get<int>();
    cert.valid = j.at("valid").get<bool>();
    for (const auto& v : j.at("violations")) {
        Violation violation;
        violation.path = v.at("path").get<std::vector<int>>();
        auto rule = rule_from_name(v.at("rule").get<std::string>());
        if (!rule) throw ParseError("unknown rule '" + v.at("rule").get<std::string>() + "'", 1);
        violation.rule = *rule;
        violation.detail = v.at("detail").get<std::string>();
        cert.violations.push_back(std::move(violation));
    }
    return cert;
}

std::string render_tsv(const Graph& g, const std::vector<FVector>& profiles,
                       const CurvatureReport& report) {
    int top = 0;
    if (report.method == CurvatureMethod::euler_form) {
        top = *report.dimension_used - 1;
    } else {
        for (const auto& f : profiles) top = std::max(top, f.max_dim());
    }
    std::string out = "vertex\tdegree";
    for (int k = 1; k <= top; ++k) out += "\tV" + std::to_string(k);
    out += "\tK\n";
    for (int p = 0; p < g.vertex_count(); ++p) {
        out += std::to_string(p) + "\t" + std::to_string(g.degree(p));
        for (int k = 1; k <= top; ++k)
            out += "\t" + std::to_string(profiles[static_cast<std::size_t>(p)].count(k));
        out += "\t" + to_fraction_string(report.per_vertex[static_cast<std::size_t>(p)]) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// command entry points
// ---------------------------------------------------------------------------

namespace {

GraphDocument load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::parse_error, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

}  // namespace

int cmd_gen(std::string_view spec, const std::string& out_path, std::ostream& err) {
    try {
        Graph g = build_generator(spec);
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            err << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
        out << render_edge_list(g, spec);
        return out.good() ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_analyze(const std::string& in_path, const AnalyzeOptions& options, std::ostream& out,
                std::ostream& err) {
    try {
        if (options.method == CurvatureMethod::euler_form && !options.dim) {
            err << "error: --method euler-form requires --dim\n";
            return 2;
        }
        GraphDocument doc = load_graph_file(in_path);
        auto profiles = sphere_profiles(doc.graph);
        CurvatureReport report =
            curvature_report(doc.graph, profiles, options.method, options.dim);
        if (options.format == ReportFormat::json) {
            out << to_json(report).dump(2) << "\n";
        } else {
            out << render_tsv(doc.graph, profiles, report);
        }
        if (options.method == CurvatureMethod::general && !report.gbc_holds) return 1;
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_dim(const std::string& in_path, bool per_vertex, std::ostream& out, std::ostream& err) {
    try {
        GraphDocument doc = load_graph_file(in_path);
        DimensionMemo memo;
        if (per_vertex) {
            for (int p = 0; p < doc.graph.vertex_count(); ++p)
                out << p << "\t" << to_fraction_string(vertex_dimension(doc.graph, p, memo))
                    << "\n";
        } else {
            out << to_fraction_string(graph_dimension(doc.graph, memo)) << "\n";
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_validate(const std::string& in_path, const ValidateOptions& options, std::ostream& out,
                 std::ostream& err) {
    try {
        if (options.detect == options.dim.has_value()) {
            err << "error: pass exactly one of --dim or --detect\n";
            return 2;
        }
        GraphDocument doc = load_graph_file(in_path);
        if (options.detect) {
            auto d = detect_dimension(doc.graph, options.max_d);
            nlohmann::ordered_json j;
            j["report"] = "detect";
            j["max_dimension"] = options.max_d;
            if (d)
                j["dimension"] = *d;
            else
                j["dimension"] = nullptr;
            out << j.dump(2) << "\n";
            return d ? 0 : 1;
        }
        ValidationCertificate cert = validate_d_graph(doc.graph, *options.dim);
        out << to_json(cert).dump(2) << "\n";
        return cert.valid ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_check_gbc(const std::string& in_path, std::ostream& out, std::ostream& err) {
    try {
        GraphDocument doc = load_graph_file(in_path);
        auto [holds, report] = check_gauss_bonnet(doc.graph);
        out << "gbc=" << (holds ? "true" : "false") << " total="
            << to_fraction_string(report.total) << " chi=" << report.euler_characteristic
            << "\n";
        if (!holds) {
            // cannot happen for a correct build; pinpoint the broken count
            TransferReport transfer = verify_transfer(doc.graph);
            for (const auto& row : transfer.rows)
                if (!row.ok)
                    err << "internal inconsistency at k=" << row.k << ": sphere sum "
                        << row.sphere_sum.str() << " != " << row.weighted_count.str() << "\n";
            return 1;
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace curv
