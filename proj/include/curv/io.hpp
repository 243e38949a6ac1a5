#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "curv/curvature.hpp"
#include "curv/dimension.hpp"
#include "curv/graph.hpp"

namespace curv {

/// Parsed graph document: the graph plus optional display labels.
struct GraphDocument {
    Graph graph;
    std::vector<std::string> labels;  // empty or one per vertex
};

// Accepts either edge-list text (optional "n <count>" header, one "u v" pair
// per line, '#' comments) or a JSON object {"n":..., "edges":[[u,v],...],
// "labels":[...]} when the first non-space byte is '{'. Errors carry the
// offending line.
GraphDocument parse_graph(std::string_view bytes);

// Canonical edge-list rendering: optional '#' comment, "n <count>" header,
// edges with u < v in lexicographic order.
std::string render_edge_list(const Graph& g, std::string_view comment = {});

// Generator grammar: complete:n, cyclic:n, discrete:n, wheel:n, tree:n:seed,
// platonic:name, cross:n, stellated-cube:n, rect-hexeract, 600-cell,
// er:n:p:seed, bipyramid:<spec>, pyramid:<spec>.
Graph build_generator(std::string_view spec);

// Structured report rendering. Rationals are "num/den" strings (never
// floats), counts are integers, verdicts booleans; key order and class order
// (ascending by value) are fixed so output is byte-deterministic.
nlohmann::ordered_json to_json(const CurvatureReport& report);
CurvatureReport curvature_report_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const ValidationCertificate& cert);
ValidationCertificate certificate_from_json(const nlohmann::json& j);

// Per-vertex table: vertex, degree, V_1..V_top (padded with zeros), K.
std::string render_tsv(const Graph& g, const std::vector<FVector>& profiles,
                       const CurvatureReport& report);

enum class ReportFormat { json, tsv };

struct AnalyzeOptions {
    CurvatureMethod method = CurvatureMethod::general;
    std::optional<int> dim;
    ReportFormat format = ReportFormat::json;
};

struct ValidateOptions {
    std::optional<int> dim;  // exactly one of dim / detect
    bool detect = false;
    int max_d = 10;
};

// Command entry points shared by the CLI binary and the tests. Exit-code
// contract: 0 success/valid, 1 semantic failure (invalid certificate or
// failed verdict), 2 input/usage error.
int cmd_gen(std::string_view spec, const std::string& out_path, std::ostream& err);
int cmd_analyze(const std::string& in_path, const AnalyzeOptions& options, std::ostream& out,
                std::ostream& err);
int cmd_dim(const std::string& in_path, bool per_vertex, std::ostream& out, std::ostream& err);
int cmd_validate(const std::string& in_path, const ValidateOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_check_gbc(const std::string& in_path, std::ostream& out, std::ostream& err);

}  // namespace curv
