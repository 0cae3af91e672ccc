#pragma once

#include <string>

#include "json.hpp"

#include "arboreq/bipartite.hpp"
#include "arboreq/coloring.hpp"
#include "arboreq/graph.hpp"

namespace arboreq {

// Bit-exact JSON graph format: {"n": int, "edges": [[u,v],...]} with edges
// sorted lexicographically and u < v, plus an optional "family" tag.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// {"lists": {"0": [1,2,3], ...}}
nlohmann::json assignment_to_json(const ListAssignment& L);
ListAssignment assignment_from_json(const nlohmann::json& j);

// {"colors": {"0": 2, ...}}; uncolored vertices are omitted.
nlohmann::json coloring_to_json(const PartialColoring& f);
PartialColoring coloring_from_json(const nlohmann::json& j, int n);

struct Certificate {
    int schema = 1;
    int k = 0;
    std::string theorem_tag;
    PartialColoring coloring;
    VerificationReport report;
};

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j, int n);

std::string graph_to_dot(const Graph& g);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace arboreq
