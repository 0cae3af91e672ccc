#include "arboreq/io.hpp"

#include <fstream>
#include <sstream>

#include "arboreq/errors.hpp"

namespace arboreq {

using nlohmann::json;

nlohmann::json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    if (g.family()) {
        const FamilyTag& tag = *g.family();
        json f;
        f["kind"] = tag.kind;
        f["n"] = tag.n;
        f["p"] = tag.p;
        f["a"] = tag.a;
        f["b"] = tag.b;
        j["family"] = std::move(f);
    }
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw parameter_error("graph json needs \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw parameter_error("graph edge must be a pair");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    Graph g(n, edges);
    if (j.contains("family")) {
        const json& f = j.at("family");
        FamilyTag tag;
        tag.kind = f.at("kind").get<std::string>();
        tag.n = f.value("n", 0);
        tag.p = f.value("p", 0);
        tag.a = f.value("a", 0);
        tag.b = f.value("b", 0);
        g.set_family(std::move(tag));
    }
    return g;
}

nlohmann::json assignment_to_json(const ListAssignment& L) {
    json lists = json::object();
    for (Vertex v = 0; v < L.size(); ++v) lists[std::to_string(v)] = L.list(v);
    json j;
    j["lists"] = std::move(lists);
    return j;
}

ListAssignment assignment_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("lists"))
        throw parameter_error("list assignment json needs \"lists\"");
    const json& lists = j.at("lists");
    int n = 0;
    for (auto it = lists.begin(); it != lists.end(); ++it) {
        int v = std::stoi(it.key());
        if (v < 0) throw parameter_error("negative vertex key in lists");
        n = std::max(n, v + 1);
    }
    ListAssignment L(n);
    for (auto it = lists.begin(); it != lists.end(); ++it)
        L.set_list(std::stoi(it.key()), it.value().get<std::vector<ColorId>>());
    return L;
}

nlohmann::json coloring_to_json(const PartialColoring& f) {
    json colors = json::object();
    for (Vertex v = 0; v < f.size(); ++v)
        if (auto c = f.color(v)) colors[std::to_string(v)] = *c;
    json j;
    j["colors"] = std::move(colors);
    return j;
}

PartialColoring coloring_from_json(const nlohmann::json& j, int n) {
    if (!j.is_object() || !j.contains("colors"))
        throw parameter_error("coloring json needs \"colors\"");
    PartialColoring f(n);
    for (auto it = j.at("colors").begin(); it != j.at("colors").end(); ++it) {
        int v = std::stoi(it.key());
        if (v < 0 || v >= n) throw parameter_error("coloring vertex out of range");
        f.set(v, it.value().get<int>());
    }
    return f;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
    json j;
    j["schema"] = cert.schema;
    j["k"] = cert.k;
    j["theorem_tag"] = cert.theorem_tag;
    j["coloring"] = coloring_to_json(cert.coloring);
    json rep;
    rep["list_respected"] = cert.report.list_respected;
    rep["arborable"] = cert.report.arborable;
    rep["total"] = cert.report.total;
    rep["cap"] = cert.report.cap;
    rep["max_class_size"] = cert.report.max_class_size;
    rep["equitable"] = cert.report.equitable();
    j["report"] = std::move(rep);
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j, int n) {
    if (j.value("schema", 0) != 1) throw parameter_error("unsupported certificate schema");
    Certificate cert;
    cert.schema = 1;
    cert.k = j.at("k").get<int>();
    cert.theorem_tag = j.value("theorem_tag", std::string());
    cert.coloring = coloring_from_json(j.at("coloring"), n);
    const json& rep = j.at("report");
    cert.report.list_respected = rep.at("list_respected").get<bool>();
    cert.report.arborable = rep.at("arborable").get<bool>();
    cert.report.total = rep.at("total").get<bool>();
    cert.report.cap = rep.at("cap").get<int>();
    cert.report.max_class_size = rep.at("max_class_size").get<int>();
    return cert;
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph arboreq {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parameter_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw parameter_error(path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw parameter_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace arboreq
