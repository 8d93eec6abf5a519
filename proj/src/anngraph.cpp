#include "modann/anngraph.hpp"

#include "modann/annclass.hpp"
#include "modann/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace modann {

std::string toString(GraphKind kind) {
    switch (kind) {
    case GraphKind::Full: return "full";
    case GraphKind::Semi: return "semi";
    case GraphKind::Star: return "star";
    }
    return "full";
}

GraphKind parseGraphKind(const std::string& text) {
    if (text == "full") return GraphKind::Full;
    if (text == "semi") return GraphKind::Semi;
    if (text == "star") return GraphKind::Star;
    throw InvalidInput("unknown graph kind '" + text + "' (expected full, semi or star)");
}

GraphFormat parseGraphFormat(const std::string& text) {
    if (text == "dot") return GraphFormat::Dot;
    if (text == "json") return GraphFormat::Json;
    throw InvalidInput("unknown graph format '" + text + "' (expected dot or json)");
}

std::vector<Edge> annihilationEdges(const std::vector<Ideal>& colons, const Ideal& ann, Exec exec) {
    const std::size_t n = colons.size();
    const auto adjacent = [&](std::size_t i, std::size_t j) {
        return idealContains(ann, idealProduct(colons[i], colons[j]));
    };
    std::vector<Edge> edges;
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (adjacent(i, j)) edges.emplace_back(i, j);
        return edges;
    }
    // Rows are filled independently and concatenated in index order, so
    // the result does not depend on scheduling.
    std::vector<std::vector<Edge>> rows(n);
    const auto rowsCount = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t ii = 0; ii < rowsCount; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = i + 1; j < n; ++j)
            if (adjacent(i, j)) rows[i].emplace_back(i, j);
    }
    for (auto& row : rows) edges.insert(edges.end(), row.begin(), row.end());
    return edges;
}

AnnGraph buildAnnGraph(const Module& module, GraphKind kind, Exec exec) {
    if (!module.isFinite())
        throw OutOfScope("buildAnnGraph: " + module.spec() +
                         " is infinite; use symbolicFreeModuleFacts for free modules");
    AnnGraph g{kind, module.ring(), module.spec(), {}, {}};
    std::vector<Ideal> colons;
    for (auto& c : classifyAll(module, exec)) {
        if (c.element.isZero()) continue;
        const bool member = kind == GraphKind::Full ? c.isFull : kind == GraphKind::Semi ? c.isSemi : c.isStar;
        if (!member) continue;
        colons.push_back(c.colon);
        g.vertices.push_back(Vertex{std::move(c.element), c.colon, isEssentialIdeal(c.colon)});
    }
    g.edges = annihilationEdges(colons, annihilatorOfModule(module), exec);
    return g;
}

std::vector<std::size_t> essentialVertices(const AnnGraph& graph) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        if (isEssentialIdeal(graph.vertices[i].colon)) out.push_back(i);
    return out;
}

FreeModuleFacts symbolicFreeModuleFacts(Int rank) {
    if (rank < 2) throw OutOfScope("symbolic free-module facts need rank >= 2, got " + std::to_string(rank));
    const Module m = Module::freeOfRank(rank);
    const Ideal colon = symbolicFreeColon(m);
    const Ideal ann = annihilatorOfModule(m);
    const auto x = classifyElement(m, Element{std::vector<Int>(static_cast<std::size_t>(rank), 1)});
    FreeModuleFacts f{rank, colon, isEssentialIdeal(colon), x.isFull, idealContains(ann, idealProduct(colon, colon)),
                      !x.isSemi, !x.isStar, isEssentialIdeal(colon)};
    return f;
}

GraphShape graphShape(const AnnGraph& graph) {
    GraphShape s;
    const std::size_t n = graph.vertices.size();
    s.vertexEmpty = n == 0;
    s.edgeEmpty = graph.edges.empty();
    s.isComplete = graph.edges.size() == n * (n == 0 ? 0 : n - 1) / 2;
    if (n < 2) return s;

    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [i, j] : graph.edges) adj[i][j] = adj[j][i] = 1;
    // Vertex 0 and its non-neighbours form one side.
    std::vector<std::size_t> a{0}, b;
    for (std::size_t v = 1; v < n; ++v) (adj[0][v] ? b : a).push_back(v);
    if (b.empty()) return s;
    bool ok = graph.edges.size() == a.size() * b.size();
    for (auto [i, j] : graph.edges) {
        const bool iA = std::binary_search(a.begin(), a.end(), i);
        const bool jA = std::binary_search(a.begin(), a.end(), j);
        ok = ok && iA != jA;
    }
    if (!ok) return s;
    s.isCompleteBipartite = true;
    if (b.size() < a.size()) std::swap(a, b);
    s.partA = std::move(a);
    s.partB = std::move(b);
    return s;
}

namespace {

std::string toDot(const AnnGraph& graph) {
    if (graph.vertices.empty() && graph.edges.empty()) return "graph ann { }\n";
    std::ostringstream out;
    out << "graph ann {\n";
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        const auto& v = graph.vertices[i];
        out << "  " << i << " [label=\"" << v.element.str() << "\", colon=\"" << v.colon.str() << "\"";
        if (v.essential)
            out << ", essential=true, style=filled, fillcolor=\"lightblue\"";
        else
            out << ", essential=false";
        out << "];\n";
    }
    for (auto [i, j] : graph.edges) out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
    return out.str();
}

std::string toJson(const AnnGraph& graph) {
    nlohmann::ordered_json j;
    j["kind"] = toString(graph.kind);
    j["ring"] = graph.ring.spec();
    j["module"] = graph.moduleSpec;
    auto vertices = nlohmann::ordered_json::array();
    for (const auto& v : graph.vertices) {
        nlohmann::ordered_json jv;
        jv["element"] = v.element.coords;
        jv["colon"] = std::to_string(v.colon.gen());
        jv["essential"] = v.essential;
        vertices.push_back(std::move(jv));
    }
    j["vertices"] = std::move(vertices);
    auto edges = nlohmann::ordered_json::array();
    for (auto [a, b] : graph.edges) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

} // namespace

std::string exportGraph(const AnnGraph& graph, GraphFormat format) {
    return format == GraphFormat::Dot ? toDot(graph) : toJson(graph);
}

} // namespace modann
