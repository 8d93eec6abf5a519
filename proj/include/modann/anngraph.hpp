#pragma once

#include "modann/exec.hpp"
#include "modann/module.hpp"
#include "modann/ring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace modann {

enum class GraphKind { Full, Semi, Star };

std::string toString(GraphKind kind);
/// Accepts `full`, `semi`, `star`.
GraphKind parseGraphKind(const std::string& text);

struct Vertex {
    Element element;
    Ideal colon;
    bool essential;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Annihilating graph of a finite module: vertices are the nonzero members
/// of one annihilator class, x ~ y iff [x:M][y:M]M = 0 and x != y.
struct AnnGraph {
    GraphKind kind;
    Ring ring;
    std::string moduleSpec;
    /// Lexicographic by element.
    std::vector<Vertex> vertices;
    /// i < j, sorted.
    std::vector<Edge> edges;
};

AnnGraph buildAnnGraph(const Module& module, GraphKind kind, Exec exec = Exec::Parallel);

/// Edges i < j of the graph on `colons` with x ~ y iff the product of their
/// colon ideals lies in `ann`.
std::vector<Edge> annihilationEdges(const std::vector<Ideal>& colons, const Ideal& ann,
                                    Exec exec = Exec::Parallel);

/// Indices of vertices whose colon ideal is essential in R.
std::vector<std::size_t> essentialVertices(const AnnGraph& graph);

/// Facts about the annihilating graphs of Z^k for k >= 2, derived from the
/// symbolic colon ideal.
struct FreeModuleFacts {
    Int rank;
    Ideal colon;
    bool colonEssential;
    bool fullContainsAllNonzero;
    bool fullComplete;
    bool semiVertexEmpty;
    bool starVertexEmpty;
    /// Every nonzero element shares the same colon ideal, so either all
    /// vertices are essential or none is.
    bool anyEssentialVertex;
};

/// Throws OutOfScope for k < 2.
FreeModuleFacts symbolicFreeModuleFacts(Int rank);

struct GraphShape {
    bool isComplete = false;
    bool vertexEmpty = false;
    bool edgeEmpty = false;
    bool isCompleteBipartite = false;
    /// Smaller part first; ties broken by least vertex index.
    std::vector<std::size_t> partA;
    std::vector<std::size_t> partB;
};

GraphShape graphShape(const AnnGraph& graph);

enum class GraphFormat { Dot, Json };
/// Accepts `dot`, `json`.
GraphFormat parseGraphFormat(const std::string& text);

std::string exportGraph(const AnnGraph& graph, GraphFormat format);

} // namespace modann
