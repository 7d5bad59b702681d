#ifndef QH_DIAGRAMS_HPP
#define QH_DIAGRAMS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qh/chains.hpp"
#include "qh/quandle.hpp"

namespace qh {

struct DiagramReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/// Closed 1-manifold with marked oriented vertices; slots[i] is the region
/// slot immediately before vertices[i] in the cyclic order.
struct Circle0 {
    std::vector<std::string> slots;
    std::vector<std::string> vertices;
    std::vector<int> signs;  // +1 / -1 per vertex
};

struct Diagram0 {
    std::vector<Circle0> circles;
};

struct Edge1 {
    std::string name;
    std::string right;  // region on the right of the directed edge
    std::string left;
};

struct Crossing1 {
    int sign = 1;
    std::string over_in, over_out, under_in, under_out;
    std::string source_region;

    /// The under edge colored q1 (sign-dependent convention).
    const std::string& under_source() const { return sign > 0 ? under_in : under_out; }
    const std::string& under_target() const { return sign > 0 ? under_out : under_in; }
};

struct Endpoint1 {
    std::string edge;
    bool starts = true;  // false: the edge terminates here
};

struct Diagram1 {
    std::vector<std::string> regions;
    std::vector<Edge1> edges;
    std::vector<Crossing1> crossings;
    std::vector<Endpoint1> endpoints;

    bool is_closed() const { return endpoints.empty(); }
    /// Index into edges, or -1.
    int edge_index(const std::string& name) const;
};

DiagramReport validate(const Diagram0& d);
DiagramReport validate(const Diagram1& d);

struct Coloring {
    const Diagram1* diagram;
    const FiniteQuandle* quandle;
    std::map<std::string, int> edge_colors;
};

struct ShadowColoring {
    Coloring base;
    std::map<std::string, int> region_colors;
};

struct ShadowColoring0 {
    const Diagram0* diagram;
    const FiniteQuandle* quandle;
    std::map<std::string, int> slot_colors;
    std::map<std::string, int> vertex_colors;
};

DiagramReport check_coloring(const Coloring& c);
DiagramReport check_shadow(const ShadowColoring& s);
DiagramReport check_shadow(const ShadowColoring0& s);

/// All colorings satisfying the crossing relations, in lexicographic order
/// of the arc assignment (arcs ordered by their lowest edge index).
std::vector<Coloring> enumerate_colorings(const Diagram1& d, const FiniteQuandle& q);

/// Propagates region colors from the seed using left = right * edge.
/// Returns the unique consistent extension reaching every region, or
/// nullopt when propagation conflicts or leaves a region undetermined.
/// Throws std::domain_error if the seed region is unknown.
std::optional<ShadowColoring> shadow_extend(const Coloring& c, const std::string& seed_region,
                                            int seed_color);

/// Closed colored diagram -> degree-2 chain, sum of sign*(q1, q2).
/// Throws std::domain_error when the diagram has endpoints.
Chain extract_chain(const Coloring& c);
/// Shadow colored diagram -> degree-3 chain, sum over crossings of
/// sign*(q0, q1, q2) with q0 the source-region color.
Chain extract_chain(const ShadowColoring& s);
/// Shadow colored 0-diagram -> degree-2 chain over the marked vertices.
Chain extract_chain(const ShadowColoring0& s);

/// Degree-2 chain of the endpoint terms: starts -> +(a,a), ends -> -(a,a),
/// a the color of the terminating edge.
Chain endpoint_chain(const ShadowColoring& s);

/// A closed diagram + coloring realizing a 2-cycle; owns its own copies so
/// the coloring's pointers stay valid across moves.
struct Realized {
    std::unique_ptr<Diagram1> diagram;
    std::unique_ptr<FiniteQuandle> quandle;
    Coloring coloring;
};

/// One crossing per signed unit term; cancelling boundary terms matched
/// greedily in lexicographic order; regions synthesized from the crossing
/// quadrants. Throws std::domain_error unless c is a 2-cycle in variant v.
Realized realize_two_cycle(const FiniteQuandle& q, const Chain& c, Variant v);

struct Presentation {
    struct Relation {
        std::size_t a, b, c;  // generator indices: a * b = c
    };
    std::vector<std::string> generators;
    std::vector<Relation> relations;
    /// Index of the generator (arc) containing the given edge.
    std::map<std::string, std::size_t> arc_of_edge;

    std::string str() const;
};

/// Wirtinger-style presentation: generators are arcs (edges merged through
/// over-passes), one relation per crossing. Requires a closed diagram.
Presentation fundamental_presentation(const Diagram1& d);

/// Number of assignments generators -> q satisfying all relations.
std::size_t count_homs(const Presentation& p, const FiniteQuandle& q);

// --- file formats ---

Diagram0 parse_diagram0(const std::string& text);
std::string format_diagram0(const Diagram0& d);
Diagram1 parse_diagram1(const std::string& text);
std::string format_diagram1(const Diagram1& d);

/// Generic "<id> = <element>" assignment lines.
std::map<std::string, std::string> parse_assignments(const std::string& text);

Coloring make_coloring(const Diagram1& d, const FiniteQuandle& q,
                       const std::map<std::string, std::string>& assignments);
ShadowColoring make_shadow_coloring(const Diagram1& d, const FiniteQuandle& q,
                                    const std::map<std::string, std::string>& assignments);
ShadowColoring0 make_shadow_coloring(const Diagram0& d, const FiniteQuandle& q,
                                     const std::map<std::string, std::string>& assignments);

std::string format_coloring(const Coloring& c);
std::string format_coloring(const ShadowColoring& s);
std::string format_coloring(const ShadowColoring0& s);

}  // namespace qh

#endif
