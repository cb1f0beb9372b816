#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rgcr/surface_map.hpp"

namespace rgcr {

struct GluingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

/// An edge pairing of a disjoint collection of labeled polygons. Every
/// polygon side appears in exactly one pairing. Each polygon boundary is
/// indexed counterclockwise, side i running from corner i to corner i+1.
///
/// A pairing with parallel = false identifies the two sides head-to-tail
/// (the two counterclockwise traversals run opposite along the shared
/// edge); parallel = true identifies them head-to-head, which forces one
/// polygon to flip and is only orientable when the flips are globally
/// consistent.
struct GluingSpec {
    struct Pairing {
        int poly_a, edge_a;
        int poly_b, edge_b;
        bool parallel = false;
    };
    std::vector<std::string> names;  // one per polygon
    std::vector<int> sides;         // one per polygon
    std::vector<Pairing> pairings;

    int polygon_count() const { return static_cast<int>(sides.size()); }
    int total_slots() const;
};

/// Quotient map of the gluing. Faces come out in polygon order; dart ids
/// follow the (possibly flipped) polygon boundaries. Throws GluingError for
/// unmatched/duplicate sides, degenerate self-pairings and non-orientable
/// flip systems, and MapError when a corner class has valence != 4.
SurfaceMap from_gluing(const GluingSpec& spec);

/// Line-oriented diagram file format ('#' starts a comment):
///   polygons <count>
///   <id> <sides>            one line per polygon
///   gluing
///   <idA>.<edgeA> <idB>.<edgeB> <+|->
/// '-' is the head-to-tail identification, '+' head-to-head. Duplicate or
/// missing edge references are rejected with the offending line number.
GluingSpec parse_diagram(std::istream& in);
GluingSpec parse_diagram_file(const std::string& path);

void write_diagram(std::ostream& out, const GluingSpec& spec);
std::string diagram_to_string(const GluingSpec& spec);

}  // namespace rgcr
