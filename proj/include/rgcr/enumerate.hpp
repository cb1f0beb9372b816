#pragma once

#include <cstdint>
#include <optional>

#include "rgcr/gluing.hpp"
#include "rgcr/signatures.hpp"
#include "rgcr/surface_map.hpp"

namespace rgcr {

struct SearchTooLarge : std::runtime_error {
    SearchTooLarge(int edges_, int cap)
        : std::runtime_error("search too large: " + std::to_string(edges_) +
                             " edges exceeds the cap of " + std::to_string(cap)),
          edges(edges_) {}
    int edges;
};

struct SearchLimits {
    int max_edges = 24;
};

/// Verification verdicts for one diagram.
struct DiagramReport {
    int genus = 0;
    std::vector<int> face_vector;
    bool vertex_pattern_ok = false;
    bool colorable = false;
    bool cellular = true;  // maps built from polygon gluings are cellular
    bool weakly_prime = false;
    std::optional<TwoCutWitness> witness;
    int components = 0;
    std::vector<int> edge_class_sizes;
};

struct EnumeratedDiagram {
    std::vector<std::uint8_t> canonical;
    GluingSpec gluing;  // lexicographically least gluing found in the class
    DiagramReport report;
};

struct EnumerationResult {
    TilingSignature signature;
    std::vector<EnumeratedDiagram> diagrams;  // sorted by canonical form
    long long knot_count = 0;
};

/// All gluings of k_n n-gons and k_m m-gons, up to map isomorphism (and
/// reflection unless mirror_quotient is false), whose quotient is a
/// connected genus-g diagram passing every verifier: 4-valent, [n,m,n,m]
/// vertex pattern, checkerboard colorable, weakly prime. The signature
/// needs explicit counts; use euclidean_signature for genus 1.
EnumerationResult enumerate_diagrams(const TilingSignature& sig, const SearchLimits& limits = {},
                                     bool mirror_quotient = true);

/// The diagrams from enumerate_diagrams with a single link component.
std::vector<EnumeratedDiagram> find_knots(const TilingSignature& sig,
                                          const SearchLimits& limits = {},
                                          bool mirror_quotient = true);

/// Runs every verifier on an existing map (for `verify`): n, m are taken
/// from the face vector when the diagram has at most two face sizes.
DiagramReport verify_map(const SurfaceMap& map);

/// Reflects every polygon of a gluing in place.
GluingSpec mirror_gluing(const GluingSpec& spec);

}  // namespace rgcr
