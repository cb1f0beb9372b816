#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgcr {

using Dart = int;

struct MapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Proper 2-coloring of the faces; faces sharing an edge get opposite
/// colors. color[f] is 0 (white) or 1 (shaded).
struct CheckerboardColoring {
    std::vector<int> color;
};

/// Either a coloring or an odd closed walk in the face adjacency graph
/// witnessing that none exists.
struct CheckerboardResult {
    std::optional<CheckerboardColoring> coloring;
    std::vector<int> odd_cycle;  // face ids, empty on success
    bool ok() const { return coloring.has_value(); }
};

/// Data for one failing 2-cut: a simple closed curve crossing the diagram
/// twice, in the interiors of edge_a and edge_b, through faces face_a and
/// face_b, bounding a disk that contains disk_vertices >= 1 crossings.
struct TwoCutWitness {
    int edge_a = -1, edge_b = -1;
    int face_a = -1, face_b = -1;
    int disk_vertices = 0;
};

struct WeaklyPrimeResult {
    bool weakly_prime = true;
    std::optional<TwoCutWitness> witness;
};

/// A 4-valent graph cellularly embedded in a closed orientable surface,
/// stored as two permutations of darts (half-edges): `rotation` gives the
/// next dart counterclockwise around the base vertex, `involution` the
/// opposite dart of the same edge. Faces are orbits of
/// face_next(d) = rotation(involution(d)) and are never stored.
///
/// Immutable after construction; all queries are const and thread-safe.
class SurfaceMap {
public:
    /// Validates: permutations of equal size, involution fixed-point-free,
    /// every rotation orbit of length exactly 4.
    SurfaceMap(std::vector<Dart> rotation, std::vector<Dart> involution);

    int dart_count() const { return static_cast<int>(rot_.size()); }
    Dart rotation(Dart d) const { return rot_[d]; }
    Dart involution(Dart d) const { return inv_[d]; }
    Dart face_next(Dart d) const { return rot_[inv_[d]]; }

    int vertex_count() const { return n_vertices_; }
    int edge_count() const { return dart_count() / 2; }
    int face_count() const { return n_faces_; }
    int vertex_of(Dart d) const { return vertex_of_[d]; }
    int face_of(Dart d) const { return face_of_[d]; }
    int edge_of(Dart d) const { return edge_of_[d]; }
    int face_size(int face) const { return face_size_[face]; }

    /// Face boundary cycles in face_next order, one per face id.
    const std::vector<std::vector<Dart>>& faces() const { return face_cycles_; }

    bool connected() const;

    /// g with V - E + F = 2 - 2g. Throws MapError when disconnected.
    int genus() const;

    /// True iff the cyclic face sequence around every vertex alternates as
    /// (n, m, n, m): the sizes match and no face occupies two consecutive
    /// sectors of a vertex.
    bool vertex_pattern(int n, int m) const;

    /// Sorted multiset of face sizes.
    std::vector<int> face_vector() const;

    CheckerboardResult checkerboard() const;

    /// Number of closed strands under straight-ahead traversal (opposite
    /// dart in the rotation at every crossing), i.e. link components.
    int components() const;

    /// Searches every isotopy class of simple closed curve meeting the
    /// diagram in exactly two edge-interior points for one bounding a disk
    /// whose diagram content is more than a single embedded arc. The notion
    /// is aimed at genus >= 1; on the sphere the complement of even a
    /// trivial curve is a disk, so any sphere diagram with a crossing fails.
    WeaklyPrimeResult weakly_prime() const;

    /// Sizes of the edge identification classes produced by gluing a copy
    /// of every face to its twin shifted one edge, white faces one way and
    /// shaded the other.
    std::vector<int> gear_shift_edge_classes(const CheckerboardColoring& coloring) const;

    /// Canonical byte string: equal for two maps iff they are isomorphic as
    /// oriented maps (when mirror_quotient is false) or isomorphic up to
    /// reflection (default). Requires a connected map.
    std::vector<std::uint8_t> canonical_form(bool mirror_quotient = true) const;

    SurfaceMap mirrored() const;
    SurfaceMap relabeled(const std::vector<Dart>& perm) const;

private:
    std::vector<std::uint8_t> canonical_oriented() const;

    std::vector<Dart> rot_, inv_;
    std::vector<int> vertex_of_, face_of_, edge_of_, face_size_;
    std::vector<std::vector<Dart>> face_cycles_;
    int n_vertices_ = 0, n_faces_ = 0;
};

/// Explicit backtracking isomorphism test (an oriented map isomorphism is
/// pinned by the image of a single dart). mirror_quotient additionally
/// tries the reflection of b.
bool maps_isomorphic(const SurfaceMap& a, const SurfaceMap& b, bool mirror_quotient = true);

}  // namespace rgcr
