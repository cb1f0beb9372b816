#include <algorithm>
#include <array>
#include <cassert>
#include <vector>

#include "rgcr/surface_map.hpp"

namespace rgcr {

namespace {

// p in the cyclic half-open interval [a, b) of Z/L.
bool in_cyclic(int a, int p, int b, int L) {
    return ((p - a) % L + L) % L < ((b - a) % L + L) % L;
}

}  // namespace

// A simple closed curve meeting the diagram in exactly two edge-interior
// points is determined up to isotopy by the pair of face-boundary sides
// (darts) x, y its first arc runs between: the arc lives in
// face(x) = face(y), and the return arc in face(inv x) = face(inv y).
// x = y is the curve crossing one edge twice from the same side;
// y = inv(x) never embeds (its two arcs are forced to cross).
//
// For each candidate the surface is cut along the curve: the two crossing
// points subdivide the crossed edges, the two arcs subdivide their faces,
// and flooding the resulting regions across edge pieces yields the sides.
// A side is a disk iff its interior cells give V - E + F = 1, and a disk
// side containing a crossing is exactly a failure of weak primality.
WeaklyPrimeResult SurfaceMap::weakly_prime() const {
    const int n_darts = dart_count();

    for (Dart x = 0; x < n_darts; ++x) {
        for (Dart y = x; y < n_darts; ++y) {
            if (face_of_[x] != face_of_[y]) continue;
            if (y == inv_[x]) continue;
            if (face_of_[inv_[x]] != face_of_[inv_[y]]) continue;

            const int f1 = face_of_[x];
            const int f2 = face_of_[inv_[x]];

            if (x != y && f1 == f2) {
                // All four sides lie on one face boundary; the two arcs are
                // chords of the same disk and must not interleave.
                const auto& cyc = face_cycles_[f1];
                const int L = static_cast<int>(cyc.size());
                int px = -1, py = -1, pxi = -1, pyi = -1;
                for (int i = 0; i < L; ++i) {
                    if (cyc[i] == x) px = i;
                    if (cyc[i] == y) py = i;
                    if (cyc[i] == inv_[x]) pxi = i;
                    if (cyc[i] == inv_[y]) pyi = i;
                }
                if (in_cyclic(px, pxi, py, L) != in_cyclic(px, pyi, py, L)) continue;
            }

            const int e1 = edge_of_[x];
            const int e2 = edge_of_[y];

            // Pieces per edge after subdividing at the crossing points,
            // indexed along dart x (resp. y).
            std::vector<int> piece_count(edge_count(), 1);
            piece_count[e1] = x == y ? 3 : 2;
            if (x != y) piece_count[e2] = 2;
            std::vector<int> piece_offset(edge_count() + 1, 0);
            for (int e = 0; e < edge_count(); ++e)
                piece_offset[e + 1] = piece_offset[e] + piece_count[e];

            std::vector<int> dir_dart(edge_count());
            for (Dart d = 0; d < n_darts; ++d)
                dir_dart[edge_of_[d]] = std::min(d, inv_[d]);
            dir_dart[e1] = x;
            dir_dart[e2] = y;

            // Per-face boundary atom lists; an atom is one edge piece seen
            // from one side. Record where each dart's stretch begins and the
            // gap positions of the four cut points.
            std::vector<std::vector<std::pair<int, int>>> atoms(face_count());  // (edge, piece)
            std::vector<int> stretch_first(n_darts, -1);
            int cut_a1_p1 = -1, cut_a1_p2 = -1, cut_a2_p1 = -1, cut_a2_p2 = -1;
            for (int f = 0; f < face_count(); ++f) {
                for (Dart d : face_cycles_[f]) {
                    const int e = edge_of_[d];
                    const int pc = piece_count[e];
                    const int start = static_cast<int>(atoms[f].size());
                    stretch_first[d] = start;
                    const bool fwd = d == dir_dart[e];
                    for (int k = 0; k < pc; ++k) atoms[f].push_back({e, fwd ? k : pc - 1 - k});
                    if (x == y) {
                        if (d == x) { cut_a1_p1 = start + 1; cut_a1_p2 = start + 2; }
                        if (d == inv_[x]) { cut_a2_p2 = start + 1; cut_a2_p1 = start + 2; }
                    } else {
                        if (d == x) cut_a1_p1 = start + 1;
                        if (d == y) cut_a1_p2 = start + 1;
                        if (d == inv_[x]) cut_a2_p1 = start + 1;
                        if (d == inv_[y]) cut_a2_p2 = start + 1;
                    }
                }
            }

            // Split each affected face along its chords. A position's region
            // is keyed by which side of each chord it falls on; chords are
            // non-interleaved here, so keys are contiguous regions.
            std::vector<std::vector<std::pair<int, int>>> chords(face_count());
            chords[f1].push_back({cut_a1_p1, cut_a1_p2});
            chords[f2].push_back({cut_a2_p1, cut_a2_p2});

            std::vector<std::vector<int>> region_of(face_count());
            std::vector<int> region_offset(face_count() + 1, 0);
            for (int f = 0; f < face_count(); ++f) {
                const int L = static_cast<int>(atoms[f].size());
                region_of[f].assign(L, -1);
                std::vector<int> keys;
                for (int p = 0; p < L; ++p) {
                    int key = 0;
                    for (std::size_t c = 0; c < chords[f].size(); ++c)
                        key |= in_cyclic(chords[f][c].first, p, chords[f][c].second, L) << c;
                    int id = -1;
                    for (std::size_t k = 0; k < keys.size(); ++k)
                        if (keys[k] == key) id = static_cast<int>(k);
                    if (id < 0) {
                        id = static_cast<int>(keys.size());
                        keys.push_back(key);
                    }
                    region_of[f][p] = id;
                }
                region_offset[f + 1] = region_offset[f] + static_cast<int>(keys.size());
            }
            const int total_regions = region_offset[face_count()];

            // Flood regions across edge pieces.
            std::vector<int> parent(total_regions);
            for (int r = 0; r < total_regions; ++r) parent[r] = r;
            auto find = [&](int r) {
                while (parent[r] != r) r = parent[r] = parent[parent[r]];
                return r;
            };
            auto region_at = [&](Dart d, int piece) {
                const int f = face_of_[d];
                const int e = edge_of_[d];
                const int pc = piece_count[e];
                const bool fwd = d == dir_dart[e];
                const int local = stretch_first[d] + (fwd ? piece : pc - 1 - piece);
                return region_offset[f] + region_of[f][local];
            };
            for (int e = 0; e < edge_count(); ++e) {
                const Dart d = dir_dart[e];
                for (int k = 0; k < piece_count[e]; ++k) {
                    const int a = find(region_at(d, k));
                    const int b = find(region_at(inv_[d], k));
                    parent[a] = b;
                }
            }

            // Interior cell counts per side: faces, edge pieces, vertices.
            std::vector<int> faces_in(total_regions, 0), edges_in(total_regions, 0),
                verts_in(total_regions, 0);
            for (int f = 0; f < face_count(); ++f)
                for (int r = region_offset[f]; r < region_offset[f + 1]; ++r) ++faces_in[find(r)];
            for (int e = 0; e < edge_count(); ++e)
                for (int k = 0; k < piece_count[e]; ++k) ++edges_in[find(region_at(dir_dart[e], k))];
            std::vector<char> vertex_seen(vertex_count(), 0);
            for (Dart d = 0; d < n_darts; ++d) {
                const int v = vertex_of_[d];
                if (vertex_seen[v]) continue;
                vertex_seen[v] = 1;
                const int side =
                    find(region_offset[face_of_[d]] + region_of[face_of_[d]][stretch_first[d]]);
                ++verts_in[side];
            }

            for (int r = 0; r < total_regions; ++r) {
                if (find(r) != r) continue;
                const int chi = verts_in[r] - edges_in[r] + faces_in[r];
                if (chi == 1 && verts_in[r] >= 1) {
                    WeaklyPrimeResult res;
                    res.weakly_prime = false;
                    res.witness = TwoCutWitness{e1, e2, f1, f2, verts_in[r]};
                    return res;
                }
            }
        }
    }
    return WeaklyPrimeResult{};
}

}  // namespace rgcr
