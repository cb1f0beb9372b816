#include "rgcr/surface_map.hpp"

#include <algorithm>
#include <numeric>

namespace rgcr {

namespace {

struct UnionFind {
    std::vector<int> parent, size;
    explicit UnionFind(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

void check_permutation(const std::vector<Dart>& p, const char* what) {
    std::vector<char> seen(p.size(), 0);
    for (Dart d : p) {
        if (d < 0 || d >= static_cast<Dart>(p.size()) || seen[d])
            throw MapError(std::string(what) + " is not a permutation of the darts");
        seen[d] = 1;
    }
}

}  // namespace

SurfaceMap::SurfaceMap(std::vector<Dart> rotation, std::vector<Dart> involution)
    : rot_(std::move(rotation)), inv_(std::move(involution)) {
    if (rot_.size() != inv_.size()) throw MapError("rotation and involution disagree on dart count");
    if (rot_.empty()) throw MapError("empty map");
    if (rot_.size() % 2 != 0) throw MapError("odd number of darts");
    check_permutation(rot_, "rotation");
    check_permutation(inv_, "involution");
    const int n = dart_count();
    for (Dart d = 0; d < n; ++d) {
        if (inv_[d] == d) throw MapError("involution has a fixed point (degenerate edge)");
        if (inv_[inv_[d]] != d) throw MapError("involution is not an involution");
    }

    vertex_of_.assign(n, -1);
    for (Dart d = 0; d < n; ++d) {
        if (vertex_of_[d] >= 0) continue;
        int len = 0;
        for (Dart e = d; vertex_of_[e] < 0; e = rot_[e]) {
            vertex_of_[e] = n_vertices_;
            ++len;
        }
        if (len != 4) throw MapError("vertex of valence " + std::to_string(len) + "; diagrams are 4-valent");
        ++n_vertices_;
    }

    edge_of_.assign(n, -1);
    int n_edges = 0;
    for (Dart d = 0; d < n; ++d)
        if (edge_of_[d] < 0) edge_of_[d] = edge_of_[inv_[d]] = n_edges++;

    face_of_.assign(n, -1);
    for (Dart d = 0; d < n; ++d) {
        if (face_of_[d] >= 0) continue;
        std::vector<Dart> cycle;
        for (Dart e = d; face_of_[e] < 0; e = face_next(e)) {
            face_of_[e] = n_faces_;
            cycle.push_back(e);
        }
        face_size_.push_back(static_cast<int>(cycle.size()));
        face_cycles_.push_back(std::move(cycle));
        ++n_faces_;
    }
}

bool SurfaceMap::connected() const {
    const int n = dart_count();
    UnionFind uf(n);
    for (Dart d = 0; d < n; ++d) {
        uf.unite(d, rot_[d]);
        uf.unite(d, inv_[d]);
    }
    return uf.size[uf.find(0)] == n;
}

int SurfaceMap::genus() const {
    if (!connected()) throw MapError("genus of a disconnected map");
    const int chi = vertex_count() - edge_count() + face_count();
    if (chi % 2 != 0) throw MapError("odd Euler characteristic");
    return (2 - chi) / 2;
}

bool SurfaceMap::vertex_pattern(int n, int m) const {
    std::vector<char> seen(dart_count(), 0);
    for (Dart d = 0; d < dart_count(); ++d) {
        if (seen[d]) continue;
        int s[4], f[4];
        Dart e = d;
        for (int i = 0; i < 4; ++i, e = rot_[e]) {
            seen[e] = 1;
            f[i] = face_of_[e];
            s[i] = face_size_[f[i]];
        }
        const bool nm = s[0] == n && s[1] == m && s[2] == n && s[3] == m;
        const bool mn = s[0] == m && s[1] == n && s[2] == m && s[3] == n;
        if (!nm && !mn) return false;
        // The polygons must alternate: no face may occupy two consecutive
        // sectors (detects e.g. three corners of one octagon in a row when
        // n = m, where sizes alone cannot).
        for (int i = 0; i < 4; ++i)
            if (f[i] == f[(i + 1) % 4]) return false;
    }
    return true;
}

std::vector<int> SurfaceMap::face_vector() const {
    std::vector<int> v = face_size_;
    std::sort(v.begin(), v.end());
    return v;
}

CheckerboardResult SurfaceMap::checkerboard() const {
    CheckerboardResult res;
    std::vector<int> color(n_faces_, -1);
    std::vector<int> parent(n_faces_, -1);
    // BFS 2-coloring of the face adjacency graph; a conflict edge closes an
    // odd walk through the BFS tree.
    for (int start = 0; start < n_faces_; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::vector<int> queue{start};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int f = queue[qi];
            for (Dart d : face_cycles_[f]) {
                const int g = face_of_[inv_[d]];
                if (g == f) {
                    res.odd_cycle = {f};
                    return res;
                }
                if (color[g] < 0) {
                    color[g] = 1 - color[f];
                    parent[g] = f;
                    queue.push_back(g);
                } else if (color[g] == color[f]) {
                    // Walk both faces up to their common ancestor.
                    std::vector<int> up_f{f}, up_g{g};
                    auto depth = [&](int x) {
                        int k = 0;
                        for (; parent[x] >= 0; x = parent[x]) ++k;
                        return k;
                    };
                    int a = f, b = g, da = depth(f), db = depth(g);
                    while (da > db) { a = parent[a]; up_f.push_back(a); --da; }
                    while (db > da) { b = parent[b]; up_g.push_back(b); --db; }
                    while (a != b) {
                        a = parent[a]; up_f.push_back(a);
                        b = parent[b]; up_g.push_back(b);
                    }
                    res.odd_cycle = up_f;
                    for (auto it = up_g.rbegin() + 1; it != up_g.rend(); ++it)
                        res.odd_cycle.push_back(*it);
                    return res;
                }
            }
        }
    }
    res.coloring = CheckerboardColoring{std::move(color)};
    return res;
}

int SurfaceMap::components() const {
    const int n = dart_count();
    UnionFind uf(n);
    for (Dart d = 0; d < n; ++d) {
        uf.unite(d, inv_[d]);
        // Straight ahead: cross the edge, leave on the opposite dart.
        uf.unite(d, rot_[rot_[inv_[d]]]);
    }
    int count = 0;
    for (Dart d = 0; d < n; ++d)
        if (uf.find(d) == d) ++count;
    return count;
}

std::vector<int> SurfaceMap::gear_shift_edge_classes(const CheckerboardColoring& coloring) const {
    if (static_cast<int>(coloring.color.size()) != n_faces_)
        throw MapError("coloring does not match the map");
    const int e = edge_count();
    // Edge copies: [0,e) in the top polyhedron, [e,2e) in the bottom one.
    // Each face is glued to its twin with a one-edge shift, white faces one
    // direction and shaded faces the other.
    UnionFind uf(2 * e);
    for (int f = 0; f < n_faces_; ++f) {
        const auto& cyc = face_cycles_[f];
        const int k = static_cast<int>(cyc.size());
        const int shift = coloring.color[f] == 0 ? 1 : k - 1;
        for (int i = 0; i < k; ++i)
            uf.unite(edge_of_[cyc[i]], e + edge_of_[cyc[(i + shift) % k]]);
    }
    std::vector<int> sizes;
    for (int i = 0; i < 2 * e; ++i)
        if (uf.find(i) == i) sizes.push_back(uf.size[i]);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<std::uint8_t> SurfaceMap::canonical_oriented() const {
    const int n = dart_count();
    if (n > 255) throw MapError("canonical form supports at most 255 darts");
    std::vector<std::uint8_t> best;
    std::vector<int> label(n), order(n);
    for (Dart root = 0; root < n; ++root) {
        // Deterministic BFS relabeling from this root; an oriented map
        // isomorphism is determined by the image of one dart, so the minimum
        // over roots is canonical.
        std::fill(label.begin(), label.end(), -1);
        label[root] = 0;
        order[0] = root;
        int assigned = 1;
        for (int i = 0; i < assigned; ++i) {
            const Dart d = order[i];
            for (Dart nb : {rot_[d], inv_[d]}) {
                if (label[nb] < 0) {
                    label[nb] = assigned;
                    order[assigned++] = nb;
                }
            }
        }
        if (assigned != n) throw MapError("canonical form of a disconnected map");
        std::vector<std::uint8_t> enc;
        enc.reserve(2 * n + 1);
        enc.push_back(static_cast<std::uint8_t>(n));
        for (int i = 0; i < n; ++i) {
            enc.push_back(static_cast<std::uint8_t>(label[rot_[order[i]]]));
            enc.push_back(static_cast<std::uint8_t>(label[inv_[order[i]]]));
        }
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

std::vector<std::uint8_t> SurfaceMap::canonical_form(bool mirror_quotient) const {
    auto c = canonical_oriented();
    if (mirror_quotient) {
        auto m = mirrored().canonical_oriented();
        if (m < c) c = std::move(m);
    }
    return c;
}

SurfaceMap SurfaceMap::mirrored() const {
    std::vector<Dart> rev(dart_count());
    for (Dart d = 0; d < dart_count(); ++d) rev[rot_[d]] = d;
    return SurfaceMap(std::move(rev), inv_);
}

SurfaceMap SurfaceMap::relabeled(const std::vector<Dart>& perm) const {
    check_permutation(perm, "relabeling");
    if (perm.size() != rot_.size()) throw MapError("relabeling has wrong size");
    std::vector<Dart> r(dart_count()), i(dart_count());
    for (Dart d = 0; d < dart_count(); ++d) {
        r[perm[d]] = perm[rot_[d]];
        i[perm[d]] = perm[inv_[d]];
    }
    return SurfaceMap(std::move(r), std::move(i));
}

namespace {

bool oriented_isomorphic(const SurfaceMap& a, const SurfaceMap& b) {
    const int n = a.dart_count();
    if (n != b.dart_count()) return false;
    for (Dart root = 0; root < n; ++root) {
        std::vector<int> image(n, -1), hit(n, 0);
        image[0] = root;
        hit[root] = 1;
        std::vector<Dart> stack{0};
        bool ok = true;
        int mapped = 1;
        while (!stack.empty() && ok) {
            const Dart d = stack.back();
            stack.pop_back();
            const Dart pairs[2][2] = {{a.rotation(d), b.rotation(image[d])},
                                      {a.involution(d), b.involution(image[d])}};
            for (const auto& p : pairs) {
                if (image[p[0]] < 0) {
                    if (hit[p[1]]) { ok = false; break; }
                    image[p[0]] = p[1];
                    hit[p[1]] = 1;
                    ++mapped;
                    stack.push_back(p[0]);
                } else if (image[p[0]] != p[1]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && mapped == n) return true;
    }
    return false;
}

}  // namespace

bool maps_isomorphic(const SurfaceMap& a, const SurfaceMap& b, bool mirror_quotient) {
    if (oriented_isomorphic(a, b)) return true;
    return mirror_quotient && oriented_isomorphic(a, b.mirrored());
}

}  // namespace rgcr
