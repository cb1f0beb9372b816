#include "rgcr/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rgcr {

namespace {

// Backtracking search over edge pairings of the polygon collection. All
// pairings are head-to-tail (every orientable quotient arises that way up
// to relabeling), so a state is a partial perfect matching on the side
// slots. Pruning is exact: corner classes may never exceed four corners,
// a corner class with no unmatched adjacent slot must have exactly four,
// polygons sharing an edge must take opposite checkerboard colors, and
// every new edge attaches to the already-glued part (connectivity).
class GluingSearch {
public:
    GluingSearch(const TilingSignature& sig, bool mirror_quotient)
        : sig_(sig), mirror_(mirror_quotient) {
        for (long long i = 0; i < *sig.k_n; ++i) sides_.push_back(sig.n);
        for (long long i = 0; i < *sig.k_m; ++i) sides_.push_back(sig.m);
        poly_count_ = static_cast<int>(sides_.size());
        offset_.assign(poly_count_ + 1, 0);
        for (int p = 0; p < poly_count_; ++p) offset_[p + 1] = offset_[p] + sides_[p];
        slot_count_ = offset_[poly_count_];

        match_.assign(slot_count_, -1);
        corner_parent_.resize(slot_count_);
        std::iota(corner_parent_.begin(), corner_parent_.end(), 0);
        corner_size_.assign(slot_count_, 1);
        corner_open_.assign(slot_count_, 2);
        poly_parent_.resize(poly_count_);
        std::iota(poly_parent_.begin(), poly_parent_.end(), 0);
        poly_parity_.assign(poly_count_, 0);
        matched_in_poly_.assign(poly_count_, 0);
    }

    void run() {
        search();
        std::sort(found_.begin(), found_.end(),
                  [](const EnumeratedDiagram& a, const EnumeratedDiagram& b) {
                      return a.canonical < b.canonical;
                  });
    }

    std::vector<EnumeratedDiagram> take() { return std::move(found_); }

private:
    int poly_of(int slot) const {
        return int(std::upper_bound(offset_.begin(), offset_.end(), slot) - offset_.begin()) - 1;
    }
    int corner_head(int slot) const {
        const int p = poly_of(slot);
        return offset_[p] + (slot - offset_[p] + 1) % sides_[p];
    }

    int corner_find(int c) const {
        while (corner_parent_[c] != c) c = corner_parent_[c];
        return c;
    }
    std::pair<int, int> poly_find(int p) const {  // (root, parity to root)
        int parity = 0;
        while (poly_parent_[p] != p) {
            parity ^= poly_parity_[p];
            p = poly_parent_[p];
        }
        return {p, parity};
    }

    struct Undo {
        int matched_a, matched_b;
        std::vector<std::pair<int, int>> open_changes;    // (root, delta applied)
        std::vector<std::pair<int, int>> corner_links;    // (child_root, parent_root)
        int poly_link = -1;                               // child root linked, or -1
    };

    bool corner_merge(int a, int b, Undo& undo) {
        a = corner_find(a);
        b = corner_find(b);
        if (a == b) return true;
        if (corner_size_[a] + corner_size_[b] > 4) return false;
        if (corner_size_[a] < corner_size_[b]) std::swap(a, b);
        corner_parent_[b] = a;
        corner_size_[a] += corner_size_[b];
        corner_open_[a] += corner_open_[b];
        undo.corner_links.push_back({b, a});
        return true;
    }

    void undo_all(const Undo& undo) {
        if (undo.poly_link >= 0) {
            poly_parent_[undo.poly_link] = undo.poly_link;
            poly_parity_[undo.poly_link] = 0;
        }
        for (auto it = undo.corner_links.rbegin(); it != undo.corner_links.rend(); ++it) {
            corner_parent_[it->first] = it->first;
            corner_size_[it->second] -= corner_size_[it->first];
            corner_open_[it->second] -= corner_open_[it->first];
        }
        for (auto it = undo.open_changes.rbegin(); it != undo.open_changes.rend(); ++it)
            corner_open_[it->first] -= it->second;
        match_[undo.matched_a] = -1;
        match_[undo.matched_b] = -1;
        --matched_in_poly_[poly_of(undo.matched_a)];
        --matched_in_poly_[poly_of(undo.matched_b)];
        --matched_pairs_;
    }

    // Cheap feasibility screen; apply() revalidates exactly.
    bool feasible(int u, int v) const {
        const int p = poly_of(u), q = poly_of(v);
        if (p == q) return false;  // one polygon cannot take both colors
        if (sig_.n != sig_.m && sides_[p] == sides_[q]) return false;
        auto [rp, parp] = poly_find(p);
        auto [rq, parq] = poly_find(q);
        if (rp == rq && parp == parq) return false;
        const int hu = corner_find(corner_head(u)), bv = corner_find(v);
        if (hu != bv && corner_size_[hu] + corner_size_[bv] > 4) return false;
        const int bu = corner_find(u), hv = corner_find(corner_head(v));
        if (bu != hv && corner_size_[bu] + corner_size_[hv] > 4) return false;
        return true;
    }

    bool apply(int u, int v, Undo& undo) {
        undo.matched_a = u;
        undo.matched_b = v;
        match_[u] = v;
        match_[v] = u;
        ++matched_in_poly_[poly_of(u)];
        ++matched_in_poly_[poly_of(v)];
        ++matched_pairs_;

        for (int slot : {u, v})
            for (int c : {slot, corner_head(slot)}) {
                const int r = corner_find(c);
                corner_open_[r] -= 1;
                undo.open_changes.push_back({r, -1});
            }
        if (!corner_merge(corner_head(u), v, undo)) return false;
        if (!corner_merge(u, corner_head(v), undo)) return false;

        const int p = poly_of(u), q = poly_of(v);
        auto [rp, parp] = poly_find(p);
        auto [rq, parq] = poly_find(q);
        if (rp == rq) {
            if (parp == parq) return false;
        } else {
            poly_parent_[rq] = rp;
            poly_parity_[rq] = parp ^ parq ^ 1;
            undo.poly_link = rq;
        }

        // Closed corner classes must have exactly four corners.
        for (int c : {u, corner_head(u), v, corner_head(v)}) {
            const int r = corner_find(c);
            if (corner_open_[r] == 0 && corner_size_[r] != 4) return false;
        }
        return true;
    }

    // The next slot to pair: among polygons already attached to the glued
    // part, the slot with the fewest feasible partners. Fresh polygons are
    // interchangeable within a size, so partners in them are restricted to
    // slot 0 of the lowest-id fresh polygon of each size.
    void candidates_for(int u, std::vector<int>& out) const {
        out.clear();
        // Lowest-id untouched polygon of each size, excluding u's own
        // polygon (never a legal partner): all untouched polygons of a size
        // are interchangeable.
        const int pu = poly_of(u);
        int fresh_rep[2] = {-1, -1};
        for (int q = 0; q < poly_count_; ++q) {
            if (q == pu || matched_in_poly_[q] > 0) continue;
            const int which = sides_[q] == sig_.n ? 0 : 1;
            if (fresh_rep[which] < 0) fresh_rep[which] = q;
        }
        for (int v = 0; v < slot_count_; ++v) {
            if (match_[v] >= 0 || v == u) continue;
            const int q = poly_of(v);
            if (matched_in_poly_[q] == 0) {
                if ((q != fresh_rep[0] && q != fresh_rep[1]) || v != offset_[q]) continue;
            }
            if (feasible(u, v)) out.push_back(v);
        }
    }

    void search() {
        if (2 * matched_pairs_ == slot_count_) {
            emit();
            return;
        }
        // Fail-first among slots of touched polygons.
        int best_u = -1;
        std::vector<int> best_cand, cand;
        bool any_touched_open = false;
        for (int u = 0; u < slot_count_; ++u) {
            if (match_[u] >= 0) continue;
            if (matched_in_poly_[poly_of(u)] == 0 && matched_pairs_ > 0) continue;
            any_touched_open = true;
            candidates_for(u, cand);
            if (best_u < 0 || cand.size() < best_cand.size()) {
                best_u = u;
                best_cand = cand;
                if (best_cand.empty()) break;
            }
        }
        if (!any_touched_open) return;  // remaining polygons would be disconnected
        for (int v : best_cand) {
            Undo undo;
            if (apply(best_u, v, undo)) search();
            undo_all(undo);
        }
    }

    GluingSpec current_spec() const {
        GluingSpec spec;
        for (int p = 0; p < poly_count_; ++p) {
            spec.names.push_back("P" + std::to_string(p));
            spec.sides.push_back(sides_[p]);
        }
        for (int u = 0; u < slot_count_; ++u) {
            const int v = match_[u];
            if (v < u) continue;
            const int p = poly_of(u), q = poly_of(v);
            spec.pairings.push_back({p, u - offset_[p], q, v - offset_[q], false});
        }
        return spec;
    }

    void emit() {
        GluingSpec spec = current_spec();
        SurfaceMap map = from_gluing(spec);
        if (!map.connected()) return;
        auto canon = map.canonical_form(mirror_);
        auto it = seen_.find(canon);
        if (it != seen_.end()) {
            if (it->second >= 0) {
                auto& kept = found_[it->second].gluing;
                if (pairing_key(spec) < pairing_key(kept)) kept = std::move(spec);
            }
            return;
        }
        DiagramReport report = verify_map(map);
        if (!report.weakly_prime) {
            seen_[canon] = -1;
            return;
        }
        seen_[canon] = static_cast<int>(found_.size());
        found_.push_back({canon, std::move(spec), std::move(report)});
    }

    static std::vector<std::pair<int, int>> pairing_key(const GluingSpec& spec) {
        std::vector<std::pair<int, int>> key;
        std::vector<int> off(spec.sides.size() + 1, 0);
        for (std::size_t p = 0; p < spec.sides.size(); ++p) off[p + 1] = off[p] + spec.sides[p];
        for (const auto& pr : spec.pairings)
            key.push_back({off[pr.poly_a] + pr.edge_a, off[pr.poly_b] + pr.edge_b});
        std::sort(key.begin(), key.end());
        return key;
    }

    TilingSignature sig_;
    bool mirror_;
    int poly_count_ = 0, slot_count_ = 0, matched_pairs_ = 0;
    std::vector<int> sides_, offset_, match_;
    std::vector<int> corner_parent_, corner_size_, corner_open_;
    std::vector<int> poly_parent_, poly_parity_, matched_in_poly_;
    std::map<std::vector<std::uint8_t>, int> seen_;
    std::vector<EnumeratedDiagram> found_;
};

}  // namespace

DiagramReport verify_map(const SurfaceMap& map) {
    DiagramReport report;
    report.genus = map.genus();
    report.face_vector = map.face_vector();
    std::vector<int> sizes = report.face_vector;
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    report.vertex_pattern_ok =
        sizes.size() <= 2 && map.vertex_pattern(sizes.front(), sizes.back());
    auto coloring = map.checkerboard();
    report.colorable = coloring.ok();
    auto prime = map.weakly_prime();
    report.weakly_prime = prime.weakly_prime;
    report.witness = prime.witness;
    report.components = map.components();
    if (coloring.ok()) report.edge_class_sizes = map.gear_shift_edge_classes(*coloring.coloring);
    return report;
}

EnumerationResult enumerate_diagrams(const TilingSignature& sig, const SearchLimits& limits,
                                     bool mirror_quotient) {
    if (!sig.k_n || !sig.k_m)
        throw std::invalid_argument(
            "enumeration needs explicit polygon counts; use euclidean_signature for genus 1");
    if (*sig.k_n * sig.n != *sig.k_m * sig.m)
        throw std::invalid_argument("polygon counts do not balance: k_n n != k_m m");
    if (sig.genus == 1) {
        const bool euclid = (sig.n == 4 && sig.m == 4) || (sig.n == 3 && sig.m == 6);
        if (!euclid) throw std::invalid_argument("genus 1 admits only the (4,4) and (3,6) signatures");
    } else {
        const auto expect = signature_from_pair(sig.genus, sig.n, sig.m);
        if (!expect || *expect != sig)
            throw std::invalid_argument("not a valid tiling signature for this genus");
    }
    const long long slots = *sig.k_n * sig.n + *sig.k_m * sig.m;
    if (slots % 2 != 0) throw std::invalid_argument("odd number of polygon sides");
    const long long edges = slots / 2;
    if (edges > limits.max_edges) throw SearchTooLarge(static_cast<int>(edges), limits.max_edges);

    GluingSearch search(sig, mirror_quotient);
    search.run();
    EnumerationResult result;
    result.signature = sig;
    result.diagrams = search.take();
    for (const auto& d : result.diagrams)
        if (d.report.components == 1) ++result.knot_count;
    return result;
}

std::vector<EnumeratedDiagram> find_knots(const TilingSignature& sig, const SearchLimits& limits,
                                          bool mirror_quotient) {
    auto all = enumerate_diagrams(sig, limits, mirror_quotient);
    std::vector<EnumeratedDiagram> knots;
    for (auto& d : all.diagrams)
        if (d.report.components == 1) knots.push_back(std::move(d));
    return knots;
}

GluingSpec mirror_gluing(const GluingSpec& spec) {
    GluingSpec out = spec;
    for (auto& pr : out.pairings) {
        pr.edge_a = spec.sides[pr.poly_a] - 1 - pr.edge_a;
        pr.edge_b = spec.sides[pr.poly_b] - 1 - pr.edge_b;
    }
    return out;
}

}  // namespace rgcr
