#include "rgcr/gluing.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>

namespace rgcr {

int GluingSpec::total_slots() const {
    return std::accumulate(sides.begin(), sides.end(), 0);
}

SurfaceMap from_gluing(const GluingSpec& spec) {
    const int P = spec.polygon_count();
    if (P == 0) throw GluingError("no polygons");
    for (int p = 0; p < P; ++p)
        if (spec.sides[p] < 1) throw GluingError("polygon " + spec.names[p] + " has no sides");

    std::vector<int> offset(P + 1, 0);
    for (int p = 0; p < P; ++p) offset[p + 1] = offset[p] + spec.sides[p];
    const int slots = offset[P];
    auto slot_id = [&](int p, int i) { return offset[p] + i; };

    std::vector<int> partner(slots, -1);
    for (const auto& pr : spec.pairings) {
        for (auto [p, i] : {std::pair{pr.poly_a, pr.edge_a}, std::pair{pr.poly_b, pr.edge_b}}) {
            if (p < 0 || p >= P) throw GluingError("pairing references unknown polygon");
            if (i < 0 || i >= spec.sides[p])
                throw GluingError("pairing references edge " + std::to_string(i) + " of polygon " +
                                  spec.names[p] + " which has " + std::to_string(spec.sides[p]) + " sides");
        }
        const int a = slot_id(pr.poly_a, pr.edge_a);
        const int b = slot_id(pr.poly_b, pr.edge_b);
        if (a == b) throw GluingError("side glued to itself: " + spec.names[pr.poly_a] + "." +
                                      std::to_string(pr.edge_a));
        if (partner[a] >= 0 || partner[b] >= 0) throw GluingError("duplicate edge reference in gluing");
        partner[a] = b;
        partner[b] = a;
    }
    for (int s = 0; s < slots; ++s)
        if (partner[s] < 0) {
            const int p = int(std::upper_bound(offset.begin(), offset.end(), s) - offset.begin()) - 1;
            throw GluingError("incomplete gluing: side " + spec.names[p] + "." +
                              std::to_string(s - offset[p]) + " is unmatched");
        }

    // Orient: choose a flip per polygon so that every pairing becomes
    // head-to-tail. Head-to-tail wants equal flips, head-to-head opposite.
    std::vector<int> flip(P, -1);
    for (int start = 0; start < P; ++start) {
        if (flip[start] >= 0) continue;
        flip[start] = 0;
        std::vector<int> queue{start};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int p = queue[qi];
            for (const auto& pr : spec.pairings) {
                if (pr.poly_a != p && pr.poly_b != p) continue;
                const int q = pr.poly_a == p ? pr.poly_b : pr.poly_a;
                const int want = pr.parallel ? 1 - flip[p] : flip[p];
                if (flip[q] < 0) {
                    flip[q] = want;
                    queue.push_back(q);
                } else if (flip[q] != want) {
                    throw GluingError("non-orientable quotient: inconsistent orientation flags");
                }
            }
        }
    }

    // Flipping a polygon reflects its boundary: old side j becomes slot
    // sides-1-j, traversed backwards.
    auto dart_of = [&](int p, int j) {
        return slot_id(p, flip[p] ? spec.sides[p] - 1 - j : j);
    };
    std::vector<Dart> inv(slots, -1);
    for (const auto& pr : spec.pairings) {
        const Dart a = dart_of(pr.poly_a, pr.edge_a);
        const Dart b = dart_of(pr.poly_b, pr.edge_b);
        inv[a] = b;
        inv[b] = a;
    }
    // rotation(d) = successor of the opposite dart inside its polygon; this
    // makes the face orbits exactly the polygon boundaries.
    std::vector<Dart> rot(slots);
    for (int p = 0; p < P; ++p)
        for (int i = 0; i < spec.sides[p]; ++i) {
            const Dart d = slot_id(p, i);
            const Dart e = inv[d];
            const int q = int(std::upper_bound(offset.begin(), offset.end(), e) - offset.begin()) - 1;
            rot[d] = offset[q] + (e - offset[q] + 1) % spec.sides[q];
        }
    return SurfaceMap(std::move(rot), std::move(inv));
}

namespace {

struct Tokenizer {
    std::istream& in;
    int line_no = 0;
    std::vector<std::string> fields = {};

    bool next_line() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            std::istringstream ss(line);
            fields.assign(std::istream_iterator<std::string>(ss), {});
            if (!fields.empty()) return true;
        }
        return false;
    }
};

std::pair<std::string, int> split_ref(const std::string& tok, int line) {
    const auto dot = tok.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == tok.size())
        throw ParseError("expected <polygon>.<edge>, got '" + tok + "'", line);
    int edge = 0;
    try {
        std::size_t used = 0;
        edge = std::stoi(tok.substr(dot + 1), &used);
        if (used != tok.size() - dot - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("bad edge index in '" + tok + "'", line);
    }
    return {tok.substr(0, dot), edge};
}

}  // namespace

GluingSpec parse_diagram(std::istream& in) {
    Tokenizer tok{in};
    GluingSpec spec;
    if (!tok.next_line() || tok.fields[0] != "polygons" || tok.fields.size() != 2)
        throw ParseError("expected 'polygons <count>'", tok.line_no);
    int count = 0;
    try {
        count = std::stoi(tok.fields[1]);
    } catch (const std::exception&) {
        throw ParseError("bad polygon count '" + tok.fields[1] + "'", tok.line_no);
    }
    if (count < 1) throw ParseError("polygon count must be positive", tok.line_no);

    std::map<std::string, int> index;
    for (int k = 0; k < count; ++k) {
        if (!tok.next_line()) throw ParseError("expected polygon line '<id> <sides>'", tok.line_no + 1);
        if (tok.fields.size() != 2) throw ParseError("expected '<id> <sides>'", tok.line_no);
        const std::string& name = tok.fields[0];
        if (index.count(name)) throw ParseError("duplicate polygon id '" + name + "'", tok.line_no);
        int sides = 0;
        try {
            sides = std::stoi(tok.fields[1]);
        } catch (const std::exception&) {
            throw ParseError("bad side count '" + tok.fields[1] + "'", tok.line_no);
        }
        if (sides < 1) throw ParseError("polygon must have at least one side", tok.line_no);
        index[name] = spec.polygon_count();
        spec.names.push_back(name);
        spec.sides.push_back(sides);
    }

    if (!tok.next_line() || tok.fields[0] != "gluing" || tok.fields.size() != 1)
        throw ParseError("expected 'gluing'", tok.line_no);

    std::vector<int> seen_line(spec.total_slots(), 0);
    std::vector<int> offset(count + 1, 0);
    for (int p = 0; p < count; ++p) offset[p + 1] = offset[p] + spec.sides[p];

    while (tok.next_line()) {
        if (tok.fields.size() != 3)
            throw ParseError("expected '<idA>.<edgeA> <idB>.<edgeB> <+|->'", tok.line_no);
        GluingSpec::Pairing pr;
        for (int side = 0; side < 2; ++side) {
            auto [name, edge] = split_ref(tok.fields[side], tok.line_no);
            auto it = index.find(name);
            if (it == index.end()) throw ParseError("unknown polygon id '" + name + "'", tok.line_no);
            const int p = it->second;
            if (edge < 0 || edge >= spec.sides[p])
                throw ParseError("edge index " + std::to_string(edge) + " out of range for '" + name +
                                     "' with " + std::to_string(spec.sides[p]) + " sides",
                                 tok.line_no);
            (side == 0 ? pr.poly_a : pr.poly_b) = p;
            (side == 0 ? pr.edge_a : pr.edge_b) = edge;
        }
        if (tok.fields[2] == "+") pr.parallel = true;
        else if (tok.fields[2] == "-") pr.parallel = false;
        else throw ParseError("orientation flag must be '+' or '-'", tok.line_no);

        for (auto [p, e] : {std::pair{pr.poly_a, pr.edge_a}, std::pair{pr.poly_b, pr.edge_b}}) {
            const int slot = offset[p] + e;
            if (seen_line[slot])
                throw ParseError("edge " + spec.names[p] + "." + std::to_string(e) +
                                     " already glued on line " + std::to_string(seen_line[slot]),
                                 tok.line_no);
            seen_line[slot] = tok.line_no;
        }
        spec.pairings.push_back(pr);
    }

    for (int s = 0; s < spec.total_slots(); ++s)
        if (!seen_line[s]) {
            const int p = int(std::upper_bound(offset.begin(), offset.end(), s) - offset.begin()) - 1;
            throw ParseError("edge " + spec.names[p] + "." + std::to_string(s - offset[p]) +
                                 " is never glued",
                             tok.line_no + 1);
        }
    return spec;
}

GluingSpec parse_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_diagram(in);
}

void write_diagram(std::ostream& out, const GluingSpec& spec) {
    out << "polygons " << spec.polygon_count() << "\n";
    for (int p = 0; p < spec.polygon_count(); ++p)
        out << spec.names[p] << " " << spec.sides[p] << "\n";
    out << "gluing\n";
    for (const auto& pr : spec.pairings)
        out << spec.names[pr.poly_a] << "." << pr.edge_a << " " << spec.names[pr.poly_b] << "."
            << pr.edge_b << " " << (pr.parallel ? '+' : '-') << "\n";
}

std::string diagram_to_string(const GluingSpec& spec) {
    std::ostringstream out;
    write_diagram(out, spec);
    return out.str();
}

}  // namespace rgcr
