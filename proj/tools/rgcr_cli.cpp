#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rgcr/enumerate.hpp"
#include "rgcr/geometry.hpp"
#include "rgcr/gluing.hpp"
#include "rgcr/signatures.hpp"

namespace {

// All numeric output at fixed 12 significant digits so runs are
// byte-reproducible.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string rational_str(const rgcr::BigRational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

// FNV-1a over the canonical form; a stable short id for a diagram class.
std::string canonical_id(const std::vector<std::uint8_t>& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

constexpr double kPi = 3.14159265358979323846;

int cmd_signatures(int genus) {
    const auto sigs = rgcr::enumerate_signatures(genus);
    for (const auto& s : sigs) {
        std::cout << s.genus << " " << s.m << " " << s.n << " ";
        if (s.k_m) std::cout << *s.k_m << " " << *s.k_n << "\n";
        else std::cout << "- -\n";
    }
    std::cout << sigs.size() << " signatures\n";
    return 0;
}

int cmd_bound(int genus) {
    const auto b = rgcr::count_bounds(genus);
    std::cout << "pair_bound " << rational_str(b.pair_bound) << "\n";
    std::cout << "factorial_term (84g-83)! = " << 84 * genus - 83 << "!\n";
    std::cout << "link_bound " << rational_str(b.link_bound) << "\n";
    return 0;
}

int cmd_geometry(int n, int m, double tolerance) {
    const auto [alpha_n, alpha_m] = rgcr::interior_angles(n, m);
    const auto poly_n = rgcr::polygon_geometry(n, alpha_n);
    const auto poly_m = rgcr::polygon_geometry(m, alpha_m);
    std::cout << "vertex_type [" << n << "," << m << "," << n << "," << m << "]"
              << (poly_n.flat ? " euclidean" : " hyperbolic") << "\n";
    std::cout << "alpha_" << n << " " << fmt(alpha_n) << " rad  " << fmt(alpha_n * 180.0 / kPi)
              << " deg\n";
    std::cout << "alpha_" << m << " " << fmt(alpha_m) << " rad  " << fmt(alpha_m * 180.0 / kPi)
              << " deg\n";
    std::cout << "edge_length_" << n << " " << fmt(poly_n.edge_length) << "\n";
    std::cout << "edge_length_" << m << " " << fmt(poly_m.edge_length) << "\n";
    std::cout << "area_" << n << " " << fmt(poly_n.area) << "\n";
    std::cout << "area_" << m << " " << fmt(poly_m.area) << "\n";
    for (int x : {n, m}) {
        const auto w = rgcr::wedge_angles(x, x == n ? alpha_n : alpha_m);
        std::cout << "wedge_" << x << " A " << fmt(w.A) << "  B C E F " << fmt(w.B) << "  D "
                  << fmt(w.D) << "\n";
    }
    const double dihedral = rgcr::dihedral_check(alpha_n, alpha_m);
    std::cout << "dihedral_check " << fmt(dihedral) << " rad  "
              << (std::abs(dihedral - kPi / 2) <= tolerance ? "right_angled" : "not_right_angled")
              << "\n";
    for (int x : {n, m}) {
        std::cout << "cross_ratio_" << x << " ";
        try {
            std::cout << fmt(rgcr::regular_cross_ratio(x)) << "\n";
        } catch (const std::domain_error&) {
            std::cout << "singular\n";
        }
        if (m == n) break;
    }
    return 0;
}

void print_report(const rgcr::DiagramReport& r) {
    std::cout << "genus " << r.genus << "\n";
    std::cout << "faces " << join_ints(r.face_vector) << "\n";
    std::cout << "vertex_pattern " << (r.vertex_pattern_ok ? "ok" : "fail") << "\n";
    std::cout << "checkerboard " << (r.colorable ? "ok" : "fail") << "\n";
    std::cout << "cellular " << (r.cellular ? "ok" : "fail") << "\n";
    std::cout << "weakly_prime " << (r.weakly_prime ? "ok" : "fail");
    if (r.witness)
        std::cout << "  witness: curve through faces " << r.witness->face_a << "," << r.witness->face_b
                  << " crossing edges " << r.witness->edge_a << "," << r.witness->edge_b
                  << " cuts off a disk with " << r.witness->disk_vertices << " crossing(s)";
    std::cout << "\n";
    std::cout << "components " << r.components << "\n";
    std::cout << "edge_classes " << join_ints(r.edge_class_sizes) << "\n";
}

int cmd_verify(const std::string& path) {
    const auto spec = rgcr::parse_diagram_file(path);
    const auto map = rgcr::from_gluing(spec);
    const auto report = rgcr::verify_map(map);
    print_report(report);
    const bool pass = report.vertex_pattern_ok && report.colorable && report.cellular &&
                      report.weakly_prime;
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 2;
}

rgcr::TilingSignature resolve_signature(int genus, int n, int m, long long kn) {
    if (n > m) std::swap(n, m);
    if (genus == 1) {
        const auto minimal = rgcr::euclidean_signature(n, m);
        if (kn > 0) {
            if (kn % *minimal.k_n != 0)
                throw std::invalid_argument("k_n must be a multiple of " +
                                            std::to_string(*minimal.k_n));
            return rgcr::euclidean_signature(n, m, kn / *minimal.k_n);
        }
        return minimal;
    }
    auto sig = rgcr::signature_from_pair(genus, n, m);
    if (!sig)
        throw std::invalid_argument("no [" + std::to_string(n) + "," + std::to_string(m) +
                                    "] signature at genus " + std::to_string(genus));
    if (kn > 0 && kn != *sig->k_n)
        throw std::invalid_argument("k_n is determined by (genus, n, m) and equals " +
                                    std::to_string(*sig->k_n));
    return *sig;
}

int cmd_enumerate(int genus, int n, int m, long long kn, const std::string& out_dir, int max_edges,
                  bool no_mirror, bool knots_only) {
    const auto sig = resolve_signature(genus, n, m, kn);
    rgcr::SearchLimits limits;
    limits.max_edges = max_edges;
    auto result = rgcr::enumerate_diagrams(sig, limits, !no_mirror);
    std::cout << "signature genus=" << sig.genus << " n=" << sig.n << " m=" << sig.m
              << " k_n=" << *sig.k_n << " k_m=" << *sig.k_m << "\n";
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    int shown = 0;
    for (std::size_t i = 0; i < result.diagrams.size(); ++i) {
        const auto& d = result.diagrams[i];
        if (knots_only && d.report.components != 1) continue;
        std::cout << "diagram " << shown << ": id=" << canonical_id(d.canonical)
                  << " genus=" << d.report.genus << " components=" << d.report.components
                  << " faces=[" << join_ints(d.report.face_vector) << "] edge_classes=["
                  << join_ints(d.report.edge_class_sizes) << "]"
                  << (d.report.components == 1 ? " knot" : "") << "\n";
        if (!out_dir.empty()) {
            char name[64];
            std::snprintf(name, sizeof(name), "diagram_%03d.diagram", shown);
            std::ofstream f(std::filesystem::path(out_dir) / name);
            f << "# id " << canonical_id(d.canonical) << ", genus " << d.report.genus
              << ", components " << d.report.components << "\n";
            rgcr::write_diagram(f, d.gluing);
        }
        ++shown;
    }
    if (knots_only)
        std::cout << shown << " knots\n";
    else
        std::cout << result.diagrams.size() << " diagrams, " << result.knot_count << " knots\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify and enumerate alternating link diagrams on thickened surfaces\n"
                 "built from quasiregular [n,m,n,m] tilings"};
    app.require_subcommand(1);

    int genus = 2, n = 8, m = 8, max_edges = 24;
    long long kn = 0;
    double tolerance = 1e-9;
    std::string file, out_dir;
    bool no_mirror = false;

    auto* sig_cmd = app.add_subcommand("signatures", "List tiling signatures for a genus");
    sig_cmd->add_option("--genus", genus, "Projection surface genus")->required();

    auto* bound_cmd = app.add_subcommand("bound", "Counting bounds for a genus");
    bound_cmd->add_option("--genus", genus, "Projection surface genus")->required();

    auto* geo_cmd = app.add_subcommand("geometry", "Hyperbolic data of the [n,m,n,m] tiling");
    geo_cmd->add_option("--n", n, "Sides of the first polygon")->required();
    geo_cmd->add_option("--m", m, "Sides of the second polygon")->required();
    geo_cmd->add_option("--tolerance", tolerance, "Numeric tolerance for checks");

    auto* verify_cmd = app.add_subcommand("verify", "Verify a diagram file");
    verify_cmd->add_option("file", file, "Diagram file")->required();

    auto add_search_opts = [&](CLI::App* cmd) {
        cmd->add_option("--genus", genus, "Projection surface genus")->required();
        cmd->add_option("--n", n, "Sides of the first polygon")->required();
        cmd->add_option("--m", m, "Sides of the second polygon")->required();
        cmd->add_option("--kn", kn, "Polygon count k_n (genus 1 only; derived otherwise)");
        cmd->add_option("--out", out_dir, "Directory for diagram files");
        cmd->add_option("--max-edges", max_edges, "Edge cap for the search");
        cmd->add_flag("--no-mirror-quotient", no_mirror,
                      "Count a diagram and its mirror image separately");
    };
    auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate diagrams realizing a signature");
    add_search_opts(enum_cmd);
    auto* knot_cmd = app.add_subcommand("knot-search", "Enumerate only single-component diagrams");
    add_search_opts(knot_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sig_cmd->parsed()) return cmd_signatures(genus);
        if (bound_cmd->parsed()) return cmd_bound(genus);
        if (geo_cmd->parsed()) return cmd_geometry(n, m, tolerance);
        if (verify_cmd->parsed()) return cmd_verify(file);
        if (enum_cmd->parsed()) return cmd_enumerate(genus, n, m, kn, out_dir, max_edges, no_mirror, false);
        if (knot_cmd->parsed()) return cmd_enumerate(genus, n, m, kn, out_dir, max_edges, no_mirror, true);
    } catch (const rgcr::SearchTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rgcr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const rgcr::GluingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rgcr::MapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
