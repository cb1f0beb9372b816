#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rgcr {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// One quasiregular [n,m,n,m] tiling type compatible with a genus-g
/// projection surface: k_n regular n-gons and k_m regular m-gons.
/// Counts are absent for genus 1, where the Euclidean equations leave
/// the number of polygons unconstrained.
struct TilingSignature {
    int genus = 0;
    int n = 0;  // n <= m throughout
    int m = 0;
    std::optional<long long> k_n;
    std::optional<long long> k_m;

    bool euclidean() const { return genus == 1; }

    friend bool operator==(const TilingSignature&, const TilingSignature&) = default;
};

/// Upper bounds on tiling pairs and on links for a fixed genus, kept as
/// exact rationals; the pair bound is not an integer for every genus.
struct CountBound {
    BigRational pair_bound;
    BigRational link_bound;  // pair_bound * (84g - 83)!
};

/// All (n, m, k_n, k_m) with 3 <= n <= m solving
///   4(g-1) = k_n (n - 2 - 2n/m) = k_m (m - 2 - 2m/n)
/// in positive integers, sorted by (m, n). Genus 1 returns the two
/// Euclidean signatures (4,4) and (3,6) with unbounded counts.
/// Throws std::invalid_argument for genus < 1.
std::vector<TilingSignature> enumerate_signatures(int genus);

/// The unique signature for (genus, n, m) if the polygon counts come out
/// as positive integers; empty otherwise. genus >= 2, n, m >= 3.
std::optional<TilingSignature> signature_from_pair(int genus, int n, int m);

/// pair_bound = 310g^2/9 - 101g/3 + 4, link_bound = pair_bound * (84g-83)!.
/// Exact arithmetic; genus < 2 is out of domain.
CountBound count_bounds(int genus);

/// The single signature with k_n = k_m = 1: one n-gon and one m-gon with
/// n = m = 4g. genus >= 2.
TilingSignature special_case_k1(int genus);

/// A Euclidean signature with explicit counts k_n = scale*m/gcd(n,m),
/// k_m = scale*n/gcd(n,m), the minimal solution of k_n n = k_m m scaled.
/// Only (4,4) and (3,6) are accepted.
TilingSignature euclidean_signature(int n, int m, long long scale = 1);

BigInt factorial(int n);

}  // namespace rgcr
