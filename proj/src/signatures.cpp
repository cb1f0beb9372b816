#include "rgcr/signatures.hpp"

#include <algorithm>
#include <numeric>

namespace rgcr {

namespace {

// Solves 4(g-1) = k_n (n - 2 - 2n/m) for integer k_n, k_m given (g, n, m).
// Clearing denominators: k_n = 4(g-1) m / (nm - 2m - 2n). The denominator is
// positive exactly when (n-2)(m-2) > 4, i.e. the tiling is hyperbolic.
std::optional<TilingSignature> solve_counts(int genus, int n, int m) {
    const long long den = 1LL * n * m - 2LL * m - 2LL * n;
    if (den <= 0) return std::nullopt;
    const long long num = 4LL * (genus - 1) * m;
    if (num % den != 0) return std::nullopt;
    const long long k_n = num / den;
    if (k_n <= 0) return std::nullopt;
    if (k_n * n % m != 0) return std::nullopt;
    const long long k_m = k_n * n / m;
    if (k_m <= 0) return std::nullopt;
    return TilingSignature{genus, n, m, k_n, k_m};
}

}  // namespace

std::vector<TilingSignature> enumerate_signatures(int genus) {
    if (genus < 1) throw std::invalid_argument("genus must be at least 1");
    std::vector<TilingSignature> out;
    if (genus == 1) {
        // The Euclidean equations degenerate to 0 = k_n (n - 2 - 2n/m), so the
        // only vertex types are [4,4,4,4] and [3,6,3,6] and the counts are
        // unconstrained.
        out.push_back(TilingSignature{1, 4, 4, std::nullopt, std::nullopt});
        out.push_back(TilingSignature{1, 3, 6, std::nullopt, std::nullopt});
    } else {
        // m <= 12g-6 is exhaustive for g >= 2; brute force the window.
        const int m_max = 12 * genus - 6;
        for (int m = 3; m <= m_max; ++m)
            for (int n = 3; n <= m; ++n)
                if (auto sig = solve_counts(genus, n, m)) out.push_back(*sig);
    }
    std::sort(out.begin(), out.end(), [](const TilingSignature& a, const TilingSignature& b) {
        return std::pair(a.m, a.n) < std::pair(b.m, b.n);
    });
    return out;
}

std::optional<TilingSignature> signature_from_pair(int genus, int n, int m) {
    if (genus < 2) throw std::invalid_argument("signature_from_pair requires genus >= 2");
    if (n < 3 || m < 3) throw std::invalid_argument("polygons need at least 3 sides");
    if (n > m) std::swap(n, m);
    return solve_counts(genus, n, m);
}

CountBound count_bounds(int genus) {
    if (genus < 2) throw std::domain_error("count_bounds is defined for genus >= 2");
    const BigInt g = genus;
    const BigRational pair = BigRational(310 * g * g - 303 * g + 36, 9);
    return CountBound{pair, pair * BigRational(factorial(84 * genus - 83))};
}

TilingSignature special_case_k1(int genus) {
    if (genus < 2) throw std::invalid_argument("special_case_k1 requires genus >= 2");
    return TilingSignature{genus, 4 * genus, 4 * genus, 1, 1};
}

TilingSignature euclidean_signature(int n, int m, long long scale) {
    if (n > m) std::swap(n, m);
    const bool ok = (n == 4 && m == 4) || (n == 3 && m == 6);
    if (!ok) throw std::invalid_argument("Euclidean signatures are (4,4) and (3,6) only");
    if (scale < 1) throw std::invalid_argument("scale must be positive");
    const long long g = std::gcd(n, m);
    return TilingSignature{1, n, m, scale * m / g, scale * n / g};
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    BigInt acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

}  // namespace rgcr
