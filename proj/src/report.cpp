#include "aif/report.hpp"

#include <random>

#include "aif/error.hpp"
#include "aif/kruskal_katona.hpp"

namespace aif {

namespace {

std::string point(int n, int k) { return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")"; }

void check_grid(int k_lo, int k_hi, int n_max) {
    if (k_lo < 2 || k_hi < k_lo || n_max > kMaxGround) throw ParamError("bad formula grid");
    if (count_subsets(n_max, n_max / 2) > kEnumerationLimit) throw ResourceError("formula grid too large to enumerate");
}

}  // namespace

FormulaCheck verify_formulas(int k_lo, int k_hi, int n_max) {
    check_grid(k_lo, k_hi, n_max);
    FormulaCheck out;
    out.k_lo = k_lo;
    out.k_hi = k_hi;
    out.n_max = n_max;
    auto compare = [&](const char* what, int n, int k, int r, const BigCount& formula, const BigCount& counted) {
        ++out.comparisons;
        if (formula != counted) out.mismatches.push_back({what, n, k, r, formula, counted});
    };
    auto relation = [&](bool holds, const std::string& what, int n, int k) {
        ++out.chain_checks;
        if (!holds) out.chain_failures.push_back(what + " fails at " + point(n, k));
    };

    for (int k = k_lo; k <= k_hi; ++k) {
        for (int n = 2 * k + 1; n <= n_max; ++n) {
            ++out.points;
            std::vector<BigCount> sizes;  // enumerated |B_r|, r = 3..k+1
            for (int r = 3; r <= k + 1; ++r) {
                const SetFamily f = b_r(n, k, r);
                sizes.emplace_back(f.size());
                compare("size_b_r", n, k, r, size_b_r(n, k, r), sizes.back());
                compare("delta_b_r", n, k, r, delta_b_r(n, k, r), BigCount(max_degree(f).value));
            }
            const BigCount plus(b_plus(n, k).size());
            compare("size_b_plus", n, k, 0, size_b_plus(n, k), plus);
            compare("ekr", n, k, 0, ekr_bound(n, k), BigCount(full_star(n, k, 1).size()));

            if (k >= 3) relation(sizes[0] == sizes[1], "|B_3| = |B_4|", n, k);
            for (std::size_t i = 2; i < sizes.size(); ++i) {
                relation(sizes[i - 1] < sizes[i], "|B_" + std::to_string(i + 2) + "| < |B_" + std::to_string(i + 3) + "|", n, k);
            }
            relation(binom(n - 2, k - 2) + 2 <= sizes.front(), "C(n-2,k-2)+2 <= |B_3|", n, k);
            relation(sizes.front() <= sizes.back(), "|B_3| <= |B_{k+1}|", n, k);
            relation(sizes.back() < plus, "|B_{k+1}| < |B+|", n, k);
        }
    }
    return out;
}

std::vector<BoundRow> bound_table(int k_lo, int k_hi, int n_lo, int n_hi) {
    if (k_lo < 2 || k_hi < k_lo || n_hi > kMaxGround || 2 * k_lo + 1 > n_hi) throw ParamError("bad report grid");
    std::vector<BoundRow> rows;
    for (int k = k_lo; k <= k_hi; ++k) {
        for (int n = std::max(n_lo, 2 * k + 1); n <= n_hi; ++n) {
            BoundRow row;
            row.n = n;
            row.k = k;
            row.ekr = ekr_bound(n, k);
            row.b_plus = size_b_plus(n, k);
            for (int r = 3; r <= k + 1; ++r) {
                row.b_r.push_back(size_b_r(n, k, r));
                row.delta_r.push_back(delta_b_r(n, k, r));
            }
            row.ell_cap = ell_upper_bound(k);
            row.theorem_case = theorem_case(n, k);
            if (n <= kRowEnumerationMax) {
                row.enumerated = true;
                row.enumeration_agrees = row.ekr == full_star(n, k, 1).size() && row.b_plus == b_plus(n, k).size();
                for (int r = 3; r <= k + 1; ++r) {
                    const SetFamily f = b_r(n, k, r);
                    row.enumeration_agrees = row.enumeration_agrees && row.b_r[r - 3] == f.size() &&
                                             row.delta_r[r - 3] == max_degree(f).value;
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

CompressionSuite compression_suite(std::uint64_t seed, Interval x, int a, int b, int trials) {
    if (trials < 0) throw ParamError("trials must be nonnegative");
    CompressionSuite out;
    out.x = x;
    out.a = a;
    out.b = b;
    out.trials = trials;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const CrossPair p = random_cross_pair(rng, x, a, b);
        if (!is_cross_intersecting(p)) {
            ++out.not_cross;
            continue;
        }
        if (lex_compress_check(p.fam_a.size(), p.fam_b.size(), x, a, b)) ++out.preserved;
    }
    return out;
}

}  // namespace aif
