#pragma once

// Exact binomial arithmetic, the closed-form size/degree formulas of the
// extremal families, and exhaustive checkers for the binomial inequalities
// used by the k >= 4 argument. Nothing in here touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "aif/family.hpp"

namespace aif {

using BigCount = boost::multiprecision::cpp_int;

/// C(n, k) by the multiplicative formula; 0 when k < 0 or k > n.
BigCount binom(long n, long k);

/// Pascal's triangle up to a fixed row, for grid sweeps that need many values.
class BinomialTable {
public:
    explicit BinomialTable(int max_n);

    int max_n() const { return max_n_; }
    /// Falls back to binom() beyond the table.
    BigCount operator()(long n, long k) const;
    const BigCount& at(int n, int k) const;  // requires 0 <= k <= n <= max_n

private:
    int max_n_;
    std::vector<std::vector<BigCount>> rows_;
};

/// Process-wide table with rows up to 420, built on first use.
const BinomialTable& shared_binomials();

BigCount ekr_bound(int n, int k);

/// |B_r(n,k)| = C(n-1,k-1) - C(n-r,k-1) + C(n-r,k-r+1), for 3 <= r <= k+1.
BigCount size_b_r(int n, int k, int r);
/// Delta(B_r) = C(n-1,k-1) - C(n-r,k-1).
BigCount delta_b_r(int n, int k, int r);
/// The same maximum degree as the sum C(n-2,k-2) + ... + C(n-r,k-2).
BigCount delta_b_r_telescoped(int n, int k, int r);

/// |B+| = C(n-1,k-1) - C(n-k-1,k-1) + 2, for n >= k+2.
BigCount size_b_plus(int n, int k);

/// C(2k-1, k-1): the cap on the number of disjoint pairs.
BigCount ell_upper_bound(int k);

struct SetPair {
    Mask a;
    Mask b;
};

struct SetPairSystem {
    int n = 0;
    int a = 0;  // |A_i|
    int b = 0;  // |B_i|
    std::vector<SetPair> pairs;
};

struct BollobasVerdict {
    bool hypothesis_holds = false;  // A_i and B_j meet for every i != j
    std::size_t m = 0;
    BigCount bound;                 // C(a+b, a)
    bool within_bound = false;      // only meaningful when hypothesis_holds
};

/// Throws ParamError if some pair has the wrong sizes or A_i meets B_i.
BollobasVerdict bollobas_check(const SetPairSystem& system);

struct CrossThreshold {
    BigCount threshold;  // |A| >= threshold ...
    BigCount cap;        // ... forces |B| <= cap
};

/// For n > 2k, k >= r >= 3.
CrossThreshold cross_cap(int n, int k, int r);
/// Cap on |A| once |B| >= k, for n > 2k > 2.
BigCount partner_cap(int n, int k);

enum class TheoremCase { i, ii, iii, outside };

std::string to_string(TheoremCase c);

/// Lowest-numbered case of the main bound that covers (n, k).
TheoremCase theorem_case(int n, int k);

// ---------------------------------------------------------------------------
// Inequality checkers
// ---------------------------------------------------------------------------

enum class Lemma { central, ratio, tail, large_n };

std::string to_string(Lemma l);
Lemma parse_lemma(const std::string& id);  // "central", "ratio", "tail", "large-n"

enum class Verdict { pass, fail, out_of_domain };

struct InequalityPoint {
    std::string inequality;  // e.g. "tail-sum"
    int k = 0;
    int n = 0;
    int m = 0;
    int s = 0;
    int r = 0;
    Verdict verdict = Verdict::out_of_domain;
    BigCount lhs;  // the side that is claimed to be at least / at most the other
    BigCount rhs;
};

// Single-point checks. Each evaluates the scaled inequality exactly; points
// outside the stated hypotheses come back out_of_domain without evaluation.
InequalityPoint check_central_low(int k);             // C(2k,k-2) >= C(2k-1,k-1), k >= 6
InequalityPoint check_central_high(int k);            // C(2k+1,k-2) >= C(2k-1,k-1), k >= 4
InequalityPoint check_ratio_upper(int k, int m);      // 2 C(m-1,k-2) >= C(m,k-2)
InequalityPoint check_ratio_lower(int k, int m);      // 3 C(m,k-2) >= 4 C(m-1,k-2)
InequalityPoint check_tail_sum(int k, int m, int s);  // sum_{i<=s} C(m-i,k-2) >= (2 - 2^-s) C(m,k-2)
InequalityPoint check_tail_gap(int n, int k, int r);  // C(n-r+1,k-r+2) < C(n-r-1,k-2)
InequalityPoint check_gap_monotone(int n, int k);     // g(n+1) < g(n)
InequalityPoint check_large_n(int n, int k);          // C(n-4,k-3) + C(2k-1,k-1) <= C(n-5,k-2) + C(n-5,k-4)

/// Smallest integer n with n >= 2(k + sqrt(k) + 2).
int tail_gap_boundary_n(int k);
/// Smallest integer r with r >= sqrt(k) + 5.
int tail_gap_min_r(int k);

struct LemmaReport {
    Lemma lemma;
    int k_lo = 0;
    int k_hi = 0;
    std::size_t passed = 0;
    std::size_t out_of_domain = 0;
    std::vector<InequalityPoint> failures;

    bool ok() const { return failures.empty(); }
};

/// Sweeps the standard grid for one lemma over k in [k_lo, k_hi]:
///   central: both inequalities at every k.
///   ratio: m in [2k-4, 3k+2], s with m - s >= 2k-4.
///   tail: n from the boundary up to max(boundary, 3k+2), r in [min_r, k],
///        plus the monotonicity of g(n) for n in [2k, 3k+2].
///   large-n: n in [3k+3, 3k+50].
LemmaReport check_lemma(Lemma lemma, int k_lo, int k_hi, int jobs = 1);

}  // namespace aif
