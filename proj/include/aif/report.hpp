#pragma once

// Grid-level cross checks: closed forms against enumerated constructions,
// the bound table behind `report`, and the seeded compression suite.

#include <cstdint>
#include <string>
#include <vector>

#include "aif/bounds.hpp"
#include "aif/constructions.hpp"

namespace aif {

struct FormulaMismatch {
    std::string quantity;  // "size_b_r", "delta_b_r", "size_b_plus", "ekr"
    int n = 0;
    int k = 0;
    int r = 0;
    BigCount formula;
    BigCount enumerated;
};

struct FormulaCheck {
    int k_lo = 0;
    int k_hi = 0;
    int n_max = 0;
    std::size_t points = 0;        // (n,k) pairs visited
    std::size_t comparisons = 0;   // formula/enumeration comparisons made
    std::size_t chain_checks = 0;  // ordering relations checked
    std::vector<FormulaMismatch> mismatches;
    std::vector<std::string> chain_failures;

    bool ok() const { return mismatches.empty() && chain_failures.empty(); }
};

/// For k in [k_lo, k_hi], n in [2k+1, n_max], r in [3, k+1]: sizes and maximum
/// degrees of the enumerated families against the closed forms, plus
///   |B_3| = |B_4|,  |B_4| < ... < |B_{k+1}|,
///   C(n-2,k-2) + 2 <= |B_3| <= |B_{k+1}| < |B+|.
FormulaCheck verify_formulas(int k_lo, int k_hi, int n_max);

struct BoundRow {
    int n = 0;
    int k = 0;
    BigCount ekr;
    BigCount b_plus;
    std::vector<BigCount> b_r;      // r = 3..k+1
    std::vector<BigCount> delta_r;  // r = 3..k+1
    BigCount ell_cap;
    TheoremCase theorem_case = TheoremCase::outside;
    bool enumerated = false;        // rows with n <= kRowEnumerationMax
    bool enumeration_agrees = true;
};

inline constexpr int kRowEnumerationMax = 14;

/// Rows for k in [k_lo, k_hi] and n in [max(n_lo, 2k+1), n_hi].
std::vector<BoundRow> bound_table(int k_lo, int k_hi, int n_lo, int n_hi);

struct CompressionSuite {
    Interval x;
    int a = 0;
    int b = 0;
    int trials = 0;
    int preserved = 0;  // pairs whose lex compression is still cross-intersecting
    int not_cross = 0;  // generator produced a pair that is not cross-intersecting

    bool ok() const { return preserved == trials && not_cross == 0; }
};

/// Random cross-intersecting pairs on X, each checked against the lex pair
/// of the same sizes.
CompressionSuite compression_suite(std::uint64_t seed, Interval x, int a, int b, int trials);

}  // namespace aif
