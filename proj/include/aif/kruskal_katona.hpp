#pragma once

// Shadows and cross-intersecting families over a ground interval X = [lo, hi].
// Families here live on [hi]; members are required to sit inside X where the
// operation says so.

#include <cstdint>
#include <random>

#include "aif/constructions.hpp"
#include "aif/family.hpp"

namespace aif {

struct CrossPair {
    SetFamily fam_a;
    SetFamily fam_b;
    Interval x;
};

/// Every member of a meets every member of b. Both families must share n.
bool is_cross_intersecting(const SetFamily& a, const SetFamily& b);
bool is_cross_intersecting(const CrossPair& p);

/// All b-sets contained in some member of f.
SetFamily shadow(const SetFamily& f, int b);

/// Are L(size_a, X, a) and L(size_b, X, b) cross-intersecting?
bool lex_compress_check(std::uint64_t size_a, std::uint64_t size_b, Interval x, int a, int b);

/// All b-subsets of X meeting every member of f: the largest family that is
/// cross-intersecting with f.
SetFamily max_cross_partner(const SetFamily& f, int b, Interval x);

/// A cross-intersecting pair (A, B) with A a-uniform and B b-uniform inside X.
/// A is drawn from one of a few shapes (sparse random, meeting a random small
/// set, inside a star); B is a random subfamily of max_cross_partner(A).
CrossPair random_cross_pair(std::mt19937_64& rng, Interval x, int a, int b);

}  // namespace aif
