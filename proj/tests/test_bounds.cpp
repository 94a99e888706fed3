#include <doctest.h>

#include "aif/bounds.hpp"
#include "aif/error.hpp"
#include "oracle.hpp"

using namespace aif;

namespace {

const oracle::Pascal& pascal() {
    static const oracle::Pascal p(420);
    return p;
}

}  // namespace

TEST_CASE("binomials") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(12, 4) == 495);
    CHECK(binom(5, 7) == 0);
    CHECK(binom(5, -1) == 0);
    for (int n = 0; n <= 80; ++n) {
        for (int k = 0; k <= n; ++k) CHECK(binom(n, k) == pascal()(n, k));
    }
    for (int n = 1; n <= 80; ++n) {
        for (int k = 1; k <= n; ++k) CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
    }
    CHECK(binom(286, 32) == pascal()(286, 32));
    CHECK(shared_binomials()(300, 150) == pascal()(300, 150));
}

TEST_CASE("closed forms") {
    CHECK(ekr_bound(6, 3) == 10);
    CHECK(ekr_bound(13, 3) == 66);
    for (int k = 1; k <= 10; ++k) CHECK(ekr_bound(2 * k, k) == binom(2 * k - 1, k - 1));
    CHECK_THROWS_AS(ekr_bound(5, 3), DomainError);

    CHECK(size_b_r(10, 4, 3) == 70);
    CHECK(size_b_r(10, 4, 4) == 70);
    for (int n = 9; n <= 20; ++n) {
        CHECK(delta_b_r(n, 4, 5) == binom(n - 1, 3) - binom(n - 5, 3));
        for (int r = 3; r <= 5; ++r) CHECK(delta_b_r(n, 4, r) == delta_b_r_telescoped(n, 4, r));
    }
    CHECK(size_b_r(11, 5, 4) < size_b_r(11, 5, 5));
    CHECK(size_b_r(11, 5, 5) < size_b_r(11, 5, 6));
    CHECK_THROWS_AS(size_b_r(10, 4, 6), DomainError);

    CHECK(size_b_plus(13, 3) == 32);
    for (int n = 13; n <= 30; ++n) CHECK(size_b_plus(n, 3) == 3 * n - 7);

    CHECK(ell_upper_bound(1) == 1);
    CHECK(ell_upper_bound(2) == 3);
    CHECK(ell_upper_bound(4) == 35);

    const auto c = cross_cap(10, 4, 3);
    CHECK(c.threshold == 49);
    CHECK(c.cap == 21);
    for (int n = 9; n <= 14; ++n) CHECK(cross_cap(n, 4, 4).cap == n - 4);
    CHECK(partner_cap(9, 4) == 46);
    for (int k = 2; k <= 8; ++k) CHECK(partner_cap(2 * k + 1, k) == binom(2 * k, k - 1) - binom(k + 1, k - 1));
}

TEST_CASE("set-pair systems") {
    SetPairSystem s{2, 1, 1, {{0b01, 0b10}, {0b10, 0b01}}};
    auto v = bollobas_check(s);
    CHECK(v.hypothesis_holds);
    CHECK(v.m == 2);
    CHECK(v.bound == 2);
    CHECK(v.within_bound);

    SetPairSystem bad{3, 1, 1, {{0b001, 0b010}, {0b100, 0b001}}};  // A_2 and B_1 are disjoint
    CHECK_FALSE(bollobas_check(bad).hypothesis_holds);

    SetPairSystem wrong{3, 1, 1, {{0b011, 0b100}}};
    CHECK_THROWS_AS(bollobas_check(wrong), ParamError);
    SetPairSystem meets{3, 1, 1, {{0b001, 0b001}}};
    CHECK_THROWS_AS(bollobas_check(meets), ParamError);
}

TEST_CASE("theorem cases") {
    CHECK(theorem_case(13, 3) == TheoremCase::i);
    CHECK(theorem_case(12, 3) == TheoremCase::outside);
    CHECK(theorem_case(15, 4) == TheoremCase::ii);
    CHECK(theorem_case(40, 10) == TheoremCase::ii);
    CHECK(theorem_case(31, 10) == TheoremCase::iii);
    CHECK(theorem_case(27, 10) == TheoremCase::outside);
    CHECK(theorem_case(30, 10) == TheoremCase::outside);  // 36 < 40
}

TEST_CASE("single inequality points") {
    const auto k6 = check_central_low(6);
    CHECK(k6.verdict == Verdict::pass);
    CHECK(k6.lhs == 495);
    CHECK(k6.rhs == 462);
    const auto k5 = check_central_low(5);
    CHECK(k5.verdict == Verdict::out_of_domain);
    // the inequality is false there, which is why k = 5 is excluded
    CHECK(pascal()(10, 3) < pascal()(9, 4));

    CHECK(tail_gap_boundary_n(9) == 28);
    CHECK(tail_gap_min_r(9) == 8);
    const auto g = check_tail_gap(28, 9, 8);
    CHECK(g.verdict == Verdict::pass);
    CHECK(g.lhs == pascal()(21, 3));
    CHECK(g.rhs == pascal()(19, 7));
    CHECK(check_tail_gap(27, 9, 8).verdict == Verdict::out_of_domain);
    CHECK(check_tail_gap(28, 9, 7).verdict == Verdict::out_of_domain);

    CHECK(check_large_n(15, 4).verdict == Verdict::pass);
    CHECK(check_large_n(14, 4).verdict == Verdict::out_of_domain);
    CHECK(check_tail_sum(10, 20, 3).verdict == Verdict::pass);
    CHECK(check_tail_sum(10, 20, 5).verdict == Verdict::out_of_domain);  // m - s < 2k - 4
}

TEST_CASE("inequality values agree with an independent evaluation") {
    const auto& C = pascal();
    for (int k = 4; k <= 60; ++k) {
        for (int n = 3 * k + 3; n <= 3 * k + 50; n += 7) {
            const auto p = check_large_n(n, k);
            const bool holds = C(n - 4, k - 3) + C(2 * k - 1, k - 1) <= C(n - 5, k - 2) + C(n - 5, k - 4);
            CHECK((p.verdict == Verdict::pass) == holds);
        }
    }
    for (int k = 10; k <= 40; k += 3) {
        for (int m = 2 * k - 4; m <= 3 * k + 2; m += 5) {
            for (int s = 0; m - s >= 2 * k - 4; s += 4) {
                oracle::Big sum = 0;
                for (int i = 0; i <= s; ++i) sum += C(m - i, k - 2);
                // sum >= (2 - 2^-s) C(m,k-2)
                const oracle::Big pow = oracle::Big(1) << s;
                const bool holds = pow * sum >= (2 * pow - 1) * C(m, k - 2);
                CHECK((check_tail_sum(k, m, s).verdict == Verdict::pass) == holds);
            }
        }
    }
}

TEST_CASE("lemma sweeps") {
    for (const char* id : {"central", "ratio", "tail", "large-n"}) {
        const auto r = check_lemma(parse_lemma(id), 1, 40, 2);
        CHECK(r.ok());
        CHECK(r.passed > 0);
        CHECK(r.out_of_domain > 0);
    }
    CHECK_THROWS_AS(parse_lemma("3.9"), ParamError);
    // results do not depend on the worker count
    const auto a = check_lemma(Lemma::tail, 9, 30, 1);
    const auto b = check_lemma(Lemma::tail, 9, 30, 3);
    CHECK(a.passed == b.passed);
    CHECK(a.out_of_domain == b.out_of_domain);
}
