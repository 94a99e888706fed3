// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aif/bounds.hpp"
#include "aif/constructions.hpp"
#include "aif/kruskal_katona.hpp"
#include "aif/partition.hpp"
#include "aif/report.hpp"
#include "aif/search.hpp"
#include "oracle.hpp"

using namespace aif;

namespace {

struct Result {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

const oracle::Pascal& pascal() {
    static const oracle::Pascal p(420);
    return p;
}

SearchOutcome search(int n, int k, bool rules = true, int jobs = 1) {
    SearchProblem p;
    p.params = Params::make(n, k);
    p.k3_rules = rules;
    p.jobs = jobs;
    return max_almost_intersecting(p);
}

bool complete_on_four(const SetFamily& f) {
    Mask support = 0;
    for (Mask m : f.masks()) support |= m;
    return f.params().k == 2 && f.size() == 6 && std::popcount(support) == 4;
}

bool same_classes(const std::vector<SetFamily>& a, const std::vector<SetFamily>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& f : a) {
        bool found = false;
        for (const auto& g : b) found = found || family_isomorphic(f, g).has_value();
        if (!found) return false;
    }
    return true;
}

SetFamily to_family(int n, int k, const oracle::Family& f) {
    std::vector<Mask> masks;
    for (const auto& s : f) masks.push_back(mask_of(s));
    return SetFamily(Params::make(n, k), masks);
}

// ---------------------------------------------------------------------------

void k2_optima(Result& r) {
    for (int n = 4; n <= 9; ++n) {
        const auto o = search(n, 2);
        const std::string at = "n=" + std::to_string(n);
        r.require(o.exhausted, at + " exhausted");
        r.require(o.optimum == 6, at + " optimum 6");
        r.require(o.witnesses.size() == 1 && complete_on_four(o.witnesses[0]), at + " unique class C([4],2)");
        r.require(oracle_max(Params::make(n, 2)) == o.optimum, at + " oracle_max agrees");
        if (n <= 6) r.require(oracle::brute_max(n, 2) == o.optimum, at + " brute force agrees");
    }
    r.detail << "n=4..9 all optimum 6 with one class";
}

void flagship(Result& r) {
    SearchProblem p;
    p.params = Params::make(13, 3);
    p.budget = SearchBudget{1'000'000'000, 3600.0};
    const auto o = max_almost_intersecting(p);
    const auto bp = b_plus(13, 3);
    r.require(size_b_plus(13, 3) == 32, "|B+(13,3)| = 32");
    if (o.exhausted) {
        r.require(o.optimum == 32, "optimum 32");
        r.require(o.witnesses.size() == 1 && o.classes_complete, "one witness class");
        if (!o.witnesses.empty()) {
            r.require(oracle::has_b_plus_shape(oracle::from(o.witnesses[0]), 13, 3), "witness has the B+ shape");
            r.require(family_isomorphic(o.witnesses[0], bp).has_value(), "witness isomorphic to B+");
        }
    } else {
        r.require(o.optimum >= 32, "fallback: 32 reached");
        r.require(o.optimum <= 32, "fallback: nothing larger found");
    }
    r.require(local_maximality_check(bp).empty(), "B+ locally maximal");
    r.detail << "optimum " << o.optimum << ", exhausted " << (o.exhausted ? "yes" : "no") << ", " << o.stats.nodes
             << " nodes, " << o.witnesses.size() << " class(es), " << o.seconds << " s";
}

void formulas(Result& r) {
    const auto& C = pascal();
    std::size_t points = 0;
    for (int k = 3; k <= 6; ++k) {
        for (int n = 2 * k + 1; n <= 14; ++n) {
            const std::string at = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
            for (int rr = 3; rr <= k + 1; ++rr) {
                const auto lib = b_r(n, k, rr);
                const auto ref = oracle::b_r(n, k, rr);
                const oracle::Big size = C(n - 1, k - 1) - C(n - rr, k - 1) + C(n - rr, k - rr + 1);
                const oracle::Big delta = C(n - 1, k - 1) - C(n - rr, k - 1);
                r.require(oracle::from(lib) == ref, at + " b_r matches its definition");
                r.require(size_b_r(n, k, rr) == size && oracle::Big(ref.size()) == size, at + " |B_r|");
                r.require(delta_b_r(n, k, rr) == delta && oracle::Big(oracle::max_degree(ref, n)) == delta &&
                              BigCount(max_degree(lib).value) == delta,
                          at + " Delta(B_r)");
                ++points;
            }
            const oracle::Big plus = C(n - 1, k - 1) - C(n - k - 1, k - 1) + 2;
            r.require(size_b_plus(n, k) == plus && oracle::Big(b_plus(n, k).size()) == plus, at + " |B+|");
            r.require(ekr_bound(n, k) == C(n - 1, k - 1) && oracle::Big(full_star(n, k, 1).size()) == C(n - 1, k - 1),
                      at + " |star|");
        }
    }
    const auto check = verify_formulas(3, 6, 14);
    r.require(check.mismatches.empty(), "library formula grid");
    r.detail << points << " (n,k,r) points, " << check.comparisons << " library comparisons";
}

void monotonicity(Result& r) {
    const auto& C = pascal();
    std::size_t relations = 0;
    for (int k = 3; k <= 6; ++k) {
        for (int n = 2 * k + 1; n <= 14; ++n) {
            const std::string at = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
            std::vector<oracle::Big> s;  // index r-3
            for (int rr = 3; rr <= k + 1; ++rr) s.emplace_back(oracle::b_r(n, k, rr).size());
            const oracle::Big plus(b_plus(n, k).size());
            r.require(s[0] == s[1], at + " |B_3| = |B_4|");
            for (std::size_t i = 2; i < s.size(); ++i) r.require(s[i - 1] < s[i], at + " strict increase");
            r.require(C(n - 2, k - 2) + 2 <= s.front(), at + " C(n-2,k-2)+2 <= |B_3|");
            r.require(s.front() == C(n - 2, k - 2) + 2 * C(n - 3, k - 2), at + " |B_3| closed form");
            r.require(s.front() <= s.back() && s.back() < plus, at + " |B_3| <= |B_{k+1}| < |B+|");
            relations += s.size() + 3;
        }
    }
    const auto check = verify_formulas(3, 6, 14);
    r.require(check.chain_failures.empty(), "library ordering checks");
    r.detail << relations << " relations on the grid";
}

void lemma_checkers(Result& r) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Job {
        Lemma lemma;
        int k_hi;
    };
    std::size_t passed = 0;
    for (const Job& job : {Job{Lemma::central, 200}, Job{Lemma::ratio, 100}, Job{Lemma::tail, 100}, Job{Lemma::large_n, 100}}) {
        const auto rep = check_lemma(job.lemma, 1, job.k_hi, 1);
        r.require(rep.ok(), to_string(job.lemma) + " has in-hypothesis failures");
        passed += rep.passed;
    }
    // independent spot values
    const auto p6 = check_central_low(6);
    r.require(p6.verdict == Verdict::pass && p6.lhs == pascal()(12, 4) && p6.rhs == pascal()(11, 5), "k=6 values");
    r.require(check_central_low(5).verdict == Verdict::out_of_domain, "k=5 out of domain");
    const auto g = check_tail_gap(28, 9, 8);
    r.require(g.verdict == Verdict::pass && g.lhs == pascal()(21, 3) && g.rhs == pascal()(19, 7), "k=9 boundary point");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.require(secs < 30.0, "runtime under 30 s");
    r.detail << passed << " in-hypothesis points pass, " << secs << " s";
}

void cross_corollaries(Result& r) {
    const auto& C = pascal();
    for (auto [n, k, rr] : {std::tuple{9, 4, 3}, {10, 4, 3}, {10, 4, 4}, {11, 5, 3}}) {
        const std::string at = "(n,k,r)=(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(rr) + ")";
        const auto c = cross_cap(n, k, rr);
        r.require(c.threshold == C(n - 1, k - 1) - C(n - rr, k - 1) && c.cap == C(n - rr, k - rr + 1), at + " bound values");
        const Interval x{2, n};
        const auto a = lex_family(static_cast<std::uint64_t>(c.threshold), x, k - 1);
        const auto partner = max_cross_partner(a, k, x);
        r.require(oracle::Big(partner.size()) == C(n - rr, k - rr + 1), at + " partner size equals the cap");
        const Mask head = interval_mask(2, rr);
        bool all_cover = true;
        for (Mask m : partner.masks()) all_cover = all_cover && (m & head) == head;
        r.require(all_cover, at + " partner = k-sets containing [2,r]");

        const oracle::Big partner_limit = C(n - 1, k - 1) - C(n - k, k - 1);
        r.require(partner_cap(n, k) == partner_limit, at + " second cap value");
        for (int m = 1; m <= k + 2; ++m) {
            const auto b = lex_family(static_cast<std::uint64_t>(m), x, k);
            const oracle::Big size(max_cross_partner(b, k - 1, x).size());
            if (m < k) r.require(size > partner_limit, at + " cap exceeded below |B| = k");
            if (m == k) r.require(size == partner_limit, at + " cap attained at |B| = k");
            if (m > k) r.require(size <= partner_limit, at + " cap respected above |B| = k");
        }
    }
    r.detail << "4 parameter triples";
}

void compression(Result& r) {
    std::uint64_t seed = 2024;
    for (auto [x, a, b] : {std::tuple{8, 2, 3}, {9, 3, 3}, {10, 3, 4}}) {
        const auto s = compression_suite(seed++, Interval{1, x}, a, b, 1000);
        r.require(s.not_cross == 0, "generator produced a non-cross-intersecting pair");
        r.require(s.preserved == 1000, "compression broke cross-intersection");
        r.detail << "(" << x << "," << a << "," << b << "): " << s.preserved << "/1000; ";
    }
}

void bollobas(Result& r) {
    std::vector<SetFamily> corpus;
    for (int n = 4; n <= 9; ++n) {
        std::vector<Mask> c4;
        for_each_subset(4, 2, [&](Mask m) { c4.push_back(m); });
        corpus.emplace_back(Params::make(n, 2), c4);
    }
    for (int k = 2; k <= 5; ++k) {
        for (int n = 2 * k + 2; n <= 13; ++n) corpus.push_back(b_plus(n, k));
    }
    for (auto [n, k] : {std::pair{7, 3}, {9, 3}, {11, 3}, {7, 2}, {7, 4}, {6, 3}}) {
        for (auto& w : search(n, k).witnesses) corpus.push_back(std::move(w));
    }
    std::mt19937_64 rng(8);
    for (int t = 0; t < 300; ++t) {
        const int n = 7 + static_cast<int>(rng() % 7);
        corpus.push_back(to_family(n, 3, oracle::random_k3_family(rng, n).family));
    }
    for (const auto& f : corpus) {
        if (!is_almost_intersecting(f)) {
            r.require(false, "corpus family is not almost intersecting");
            continue;
        }
        const int k = f.params().k;
        const auto p = canonical_partition(f);
        const auto sys = doubled_pair_system(p);
        bool direct = sys.pairs.size() == 2 * p.ell();
        for (std::size_t i = 0; i < sys.pairs.size(); ++i) {
            for (std::size_t j = 0; j < sys.pairs.size(); ++j) {
                const bool meet = (sys.pairs[i].a & sys.pairs[j].b) != 0;
                direct = direct && (i == j ? !meet : meet);
            }
        }
        const auto v = bollobas_check(sys);
        r.require(direct && v.hypothesis_holds, "set-pair condition");
        r.require(v.within_bound && oracle::Big(2 * p.ell()) <= pascal()(2 * k, k), "2 ell <= C(2k,k)");
    }
    std::vector<Mask> c4;
    for_each_subset(4, 2, [&](Mask m) { c4.push_back(m); });
    const SetFamily c(Params::make(4, 2), c4);
    r.require(ell(c) == 3 && ell_upper_bound(2) == 3, "ell(C([4],2)) = 3 attains the cap");
    r.detail << corpus.size() << " families";
}

void k3_properties(Result& r) {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1234);
    std::size_t nontrivial = 0;
    for (int t = 0; t < 10'000; ++t) {
        const int n = 7 + static_cast<int>(rng() % 7);
        const auto s = oracle::random_k3_family(rng, n);
        const auto f = to_family(n, 3, s.family);
        const Mask p = mask_of(s.p), q = mask_of(s.q);
        const auto facts = check_k3_facts(f, DisjointPair{std::min(p, q), std::max(p, q)});
        const auto lit = oracle::k3_verdicts(s.family, s.p, s.q);
        r.require(is_almost_intersecting(f), "fuzz family is almost intersecting");
        r.require(facts.all(), "library fact check");
        r.require(lit.two_outside && lit.misses_pair && lit.matching_agree && lit.heavy_matching && lit.heavy_cover &&
                      lit.double_inside,
                  "literal statement check");
        for (int a : s.p) {
            for (int b : s.q) {
                if (oracle::d_set(s.family, s.p, s.q, a, b).size() >= 2) {
                    ++nontrivial;
                    a = 100;  // count each family once
                    break;
                }
            }
            if (a == 100) break;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.require(secs < 120.0, "runtime under 120 s");
    r.detail << "10000 families (" << nontrivial << " with a D-set of size >= 2), " << secs << " s";
}

void determinism(Result& r) {
    int instances = 0;
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k < n; ++k) {
            if (count_subsets(n, k) > 40) continue;
            ++instances;
            const std::string at = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
            const auto base = search(n, k);
            r.require(base.optimum == oracle_max(Params::make(n, k)), at + " matches oracle_max");
            for (int jobs : {2, 8}) {
                const auto o = search(n, k, true, jobs);
                r.require(o.optimum == base.optimum && same_classes(o.witnesses, base.witnesses), at + " jobs");
            }
            const auto off = search(n, k, false);
            r.require(off.optimum == base.optimum && same_classes(off.witnesses, base.witnesses), at + " rules off");
        }
    }
    r.detail << instances << " instances x {1,2,8 workers, rules on/off}";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Result&)>>> criteria = {
        {"k=2 exact optima", k2_optima},
        {"flagship (13,3) search", flagship},
        {"formula vs enumeration", formulas},
        {"monotonicity and equality chain", monotonicity},
        {"inequality checkers", lemma_checkers},
        {"cross-intersecting corollaries", cross_corollaries},
        {"randomized compression suite", compression},
        {"set-pair bound on partitions", bollobas},
        {"k=3 structural properties", k3_properties},
        {"search determinism and pruning soundness", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        try {
            criteria[i].second(r);
        } catch (const std::exception& e) {
            r.require(false, std::string("exception: ") + e.what());
        }
        std::printf("[%s] criterion %zu: %s -- %s\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    r.detail.str().c_str());
        std::fflush(stdout);
        failures += !r.pass;
    }
    return failures == 0 ? 0 : 1;
}
