#include "aif/bounds.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <thread>

#include "aif/error.hpp"

namespace aif {

BigCount binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigCount c = 1;
    // c = C(n-k+i, i) after step i, so every division is exact.
    for (long i = 1; i <= k; ++i) {
        c *= (n - k + i);
        c /= i;
    }
    return c;
}

BinomialTable::BinomialTable(int max_n) : max_n_(max_n), rows_(static_cast<std::size_t>(max_n) + 1) {
    for (int n = 0; n <= max_n; ++n) {
        auto& row = rows_[n];
        row.resize(static_cast<std::size_t>(n) + 1);
        row[0] = 1;
        row[n] = 1;
        for (int k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
}

BigCount BinomialTable::operator()(long n, long k) const {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n > max_n_) return binom(n, k);
    return rows_[n][k];
}

const BigCount& BinomialTable::at(int n, int k) const { return rows_[n][k]; }

const BinomialTable& shared_binomials() {
    static const BinomialTable table(420);
    return table;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

std::string nk(int n, int k) { return " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

void require_r(int n, int k, int r) {
    require(n > k && k >= 2 && 3 <= r && r <= k + 1,
            "B_r needs 3 <= r <= k+1 < n+1" + nk(n, k) + " r=" + std::to_string(r));
}

}  // namespace

BigCount ekr_bound(int n, int k) {
    require(k >= 1 && n >= 2 * k, "EKR bound needs n >= 2k" + nk(n, k));
    return binom(n - 1, k - 1);
}

BigCount size_b_r(int n, int k, int r) {
    require_r(n, k, r);
    return binom(n - 1, k - 1) - binom(n - r, k - 1) + binom(n - r, k - r + 1);
}

BigCount delta_b_r(int n, int k, int r) {
    require_r(n, k, r);
    return binom(n - 1, k - 1) - binom(n - r, k - 1);
}

BigCount delta_b_r_telescoped(int n, int k, int r) {
    require_r(n, k, r);
    BigCount sum = 0;
    for (int j = 2; j <= r; ++j) sum += binom(n - j, k - 2);
    return sum;
}

BigCount size_b_plus(int n, int k) {
    require(k >= 1 && n >= k + 2, "|B+| needs n >= k+2" + nk(n, k));
    return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 2;
}

BigCount ell_upper_bound(int k) {
    require(k >= 1, "ell bound needs k >= 1");
    return binom(2 * k - 1, k - 1);
}

BollobasVerdict bollobas_check(const SetPairSystem& s) {
    if (s.a < 1 || s.b < 1) throw ParamError("set-pair system needs a, b >= 1");
    for (const auto& p : s.pairs) {
        if (std::popcount(p.a) != s.a || std::popcount(p.b) != s.b) {
            throw ParamError("set-pair system: pair " + to_string(p.a) + "|" + to_string(p.b) +
                             " has the wrong sizes");
        }
        if ((p.a & p.b) != 0) {
            throw ParamError("set-pair system: A_i meets B_i in " + to_string(p.a) + "|" + to_string(p.b));
        }
    }
    BollobasVerdict v;
    v.m = s.pairs.size();
    v.bound = binom(s.a + s.b, s.a);
    v.hypothesis_holds = true;
    for (std::size_t i = 0; i < s.pairs.size() && v.hypothesis_holds; ++i) {
        for (std::size_t j = 0; j < s.pairs.size(); ++j) {
            if (i != j && (s.pairs[i].a & s.pairs[j].b) == 0) {
                v.hypothesis_holds = false;
                break;
            }
        }
    }
    v.within_bound = v.hypothesis_holds && BigCount(v.m) <= v.bound;
    return v;
}

CrossThreshold cross_cap(int n, int k, int r) {
    require(n > 2 * k && k >= r && r >= 3, "cross threshold needs n > 2k, k >= r >= 3" + nk(n, k));
    return {binom(n - 1, k - 1) - binom(n - r, k - 1), binom(n - r, k - r + 1)};
}

BigCount partner_cap(int n, int k) {
    require(n > 2 * k && k > 1, "cross cap needs n > 2k > 2" + nk(n, k));
    return binom(n - 1, k - 1) - binom(n - k, k - 1);
}

std::string to_string(TheoremCase c) {
    switch (c) {
        case TheoremCase::i: return "i";
        case TheoremCase::ii: return "ii";
        case TheoremCase::iii: return "iii";
        case TheoremCase::outside: return "outside";
    }
    return "outside";
}

TheoremCase theorem_case(int n, int k) {
    if (k == 3 && n >= 13) return TheoremCase::i;
    if (k >= 4 && n >= 3 * k + 3) return TheoremCase::ii;
    // n > 2k + 2 sqrt(k) + 4  <=>  n - 2k - 4 > 0 and (n - 2k - 4)^2 > 4k
    const long d = static_cast<long>(n) - 2L * k - 4;
    if (k >= 10 && d > 0 && d * d > 4L * k) return TheoremCase::iii;
    return TheoremCase::outside;
}

// ---------------------------------------------------------------------------

std::string to_string(Lemma l) {
    switch (l) {
        case Lemma::central: return "central";
        case Lemma::ratio: return "ratio";
        case Lemma::tail: return "tail";
        case Lemma::large_n: return "large-n";
    }
    return "?";
}

Lemma parse_lemma(const std::string& id) {
    if (id == "central") return Lemma::central;
    if (id == "ratio") return Lemma::ratio;
    if (id == "tail") return Lemma::tail;
    if (id == "large-n") return Lemma::large_n;
    throw ParamError("unknown lemma '" + id + "'");
}

namespace {

const BinomialTable& C() { return shared_binomials(); }

InequalityPoint point(std::string name, int k) {
    InequalityPoint p;
    p.inequality = std::move(name);
    p.k = k;
    return p;
}

void settle_ge(InequalityPoint& p, BigCount lhs, BigCount rhs) {
    p.verdict = lhs >= rhs ? Verdict::pass : Verdict::fail;
    p.lhs = std::move(lhs);
    p.rhs = std::move(rhs);
}

void settle_lt(InequalityPoint& p, BigCount lhs, BigCount rhs) {
    p.verdict = lhs < rhs ? Verdict::pass : Verdict::fail;
    p.lhs = std::move(lhs);
    p.rhs = std::move(rhs);
}

bool ratio_domain(int k, int m) { return k >= 10 && m >= 2 * k - 4 && m <= 3 * k + 2; }

// Smallest d >= 0 with d*d >= v.
int ceil_sqrt(long v) {
    int d = 0;
    while (static_cast<long>(d) * d < v) ++d;
    return d;
}

}  // namespace

InequalityPoint check_central_low(int k) {
    auto p = point("central-low", k);
    if (k < 6) return p;
    settle_ge(p, C()(2 * k, k - 2), C()(2 * k - 1, k - 1));
    return p;
}

InequalityPoint check_central_high(int k) {
    auto p = point("central-high", k);
    if (k < 4) return p;
    settle_ge(p, C()(2 * k + 1, k - 2), C()(2 * k - 1, k - 1));
    return p;
}

InequalityPoint check_ratio_upper(int k, int m) {
    auto p = point("ratio-upper", k);
    p.m = m;
    if (!ratio_domain(k, m)) return p;
    // 2 >= C(m,k-2) / C(m-1,k-2)
    settle_ge(p, 2 * C()(m - 1, k - 2), C()(m, k - 2));
    return p;
}

InequalityPoint check_ratio_lower(int k, int m) {
    auto p = point("ratio-lower", k);
    p.m = m;
    if (!ratio_domain(k, m)) return p;
    // C(m,k-2) / C(m-1,k-2) >= 4/3
    settle_ge(p, 3 * C()(m, k - 2), 4 * C()(m - 1, k - 2));
    return p;
}

namespace {

// sum = C(m,k-2) + C(m-1,k-2) + ... + C(m-s,k-2), supplied by the caller.
InequalityPoint tail_sum_with_sum(int k, int m, int s, const BigCount& sum) {
    auto p = point("tail-sum", k);
    p.m = m;
    p.s = s;
    if (!ratio_domain(k, m) || s < 0 || m - s < 2 * k - 4) return p;
    // sum >= (2 - 2^-s) C(m,k-2)  <=>  2^s sum >= (2^(s+1) - 1) C(m,k-2)
    const BigCount pow = BigCount(1) << s;
    settle_ge(p, pow * sum, (2 * pow - 1) * C()(m, k - 2));
    return p;
}

}  // namespace

InequalityPoint check_tail_sum(int k, int m, int s) {
    BigCount sum = 0;
    for (int i = 0; i <= s; ++i) sum += C()(m - i, k - 2);
    return tail_sum_with_sum(k, m, s, sum);
}

int tail_gap_boundary_n(int k) { return 2 * k + 4 + ceil_sqrt(4L * k); }

int tail_gap_min_r(int k) { return 5 + ceil_sqrt(k); }

InequalityPoint check_tail_gap(int n, int k, int r) {
    auto p = point("tail-gap", k);
    p.n = n;
    p.r = r;
    const long d = static_cast<long>(n) - 2L * k - 4;
    const bool n_ok = d >= 0 && d * d >= 4L * k;
    const bool r_ok = r >= 5 && static_cast<long>(r - 5) * (r - 5) >= k;
    if (k < 9 || !n_ok || !r_ok) return p;
    settle_lt(p, C()(n - r + 1, k - r + 2), C()(n - r - 1, k - 2));
    return p;
}

InequalityPoint check_gap_monotone(int n, int k) {
    auto p = point("gap-monotone", k);
    p.n = n;
    if (k < 9 || n < 2 * k) return p;
    int t = 0;
    while ((t + 1) * (t + 1) <= k) ++t;
    t += 4;  // floor(sqrt k) + 4
    p.r = t + 1;
    // g(n) = C(n-t, k-t+1) / C(n-t-2, k-2); g(n+1) < g(n) cross-multiplied.
    settle_lt(p, C()(n + 1 - t, k - t + 1) * C()(n - t - 2, k - 2),
              C()(n - t, k - t + 1) * C()(n - t - 1, k - 2));
    return p;
}

InequalityPoint check_large_n(int n, int k) {
    auto p = point("large-n", k);
    p.n = n;
    if (k < 4 || n < 3 * k + 3) return p;
    // C(n-4,k-3) + C(2k-1,k-1) <= C(n-5,k-2) + C(n-5,k-4)
    settle_ge(p, C()(n - 5, k - 2) + C()(n - 5, k - 4), C()(n - 4, k - 3) + C()(2 * k - 1, k - 1));
    std::swap(p.lhs, p.rhs);
    return p;
}

namespace {

void sweep_k(Lemma lemma, int k, const std::function<void(InequalityPoint&&)>& emit) {
    switch (lemma) {
        case Lemma::central:
            emit(check_central_low(k));
            emit(check_central_high(k));
            break;
        case Lemma::ratio:
            if (k < 10) {
                emit(point("ratio-upper", k));
                emit(point("ratio-lower", k));
                emit(point("tail-sum", k));
                break;
            }
            for (int m = 2 * k - 4; m <= 3 * k + 2; ++m) {
                emit(check_ratio_upper(k, m));
                emit(check_ratio_lower(k, m));
                BigCount sum = 0;
                for (int s = 0; m - s >= 2 * k - 4; ++s) {
                    sum += C()(m - s, k - 2);
                    emit(tail_sum_with_sum(k, m, s, sum));
                }
            }
            break;
        case Lemma::tail: {
            if (k < 9) {
                emit(point("tail-gap", k));
                emit(point("gap-monotone", k));
                break;
            }
            const int n0 = tail_gap_boundary_n(k);
            for (int n = n0; n <= std::max(n0, 3 * k + 2); ++n) {
                for (int r = tail_gap_min_r(k); r <= k; ++r) emit(check_tail_gap(n, k, r));
            }
            for (int n = 2 * k; n <= 3 * k + 2; ++n) emit(check_gap_monotone(n, k));
            break;
        }
        case Lemma::large_n:
            if (k < 4) {
                emit(point("large-n", k));
                break;
            }
            for (int n = 3 * k + 3; n <= 3 * k + 50; ++n) emit(check_large_n(n, k));
            break;
    }
}

}  // namespace

LemmaReport check_lemma(Lemma lemma, int k_lo, int k_hi, int jobs) {
    if (k_lo < 1 || k_hi < k_lo) throw ParamError("check_lemma: need 1 <= k_lo <= k_hi");
    if (k_hi > 1000) throw ResourceError("check_lemma: k range too large");
    shared_binomials();

    LemmaReport report{lemma, k_lo, k_hi, 0, 0, {}};
    std::mutex mu;
    auto work = [&](int first, int stride) {
        LemmaReport local{lemma, k_lo, k_hi, 0, 0, {}};
        auto emit = [&](InequalityPoint&& p) {
            switch (p.verdict) {
                case Verdict::pass: ++local.passed; break;
                case Verdict::out_of_domain: ++local.out_of_domain; break;
                case Verdict::fail: local.failures.push_back(std::move(p)); break;
            }
        };
        for (int k = first; k <= k_hi; k += stride) sweep_k(lemma, k, emit);
        std::lock_guard lock(mu);
        report.passed += local.passed;
        report.out_of_domain += local.out_of_domain;
        for (auto& f : local.failures) report.failures.push_back(std::move(f));
    };

    jobs = std::max(1, std::min(jobs, k_hi - k_lo + 1));
    if (jobs == 1) {
        work(k_lo, 1);
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(work, k_lo + j, jobs);
    }
    std::sort(report.failures.begin(), report.failures.end(), [](const auto& a, const auto& b) {
        return std::tie(a.k, a.n, a.m, a.s, a.r, a.inequality) < std::tie(b.k, b.n, b.m, b.s, b.r, b.inequality);
    });
    return report;
}

}  // namespace aif
