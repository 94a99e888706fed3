#include "aif/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "aif/error.hpp"

namespace aif {

std::string to_string(PruneRule r) {
    switch (r) {
        case PruneRule::bound: return "bound";
        case PruneRule::dead_second_partner: return "dead_second_partner";
        case PruneRule::dead_partnered_neighbor: return "dead_partnered_neighbor";
        case PruneRule::orbit: return "orbit";
        case PruneRule::two_outside: return "two_outside";
        case PruneRule::misses_pair: return "misses_pair";
        case PruneRule::matching_agree: return "matching_agree";
        case PruneRule::heavy_matching: return "heavy_matching";
        case PruneRule::heavy_cover: return "heavy_cover";
        case PruneRule::double_inside: return "double_inside";
    }
    return "?";
}

namespace {

// ---------------------------------------------------------------------------
// k = 3 structure around a fixed disjoint pair (P, Q)
// ---------------------------------------------------------------------------

class K3Context {
public:
    K3Context(Mask p, Mask q, Mask universe) : p_(p), q_(q), outside_(universe & ~(p | q)) {
        const auto pe = elements_of(p), qe = elements_of(q);
        if (pe.size() != 3 || qe.size() != 3 || (p & q) != 0) {
            throw ParamError("k = 3 rules need a disjoint pair of 3-sets");
        }
        for (int i = 0; i < 3; ++i) {
            pa_[i] = element_bit(pe[i]);
            qb_[i] = element_bit(qe[i]);
        }
    }

    // D(a_i, b_j) as element masks, from the committed members.
    void load(std::span<const Mask> committed) {
        d_.fill(0);
        for (Mask m : committed) {
            const Mask out = m & outside_;
            if (std::popcount(out) != 1 || std::popcount(m & p_) != 1 || std::popcount(m & q_) != 1) continue;
            d_[index(m)] |= out;
        }
    }

    Mask d(int i, int j) const { return d_[i * 3 + j]; }
    Mask a_bit(int i) const { return pa_[i]; }
    Mask b_bit(int j) const { return qb_[j]; }
    Mask outside() const { return outside_; }
    Mask p() const { return p_; }
    Mask q() const { return q_; }

    // Row/column of a straddling set {a_i, b_j, c}.
    int row(Mask m) const { return std::countr_zero(pext(m & p_, p_)); }
    int col(Mask m) const { return std::countr_zero(pext(m & q_, q_)); }

    std::optional<PruneRule> excluded(Mask cand) const {
        if (cand == p_ || cand == q_) return std::nullopt;
        const Mask out = cand & outside_;
        if (std::popcount(out) >= 2) return PruneRule::two_outside;
        if ((cand & p_) == 0 || (cand & q_) == 0) return PruneRule::misses_pair;
        if (out != 0) {
            const int i = row(cand), j = col(cand);
            const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
            const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            // the two matchings of the remaining 2x2 block
            if (d(i1, j1) && d(i2, j2) && std::popcount(d(i1, j1) | d(i2, j2) | out) >= 2) {
                return PruneRule::matching_agree;
            }
            if (d(i1, j2) && d(i2, j1) && std::popcount(d(i1, j2) | d(i2, j1) | out) >= 2) {
                return PruneRule::matching_agree;
            }
            for (int r : {i1, i2}) {
                for (int c : {j1, j2}) {
                    if (std::popcount(d(r, c)) >= 3) return PruneRule::heavy_matching;
                }
            }
        }
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                if (std::popcount(d(r, c)) >= 3 && (cand & (pa_[r] | qb_[c])) == 0) return PruneRule::heavy_cover;
            }
        }
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                const Mask rest = (p_ | q_) & ~(pa_[r] | qb_[c]);
                if (std::popcount(d(r, c)) >= 2 && (cand & ~rest) == 0) return PruneRule::double_inside;
            }
        }
        return std::nullopt;
    }

private:
    int index(Mask m) const { return row(m) * 3 + col(m); }

    static Mask pext(Mask x, Mask m) {
        Mask out = 0;
        int pos = 0;
        while (m != 0) {
            const Mask low = m & (~m + 1);
            if (x & low) out |= Mask{1} << pos;
            ++pos;
            m &= m - 1;
        }
        return out;
    }

    Mask p_, q_, outside_;
    std::array<Mask, 3> pa_{}, qb_{};
    std::array<Mask, 9> d_{};
};

// ---------------------------------------------------------------------------
// Bitsets over the vertex set
// ---------------------------------------------------------------------------

using Word = std::uint64_t;

struct Graph {
    int vertices = 0;
    int words = 0;
    std::vector<Mask> masks;
    std::vector<Word> adj;  // vertices * words

    const Word* nbr(int v) const { return adj.data() + static_cast<std::size_t>(v) * words; }
};

Graph kneser_graph(Params p) {
    Graph g;
    for_each_subset(p.n, p.k, [&](Mask m) { g.masks.push_back(m); });
    g.vertices = static_cast<int>(g.masks.size());
    g.words = (g.vertices + 63) / 64;
    g.adj.assign(static_cast<std::size_t>(g.vertices) * g.words, 0);
    for (int i = 0; i < g.vertices; ++i) {
        for (int j = i + 1; j < g.vertices; ++j) {
            if ((g.masks[i] & g.masks[j]) == 0) {
                g.adj[static_cast<std::size_t>(i) * g.words + j / 64] |= Word{1} << (j % 64);
                g.adj[static_cast<std::size_t>(j) * g.words + i / 64] |= Word{1} << (i % 64);
            }
        }
    }
    return g;
}

inline bool test(const std::vector<Word>& b, int i) { return (b[i / 64] >> (i % 64)) & 1; }
inline bool test(const Word* b, int i) { return (b[i / 64] >> (i % 64)) & 1; }
inline void reset(std::vector<Word>& b, int i) { b[i / 64] &= ~(Word{1} << (i % 64)); }
inline void set(std::vector<Word>& b, int i) { b[i / 64] |= Word{1} << (i % 64); }

int popcount(const std::vector<Word>& b) {
    int c = 0;
    for (Word w : b) c += std::popcount(w);
    return c;
}

int first(const std::vector<Word>& b) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i]) return static_cast<int>(i * 64) + std::countr_zero(b[i]);
    }
    return -1;
}

template <class Fn>
void for_each_bit(const std::vector<Word>& b, Fn&& fn) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        Word w = b[i];
        while (w) {
            fn(static_cast<int>(i * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Branch and bound
// ---------------------------------------------------------------------------

struct Node {
    std::vector<Word> alive;   // undecided candidates that can still join
    std::vector<Word> single;  // alive candidates disjoint from exactly one committed set
    std::vector<int> committed;
    std::vector<int> partner;  // per committed slot: partner vertex or -1
    Mask used = 0;             // union of committed sets
    bool has_pair = false;
};

struct Worker {
    SearchStats stats;
    std::uint64_t pending_nodes = 0;
    int best = 0;
    std::uint64_t best_count = 0;
    std::vector<std::vector<Mask>> witnesses;
    std::vector<Word> scratch;
    std::vector<Word> scratch2;
};

inline constexpr std::size_t kMaxStoredWitnesses = 20'000;

class Engine {
public:
    Engine(const Graph& g, const SearchProblem& prob)
        : g_(g), prob_(prob), start_(std::chrono::steady_clock::now()) {
        const Params p = prob.params;
        if (prob.symmetry) fresh_base_ = interval_mask(2 * p.k + 1, p.n);
        if (prob.symmetry && prob.k3_rules && p.k == 3) {
            k3_.emplace(interval_mask(1, 3), interval_mask(4, 6), p.universe());
        }
    }

    std::optional<Node> root(Worker& w) {
        const Params p = prob_.params;
        Node node;
        node.alive.assign(g_.words, 0);
        node.single.assign(g_.words, 0);
        for (int v = 0; v < g_.vertices; ++v) set(node.alive, v);
        if (2 * p.k > p.n) return std::nullopt;  // no disjoint pair at all
        if (!prob_.symmetry) return node;
        const Mask pm = interval_mask(1, p.k), qm = interval_mask(p.k + 1, 2 * p.k);
        const int pv = vertex_of(pm), qv = vertex_of(qm);
        reset(node.alive, pv);
        reset(node.alive, qv);
        node.committed = {pv, qv};
        node.partner = {qv, pv};
        node.used = pm | qm;
        node.has_pair = true;
        apply_k3(node, w);
        kill_neighbours(node, pv, qv, w);
        return node;
    }

    void expand(Node node, int depth, Worker& w, std::vector<Node>* tasks, int split_depth) {
        for (;;) {
            if (stop_.load(std::memory_order_relaxed)) return;
            tick(w);
            const int v = first(node.alive);
            if (v < 0) {
                record(node, w);
                return;
            }
            const int inc = incumbent_.load(std::memory_order_relaxed);
            if (static_cast<int>(node.committed.size()) + popcount(node.alive) < inc ||
                upper_bound(node, inc, w) < inc) {
                ++w.stats.prunes[static_cast<std::size_t>(PruneRule::bound)];
                return;
            }
            const int pick = choose(node);
            Node child = node;
            include(child, pick, w);
            if (tasks != nullptr && depth + 1 >= split_depth) {
                tasks->push_back(std::move(child));
            } else {
                expand(std::move(child), depth + 1, w, tasks, split_depth);
            }
            exclude(node, pick, w);
        }
    }

    int incumbent() const { return incumbent_.load(); }
    bool stopped() const { return stop_.load(); }

    void flush(Worker& w) {
        w.stats.nodes += w.pending_nodes;
        nodes_.fetch_add(w.pending_nodes);
        w.pending_nodes = 0;
    }

private:
    int vertex_of(Mask m) const {
        auto it = std::lower_bound(g_.masks.begin(), g_.masks.end(), m);
        return static_cast<int>(it - g_.masks.begin());
    }

    void tick(Worker& w) {
        if (++w.pending_nodes < 1024) return;
        const std::uint64_t total = nodes_.fetch_add(w.pending_nodes) + w.pending_nodes;
        w.stats.nodes += w.pending_nodes;
        w.pending_nodes = 0;
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (total >= prob_.budget.max_nodes || secs >= prob_.budget.max_seconds) stop_.store(true);
    }

    // Fail-first: candidates meeting every committed set before those already
    // disjoint from one; ties by mask order.
    int choose(const Node& node) const {
        for (int i = 0; i < g_.words; ++i) {
            const Word w = node.alive[i] & ~node.single[i];
            if (w) return i * 64 + std::countr_zero(w);
        }
        return first(node.alive);
    }

    // |committed| + one per unpartnered committed set that still has an alive
    // neighbour + min(|C|, 2) over a greedy partition of the rest into
    // cliques of pairwise disjoint sets.
    int upper_bound(const Node& node, int inc, Worker& w) const {
        auto& rem = w.scratch;
        auto& cand = w.scratch2;
        rem = node.alive;
        cand.resize(rem.size());
        int ub = static_cast<int>(node.committed.size());
        for (std::size_t s = 0; s < node.committed.size(); ++s) {
            if (node.partner[s] >= 0) continue;
            const Word* nb = g_.nbr(node.committed[s]);
            bool any = false;
            for (int i = 0; i < g_.words; ++i) {
                if (rem[i] & nb[i]) {
                    any = true;
                    rem[i] &= ~nb[i];
                }
            }
            if (any) ++ub;
        }
        for (;;) {
            const int v = first(rem);
            if (v < 0) break;
            reset(rem, v);
            const Word* nv = g_.nbr(v);
            for (int i = 0; i < g_.words; ++i) cand[i] = rem[i] & nv[i];
            int size = 1;
            for (int u = first(cand); u >= 0; u = first(cand)) {
                reset(rem, u);
                reset(cand, u);
                const Word* nu = g_.nbr(u);
                for (int i = 0; i < g_.words; ++i) cand[i] &= nu[i];
                ++size;
            }
            ub += std::min(size, 2);
            if (ub >= inc) return ub;
        }
        return ub;
    }

    void count(Worker& w, PruneRule r, std::uint64_t by) { w.stats.prunes[static_cast<std::size_t>(r)] += by; }

    void apply_k3(Node& node, Worker& w) {
        if (!k3_) return;
        std::vector<Mask> members;
        members.reserve(node.committed.size());
        for (int v : node.committed) members.push_back(g_.masks[v]);
        k3_->load(members);
        std::vector<int> drop;
        for_each_bit(node.alive, [&](int v) {
            if (auto rule = k3_->excluded(g_.masks[v])) {
                drop.push_back(v);
                count(w, *rule, 1);
            }
        });
        for (int v : drop) {
            reset(node.alive, v);
            reset(node.single, v);
        }
    }

    void kill_neighbours(Node& node, int a, int b, Worker& w) {
        const Word* na = g_.nbr(a);
        const Word* nb = g_.nbr(b);
        std::uint64_t removed = 0;
        for (int i = 0; i < g_.words; ++i) {
            const Word dead = node.alive[i] & (na[i] | nb[i]);
            removed += std::popcount(dead);
            node.alive[i] &= ~dead;
            node.single[i] &= node.alive[i];
        }
        count(w, PruneRule::dead_partnered_neighbor, removed);
    }

    void include(Node& node, int v, Worker& w) {
        const bool was_single = test(node.single, v);
        reset(node.alive, v);
        reset(node.single, v);
        int mate_slot = -1;
        if (was_single) {
            for (std::size_t s = 0; s < node.committed.size(); ++s) {
                if (test(g_.nbr(node.committed[s]), v)) {
                    mate_slot = static_cast<int>(s);
                    break;
                }
            }
        }
        node.committed.push_back(v);
        node.partner.push_back(-1);
        node.used |= g_.masks[v];
        apply_k3(node, w);
        if (mate_slot >= 0) {
            const int u = node.committed[mate_slot];
            node.partner[mate_slot] = v;
            node.partner.back() = u;
            node.has_pair = true;
            kill_neighbours(node, u, v, w);
        } else {
            const Word* nv = g_.nbr(v);
            std::uint64_t removed = 0;
            for (int i = 0; i < g_.words; ++i) {
                const Word dead = node.alive[i] & nv[i] & node.single[i];
                removed += std::popcount(dead);
                node.alive[i] &= ~dead;
                node.single[i] = (node.single[i] & node.alive[i]) | (node.alive[i] & nv[i]);
            }
            count(w, PruneRule::dead_second_partner, removed);
        }
    }

    // Excludes v and, in symmetry mode, every alive set that differs from v
    // only by a permutation of elements no committed set uses. The state is
    // invariant under those permutations, so any solution using a twin maps
    // onto one using v.
    void exclude(Node& node, int v, Worker& w) {
        reset(node.alive, v);
        reset(node.single, v);
        const Mask fresh = fresh_base_ & ~node.used;
        const Mask fv = g_.masks[v] & fresh;
        if (fv == 0) return;
        const Mask key = g_.masks[v] & ~fresh;
        const int width = std::popcount(fv);
        std::vector<int> twins;
        for_each_bit(node.alive, [&](int u) {
            const Mask m = g_.masks[u];
            if ((m & ~fresh) == key && std::popcount(m & fresh) == width) twins.push_back(u);
        });
        for (int u : twins) {
            reset(node.alive, u);
            reset(node.single, u);
        }
        count(w, PruneRule::orbit, twins.size());
    }

    void record(const Node& node, Worker& w) {
        if (!node.has_pair) return;
        const int size = static_cast<int>(node.committed.size());
        int inc = incumbent_.load();
        while (size > inc && !incumbent_.compare_exchange_weak(inc, size)) {
        }
        if (size < incumbent_.load() || size < w.best) return;
        if (size > w.best) {
            w.best = size;
            w.best_count = 0;
            w.witnesses.clear();
        }
        ++w.best_count;
        if (w.witnesses.size() < kMaxStoredWitnesses) {
            std::vector<Mask> fam;
            for (int v : node.committed) fam.push_back(g_.masks[v]);
            std::sort(fam.begin(), fam.end());
            w.witnesses.push_back(std::move(fam));
        }
    }

    const Graph& g_;
    const SearchProblem& prob_;
    std::chrono::steady_clock::time_point start_;
    Mask fresh_base_ = 0;
    std::optional<K3Context> k3_;
    std::atomic<int> incumbent_{0};
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stop_{false};
};

std::vector<int> degree_signature(const SetFamily& f) {
    std::vector<int> d;
    for (Element x = 1; x <= f.params().n; ++x) d.push_back(degree(f, x));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

SearchOutcome max_almost_intersecting(const SearchProblem& prob) {
    const Params p = Params::make(prob.params.n, prob.params.k);
    if (count_subsets(p.n, p.k) > kMaxSearchVertices) {
        throw ResourceError("search needs C(n,k) <= 10^4");
    }
    if (prob.budget.max_nodes == 0 || prob.budget.max_seconds <= 0) throw ParamError("search budget must be positive");
    const auto t0 = std::chrono::steady_clock::now();

    SearchOutcome out;
    out.params = p;
    const Graph g = kneser_graph(p);
    Engine engine(g, prob);
    std::vector<Worker> workers(static_cast<std::size_t>(std::max(1, prob.jobs)));

    if (auto root = engine.root(workers[0])) {
        if (workers.size() == 1) {
            engine.expand(std::move(*root), 0, workers[0], nullptr, 0);
        } else {
            std::vector<Node> tasks;
            engine.expand(std::move(*root), 0, workers[0], &tasks, 2);
            std::atomic<std::size_t> next{0};
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < workers.size(); ++t) {
                pool.emplace_back([&, t] {
                    for (std::size_t i = next++; i < tasks.size(); i = next++) {
                        engine.expand(std::move(tasks[i]), 2, workers[t], nullptr, 0);
                    }
                });
            }
        }
    }
    for (auto& w : workers) engine.flush(w);

    out.optimum = engine.incumbent();
    out.exhausted = !engine.stopped();

    std::vector<std::vector<Mask>> found;
    for (const auto& w : workers) {
        out.stats.nodes += w.stats.nodes;
        for (std::size_t r = 0; r < kPruneRuleCount; ++r) out.stats.prunes[r] += w.stats.prunes[r];
        if (out.optimum > 0 && w.best == out.optimum) {
            out.witness_count += w.best_count;
            if (w.witnesses.size() < w.best_count) out.classes_complete = false;
            found.insert(found.end(), w.witnesses.begin(), w.witnesses.end());
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<std::vector<int>> signatures;
    for (auto& masks : found) {
        SetFamily fam(p, std::move(masks));
        if (!is_almost_intersecting(fam)) {
            throw std::logic_error("search produced a family that is not almost intersecting");
        }
        const auto sig = degree_signature(fam);
        bool known = false;
        for (std::size_t c = 0; c < out.witnesses.size() && !known; ++c) {
            known = signatures[c] == sig && family_isomorphic(fam, out.witnesses[c]).has_value();
        }
        if (known) continue;
        if (out.witnesses.size() >= kMaxWitnessClasses) {
            out.classes_complete = false;
            break;
        }
        out.witnesses.push_back(std::move(fam));
        signatures.push_back(sig);
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

int oracle_max(Params params) {
    const Params p = Params::make(params.n, params.k);
    if (count_subsets(p.n, p.k) > 40) throw ResourceError("oracle_max needs C(n,k) <= 40");
    if (2 * p.k > p.n) return 0;  // no disjoint pair exists
    std::vector<Mask> all;
    for_each_subset(p.n, p.k, [&](Mask m) { all.push_back(m); });
    const int total = static_cast<int>(all.size());

    std::vector<Mask> chosen;
    std::vector<int> partners;  // disjoint partners among chosen, parallel to chosen
    int pairs = 0;
    int best = 0;
    auto walk = [&](auto&& self, int i) -> void {
        if (static_cast<int>(chosen.size()) + (total - i) <= best) return;
        if (i == total) {
            if (pairs > 0) best = static_cast<int>(chosen.size());
            return;
        }
        const Mask m = all[i];
        int hit = -1, hits = 0;
        for (std::size_t j = 0; j < chosen.size(); ++j) {
            if ((chosen[j] & m) == 0) {
                hit = static_cast<int>(j);
                ++hits;
            }
        }
        if (hits == 0 || (hits == 1 && partners[hit] == 0)) {
            chosen.push_back(m);
            partners.push_back(hits);
            if (hits == 1) {
                ++partners[hit];
                ++pairs;
            }
            self(self, i + 1);
            if (hits == 1) {
                --partners[hit];
                --pairs;
            }
            chosen.pop_back();
            partners.pop_back();
        }
        self(self, i + 1);
    };
    walk(walk, 0);
    return best;
}

std::vector<Element> d_set(const SetFamily& f, DisjointPair pair, Element a, Element b) {
    if (f.params().k != 3) throw UnsupportedError("D-sets are defined for k = 3 only");
    if ((pair.first & element_bit(a)) == 0 || (pair.second & element_bit(b)) == 0) {
        throw ParamError("d_set: a must lie in the first set of the pair and b in the second");
    }
    const Mask outside = f.params().universe() & ~(pair.first | pair.second);
    const Mask ab = element_bit(a) | element_bit(b);
    std::vector<Element> out;
    for (Mask m : f.masks()) {
        const Mask c = m & ~ab;
        if ((m & ab) == ab && (c & outside) == c && std::popcount(c) == 1) out.push_back(std::countr_zero(c) + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RuleExclusion> prune_rules(const SetFamily& committed, DisjointPair pair,
                                       std::span<const Mask> candidates) {
    if (committed.params().k != 3) throw UnsupportedError("k = 3 rules need k = 3");
    if (!committed.contains(pair.first) || !committed.contains(pair.second)) {
        throw ParamError("prune_rules: the committed family must contain the pair");
    }
    K3Context ctx(pair.first, pair.second, committed.params().universe());
    ctx.load(committed.masks());
    std::vector<RuleExclusion> out;
    for (Mask c : candidates) {
        if (committed.contains(c)) continue;
        if (auto rule = ctx.excluded(c)) out.push_back({c, *rule});
    }
    return out;
}

K3Facts check_k3_facts(const SetFamily& f, DisjointPair pair) {
    if (f.params().k != 3) throw UnsupportedError("k = 3 facts need k = 3");
    if (!f.contains(pair.first) || !f.contains(pair.second) || (pair.first & pair.second) != 0) {
        throw ParamError("check_k3_facts: pair must be a disjoint pair of the family");
    }
    K3Context ctx(pair.first, pair.second, f.params().universe());
    ctx.load(f.masks());
    K3Facts facts;
    const Mask both = pair.first | pair.second;
    for (Mask m : f.masks()) {
        if (m == pair.first || m == pair.second) continue;
        if (std::popcount(m & ctx.outside()) > 1) facts.two_outside = false;
        if ((m & ctx.p()) == 0 || (m & ctx.q()) == 0) facts.misses_pair = false;
    }
    static constexpr std::array<std::array<int, 3>, 6> kMatchings = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& sigma : kMatchings) {
        bool all_nonempty = true;
        Mask uni = 0;
        for (int i = 0; i < 3; ++i) {
            all_nonempty = all_nonempty && ctx.d(i, sigma[i]) != 0;
            uni |= ctx.d(i, sigma[i]);
        }
        if (all_nonempty) {
            for (int i = 0; i < 3; ++i) {
                if (ctx.d(i, sigma[i]) != uni || std::popcount(uni) != 1) facts.matching_agree = false;
            }
        }
    }
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            const int dsize = std::popcount(ctx.d(r, c));
            if (dsize >= 3) {
                for (int r2 = 0; r2 < 3; ++r2) {
                    for (int c2 = 0; c2 < 3; ++c2) {
                        if (r2 != r && c2 != c && ctx.d(r2, c2) != 0) facts.heavy_matching = false;
                    }
                }
                const Mask ab = ctx.a_bit(r) | ctx.b_bit(c);
                for (Mask m : f.masks()) {
                    if ((m & ab) == 0) facts.heavy_cover = false;
                }
            }
            if (dsize >= 2) {
                const Mask rest = both & ~(ctx.a_bit(r) | ctx.b_bit(c));
                for (Mask m : f.masks()) {
                    if ((m & ~rest) == 0) facts.double_inside = false;
                }
            }
        }
    }
    return facts;
}

std::vector<Mask> local_maximality_check(const SetFamily& f) {
    const Params p = f.params();
    if (count_subsets(p.n, p.k) > 100'000) throw ResourceError("local_maximality_check: universe too large");
    std::vector<Mask> out;
    for_each_subset(p.n, p.k, [&](Mask g) {
        if (!f.contains(g) && is_almost_intersecting(f.with(g))) out.push_back(g);
    });
    return out;
}

Diagnosis diagnose(const SetFamily& f) {
    const Params p = f.params();
    const CanonicalPartition part = canonical_partition(f);
    Diagnosis d;
    d.size = f.size();
    d.almost_intersecting = is_almost_intersecting(f);
    d.ell = part.ell();
    d.delta_f0 = max_degree(part.core).value;
    if (p.k >= 2 && p.n > p.k) {
        for (int r = 3; r <= p.k + 1; ++r) {
            if (BigCount(d.delta_f0) <= delta_b_r(p.n, p.k, r)) {
                d.r = r;
                break;
            }
        }
    }
    d.theorem_case = theorem_case(p.n, p.k);
    if (p.k >= 1 && p.n >= p.k + 2) {
        d.bound = size_b_plus(p.n, p.k);
        d.within_bound = BigCount(d.size) <= *d.bound;
    }
    return d;
}

}  // namespace aif
