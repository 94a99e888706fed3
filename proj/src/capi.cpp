#include "aif/aif.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "aif/bounds.hpp"
#include "aif/constructions.hpp"
#include "aif/error.hpp"
#include "aif/json_io.hpp"
#include "aif/kruskal_katona.hpp"
#include "aif/partition.hpp"
#include "aif/report.hpp"
#include "aif/search.hpp"

struct aif_family {
    aif::SetFamily value;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
aif_status guarded(Fn&& fn) {
    last_error.clear();
    try {
        fn();
        return AIF_OK;
    } catch (const aif::ParseError& e) {
        last_error = e.what();
        return AIF_ERR_PARSE;
    } catch (const aif::ParamError& e) {
        last_error = e.what();
        return AIF_ERR_PARAM;
    } catch (const aif::NotAlmostIntersectingError& e) {
        last_error = e.what();
        return AIF_ERR_NOT_ALMOST_INTERSECTING;
    } catch (const aif::ResourceError& e) {
        last_error = e.what();
        return AIF_ERR_RESOURCE;
    } catch (const aif::DomainError& e) {
        last_error = e.what();
        return AIF_ERR_DOMAIN;
    } catch (const aif::UnsupportedError& e) {
        last_error = e.what();
        return AIF_ERR_UNSUPPORTED;
    } catch (const std::exception& e) {
        last_error = e.what();
        return AIF_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return AIF_ERR_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (p == nullptr) throw aif::ParamError(std::string(what) + " is null");
}

void emit(const json& j, char** out) {
    need(out, "output pointer");
    *out = dup_string(j.dump());
}

aif_family* wrap(aif::SetFamily f) { return new aif_family{std::move(f)}; }

json sets_json(std::span<const aif::Mask> masks) {
    json a = json::array();
    for (aif::Mask m : masks) a.push_back(aif::set_to_json(m));
    return a;
}

json bound_or_null(int n, int k) {
    if (k < 2 || n < k + 2) return nullptr;
    return aif::big_to_json(aif::size_b_plus(n, k));
}

json check_json(const aif::SetFamily& f) {
    const auto p = f.params();
    const bool ai = aif::is_almost_intersecting(f);
    json j = {{"n", p.n},
              {"k", p.k},
              {"size", f.size()},
              {"almost_intersecting", ai},
              {"intersecting", aif::is_intersecting(f)},
              {"bound", bound_or_null(p.n, p.k)},
              {"theorem_case", aif::to_string(aif::theorem_case(p.n, p.k))}};
    j["within_bound"] = j["bound"].is_null() ? json(nullptr) : json(aif::BigCount(f.size()) <= aif::size_b_plus(p.n, p.k));
    j["ell"] = ai ? json(aif::ell(f)) : json(nullptr);
    return j;
}

json partition_json(const aif::CanonicalPartition& cp) {
    json pairs = json::array();
    for (const auto& pr : cp.pairs) pairs.push_back({aif::set_to_json(pr.first), aif::set_to_json(pr.second)});
    return {{"core", sets_json(cp.core.masks())}, {"pairs", pairs}, {"ell", cp.ell()}};
}

json point_json(const aif::InequalityPoint& p) {
    return {{"inequality", p.inequality}, {"k", p.k},         {"n", p.n},
            {"m", p.m},                   {"s", p.s},         {"r", p.r},
            {"lhs", aif::big_to_json(p.lhs)}, {"rhs", aif::big_to_json(p.rhs)}};
}

json lemma_json(const aif::LemmaReport& r) {
    json failures = json::array();
    for (const auto& p : r.failures) failures.push_back(point_json(p));
    return {{"lemma", aif::to_string(r.lemma)}, {"k_lo", r.k_lo},         {"k_hi", r.k_hi},
            {"passed", r.passed},               {"out_of_domain", r.out_of_domain},
            {"failures", failures},             {"ok", r.ok()}};
}

}  // namespace

extern "C" {

const char* aif_version(void) { return "1.0.0"; }

const char* aif_last_error(void) { return last_error.c_str(); }

const char* aif_status_name(aif_status status) {
    switch (status) {
        case AIF_OK: return "ok";
        case AIF_ERR_PARAM: return "invalid parameters";
        case AIF_ERR_PARSE: return "parse error";
        case AIF_ERR_NOT_ALMOST_INTERSECTING: return "not almost intersecting";
        case AIF_ERR_RESOURCE: return "resource limit";
        case AIF_ERR_DOMAIN: return "outside formula domain";
        case AIF_ERR_UNSUPPORTED: return "unsupported";
        case AIF_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void aif_string_free(char* s) { std::free(s); }

aif_status aif_family_parse(const char* text, aif_family** out) {
    return guarded([&] {
        need(text, "json");
        need(out, "output pointer");
        *out = wrap(aif::parse_family(text));
    });
}

aif_status aif_family_to_json(const aif_family* f, char** out) {
    return guarded([&] {
        need(f, "family");
        emit(aif::family_to_json(f->value), out);
    });
}

void aif_family_free(aif_family* f) { delete f; }

size_t aif_family_size(const aif_family* f) { return f == nullptr ? 0 : f->value.size(); }

aif_status aif_construct(const aif_construct_args* args, aif_family** out) {
    return guarded([&] {
        need(args, "args");
        need(args->kind, "kind");
        need(out, "output pointer");
        const std::string kind = args->kind;
        const int n = args->n, k = args->k;
        if (kind == "star") {
            *out = wrap(aif::full_star(n, k, args->x));
        } else if (kind == "br") {
            *out = wrap(aif::b_r(n, k, args->r));
        } else if (kind == "hm") {
            *out = wrap(aif::hilton_milner(n, k));
        } else if (kind == "bplus") {
            if (args->extra == nullptr) {
                *out = wrap(aif::b_plus(n, k));
            } else {
                std::vector<aif::Element> extra(args->extra, args->extra + args->extra_len);
                const aif::Params p = aif::Params::make(n, k);
                *out = wrap(aif::b_plus(n, k, aif::KSubset::from_elements(p, extra).bits()));
            }
        } else if (kind == "lex") {
            *out = wrap(aif::lex_family(args->m, aif::Interval{1, n}, k));
        } else {
            throw aif::ParamError("unknown family kind '" + kind + "'");
        }
    });
}

aif_status aif_shadow(const aif_family* f, int b, aif_family** out) {
    return guarded([&] {
        need(f, "family");
        need(out, "output pointer");
        *out = wrap(aif::shadow(f->value, b));
    });
}

aif_status aif_check(const aif_family* f, char** out) {
    return guarded([&] {
        need(f, "family");
        emit(check_json(f->value), out);
    });
}

aif_status aif_partition(const aif_family* f, char** out) {
    return guarded([&] {
        need(f, "family");
        emit(partition_json(aif::canonical_partition(f->value)), out);
    });
}

aif_status aif_diagnose(const aif_family* f, char** out) {
    return guarded([&] {
        need(f, "family");
        const aif::Diagnosis d = aif::diagnose(f->value);
        json j = {{"size", d.size},
                  {"almost_intersecting", d.almost_intersecting},
                  {"ell", d.ell},
                  {"delta_f0", d.delta_f0},
                  {"r", d.r ? json(*d.r) : json(nullptr)},
                  {"theorem_case", aif::to_string(d.theorem_case)},
                  {"bound_value", d.bound ? aif::big_to_json(*d.bound) : json(nullptr)},
                  {"within_bound", d.bound ? json(d.within_bound) : json(nullptr)}};
        emit(j, out);
    });
}

aif_status aif_local_maximality(const aif_family* f, char** out) {
    return guarded([&] {
        need(f, "family");
        const auto ext = aif::local_maximality_check(f->value);
        emit({{"extensions", sets_json(ext)}, {"locally_maximal", ext.empty()}}, out);
    });
}

aif_status aif_cross(const aif_family* a, const aif_family* b, char** out) {
    return guarded([&] {
        need(a, "first family");
        need(b, "second family");
        const int n = a->value.params().n;
        if (b->value.params().n != n) throw aif::ParamError("cross: both families must share n");
        const aif::SetFamily partner = aif::max_cross_partner(a->value, b->value.params().k, aif::Interval{1, n});
        emit({{"cross_intersecting", aif::is_cross_intersecting(a->value, b->value)},
              {"size_a", a->value.size()},
              {"size_b", b->value.size()},
              {"max_partner_size", partner.size()}},
             out);
    });
}

void aif_search_args_init(aif_search_args* args) {
    if (args == nullptr) return;
    const aif::SearchBudget budget;
    *args = aif_search_args{0, 0, 1, 1, budget.max_nodes, budget.max_seconds, 1};
}

aif_status aif_search(const aif_search_args* args, char** summary, char** witnesses) {
    return guarded([&] {
        need(args, "args");
        need(summary, "summary pointer");
        aif::SearchProblem prob;
        prob.params = aif::Params::make(args->n, args->k);
        prob.symmetry = args->symmetry != 0;
        prob.k3_rules = args->k3_rules != 0;
        prob.budget = {args->max_nodes, args->max_seconds};
        if (args->jobs < 1 || args->jobs > 256) throw aif::ParamError("jobs must be in [1,256]");
        prob.jobs = args->jobs;
        const aif::SearchOutcome o = aif::max_almost_intersecting(prob);

        json stats = json::object();
        for (std::size_t r = 0; r < aif::kPruneRuleCount; ++r) {
            stats[aif::to_string(static_cast<aif::PruneRule>(r))] = o.stats.prunes[r];
        }
        const json s = {{"n", o.params.n},
                        {"k", o.params.k},
                        {"symmetry", prob.symmetry},
                        {"k3_rules", prob.k3_rules},
                        {"optimum", o.optimum},
                        {"exhausted", o.exhausted},
                        {"witness_count", o.witness_count},
                        {"witness_classes", o.witnesses.size()},
                        {"classes_complete", o.classes_complete},
                        {"nodes", o.stats.nodes},
                        {"seconds", o.seconds},
                        {"stats", stats}};
        std::string w;
        if (witnesses != nullptr) {
            json list = json::array();
            for (const auto& f : o.witnesses) list.push_back(aif::family_to_json(f));
            w = json{{"n", o.params.n}, {"k", o.params.k}, {"optimum", o.optimum}, {"witnesses", list}}.dump();
        }
        *summary = dup_string(s.dump());
        if (witnesses != nullptr) *witnesses = dup_string(w);
    });
}

aif_status aif_verify_lemma(const char* lemma, int k_lo, int k_hi, int jobs, char** out) {
    return guarded([&] {
        need(lemma, "lemma");
        emit(lemma_json(aif::check_lemma(aif::parse_lemma(lemma), k_lo, k_hi, jobs)), out);
    });
}

aif_status aif_verify_formulas(int k_lo, int k_hi, int n_max, char** out) {
    return guarded([&] {
        const aif::FormulaCheck c = aif::verify_formulas(k_lo, k_hi, n_max);
        json mism = json::array();
        for (const auto& m : c.mismatches) {
            mism.push_back({{"quantity", m.quantity}, {"n", m.n}, {"k", m.k}, {"r", m.r},
                            {"formula", aif::big_to_json(m.formula)}, {"enumerated", aif::big_to_json(m.enumerated)}});
        }
        emit({{"k_lo", c.k_lo},
              {"k_hi", c.k_hi},
              {"n_max", c.n_max},
              {"points", c.points},
              {"comparisons", c.comparisons},
              {"chain_checks", c.chain_checks},
              {"mismatches", mism},
              {"chain_failures", c.chain_failures},
              {"ok", c.ok()}},
             out);
    });
}

aif_status aif_bound_table(int k_lo, int k_hi, int n_lo, int n_hi, char** out) {
    return guarded([&] {
        json rows = json::array();
        for (const auto& row : aif::bound_table(k_lo, k_hi, n_lo, n_hi)) {
            json br = json::array(), dr = json::array();
            for (const auto& v : row.b_r) br.push_back(aif::big_to_json(v));
            for (const auto& v : row.delta_r) dr.push_back(aif::big_to_json(v));
            rows.push_back({{"n", row.n},
                            {"k", row.k},
                            {"ekr", aif::big_to_json(row.ekr)},
                            {"b_plus", aif::big_to_json(row.b_plus)},
                            {"b_r", br},
                            {"delta_b_r", dr},
                            {"ell_cap", aif::big_to_json(row.ell_cap)},
                            {"theorem_case", aif::to_string(row.theorem_case)},
                            {"enumerated", row.enumerated},
                            {"enumeration_agrees", row.enumeration_agrees}});
        }
        emit(rows, out);
    });
}

aif_status aif_compression_suite(int x, int a, int b, int trials, uint64_t seed, char** out) {
    return guarded([&] {
        const aif::CompressionSuite s = aif::compression_suite(seed, aif::Interval{1, x}, a, b, trials);
        emit({{"x", x},
              {"a", a},
              {"b", b},
              {"seed", seed},
              {"trials", s.trials},
              {"preserved", s.preserved},
              {"not_cross", s.not_cross},
              {"ok", s.ok()}},
             out);
    });
}

}  // extern "C"
