// Command-line front end. Talks to the library only through the C interface.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aif/aif.h"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudget = 3 };

struct Failure {
    int code;
    std::string message;
};

struct FamilyDeleter {
    void operator()(aif_family* f) const { aif_family_free(f); }
};
using Family = std::unique_ptr<aif_family, FamilyDeleter>;

void ok_or_throw(aif_status s) {
    if (s == AIF_OK) return;
    const int code = s == AIF_ERR_INTERNAL ? kVerificationFailed : kUsage;
    throw Failure{code, std::string(aif_status_name(s)) + ": " + aif_last_error()};
}

json take_json(char* text) {
    json j = json::parse(text);
    aif_string_free(text);
    return j;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw Failure{kUsage, "cannot open " + path};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Family load_family(const std::string& path) {
    aif_family* f = nullptr;
    ok_or_throw(aif_family_parse(read_input(path).c_str(), &f));
    return Family(f);
}

json family_json(const aif_family* f) {
    char* text = nullptr;
    ok_or_throw(aif_family_to_json(f, &text));
    return take_json(text);
}

struct Globals {
    int jobs = 1;
    std::uint64_t seed = 20240601;
    bool json_only = false;
};

void note(const Globals& g, const std::string& line) {
    if (!g.json_only) std::cerr << line << '\n';
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

// "k=3..6" or "k=3..6,n=7..14"
struct Grid {
    int k_lo = 3, k_hi = 6;
    std::optional<int> n_lo, n_hi;
};

Grid parse_grid(const std::string& text) {
    static const std::regex part(R"(\s*([kn])\s*=\s*(\d+)(?:\.\.(\d+))?\s*)");
    Grid g;
    std::stringstream ss(text);
    std::string item;
    bool saw_k = false;
    while (std::getline(ss, item, ',')) {
        std::smatch m;
        if (!std::regex_match(item, m, part)) throw Failure{kUsage, "bad grid component '" + item + "'"};
        const int lo = std::stoi(m[2]);
        const int hi = m[3].matched ? std::stoi(m[3]) : lo;
        if (m[1] == "k") {
            g.k_lo = lo;
            g.k_hi = hi;
            saw_k = true;
        } else {
            g.n_lo = lo;
            g.n_hi = hi;
        }
    }
    if (!saw_k) throw Failure{kUsage, "grid needs a k range"};
    return g;
}

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_table(const json& rows) {
    std::vector<std::vector<std::string>> lines = {{"n", "k", "C(n-1,k-1)", "|B+|", "|B_r| (r=3..k+1)", "Delta(B_r)", "ell cap", "case", "enum"}};
    for (const auto& r : rows) {
        std::string br, dr;
        for (const auto& v : r["b_r"]) br += (br.empty() ? "" : " ") + cell(v);
        for (const auto& v : r["delta_b_r"]) dr += (dr.empty() ? "" : " ") + cell(v);
        const std::string en = r["enumerated"].get<bool>() ? (r["enumeration_agrees"].get<bool>() ? "ok" : "MISMATCH") : "-";
        lines.push_back({cell(r["n"]), cell(r["k"]), cell(r["ekr"]), cell(r["b_plus"]), br, dr, cell(r["ell_cap"]),
                         r["theorem_case"].get<std::string>(), en});
    }
    std::vector<std::size_t> width(lines[0].size(), 0);
    for (const auto& l : lines) {
        for (std::size_t i = 0; i < l.size(); ++i) width[i] = std::max(width[i], l[i].size());
    }
    for (const auto& l : lines) {
        std::string out;
        for (std::size_t i = 0; i < l.size(); ++i) {
            out += l[i] + std::string(width[i] - l[i].size() + 2, ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        std::cerr << out << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Almost-intersecting set families: constructions, bounds and exact search"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--jobs", g.jobs, "Worker threads for search and verify-bounds")->check(CLI::Range(1, 256));
    app.add_option("--seed", g.seed, "Seed for randomized suites");
    app.add_flag("--json-only", g.json_only, "Suppress human-readable notes on stderr");

    // construct
    auto* construct = app.add_subcommand("construct", "Emit a named family as JSON");
    std::string kind;
    int cn = 0, ck = 0, cx = 1, cr = 3;
    std::uint64_t cm = 0;
    std::vector<int> extra;
    construct->add_option("--family", kind, "Family kind")->required()->check(CLI::IsMember({"star", "br", "hm", "bplus", "lex"}));
    construct->add_option("--n", cn, "Ground set size")->required();
    construct->add_option("--k", ck, "Uniformity")->required();
    construct->add_option("--x", cx, "Star centre");
    construct->add_option("--r", cr, "Parameter r of B_r");
    construct->add_option("--m", cm, "Number of sets (lex)");
    construct->add_option("--extra", extra, "Extra set of B+ (comma separated)")->delimiter(',');

    // family-in subcommands
    std::string input;
    auto* check = app.add_subcommand("check", "Check the almost-intersecting property and the size bound");
    check->add_option("input", input, "Family JSON file (default stdin)");
    auto* partition = app.add_subcommand("partition", "Canonical partition into core and disjoint pairs");
    partition->add_option("input", input, "Family JSON file (default stdin)");
    auto* diagnose = app.add_subcommand("diagnose", "Partition statistics and bound diagnostics");
    diagnose->add_option("input", input, "Family JSON file (default stdin)");
    auto* shadow = app.add_subcommand("shadow", "b-shadow of a family");
    int shadow_b = 0;
    shadow->add_option("input", input, "Family JSON file (default stdin)");
    shadow->add_option("--b", shadow_b, "Shadow level")->required();

    // search
    auto* search = app.add_subcommand("search", "Exact maximum almost-intersecting family");
    aif_search_args sargs;
    aif_search_args_init(&sargs);
    bool no_symmetry = false, no_k3 = false;
    std::string witnesses_path;
    search->add_option("--n", sargs.n, "Ground set size")->required();
    search->add_option("--k", sargs.k, "Uniformity")->required();
    search->add_option("--budget-nodes", sargs.max_nodes, "Node budget");
    search->add_option("--budget-secs", sargs.max_seconds, "Wall-clock budget in seconds");
    search->add_flag("--no-symmetry", no_symmetry, "Do not fix the first disjoint pair");
    search->add_flag("--no-k3-rules", no_k3, "Disable the k = 3 exclusions");
    search->add_option("--witnesses", witnesses_path, "Write one witness per isomorphism class here");

    // verify-bounds
    auto* verify = app.add_subcommand("verify-bounds", "Exhaustive inequality and formula checks");
    std::string lemma;
    int kmin = 0, kmax = 0, nmax = 14;
    bool formulas = false;
    verify->add_option("--lemma", lemma, "Inequality family")->check(CLI::IsMember({"central", "ratio", "tail", "large-n", "all"}));
    verify->add_flag("--formulas", formulas, "Closed forms against enumerated constructions");
    verify->add_option("--kmin", kmin, "Smallest k");
    verify->add_option("--kmax", kmax, "Largest k");
    verify->add_option("--nmax", nmax, "Largest n for --formulas");

    // cross
    auto* cross = app.add_subcommand("cross", "Cross-intersection verdict, or the seeded compression suite");
    std::vector<std::string> cross_files;
    int rx = 8, ra = 2, rb = 3, trials = 1000;
    bool random = false;
    cross->add_option("files", cross_files, "Two family JSON files")->expected(0, 2);
    cross->add_flag("--random", random, "Run the random compression suite instead");
    cross->add_option("--x", rx, "Ground set size for --random");
    cross->add_option("--a", ra, "Uniformity of A for --random");
    cross->add_option("--b", rb, "Uniformity of B for --random");
    cross->add_option("--trials", trials, "Pairs for --random");

    // report
    auto* report = app.add_subcommand("report", "Bound table over a parameter grid");
    std::string grid_text = "k=3..6";
    report->add_option("--grid", grid_text, "e.g. k=3..6 or k=3..6,n=7..20");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kUsage;
    }

    try {
        if (*construct) {
            aif_construct_args args{kind.c_str(), cn, ck, cx, cr, cm, extra.empty() ? nullptr : extra.data(), extra.size()};
            aif_family* f = nullptr;
            ok_or_throw(aif_construct(&args, &f));
            Family fam(f);
            print(family_json(fam.get()));
            return kOk;
        }
        if (*check) {
            Family f = load_family(input);
            char* text = nullptr;
            ok_or_throw(aif_check(f.get(), &text));
            const json j = take_json(text);
            print(j);
            const bool in_range = j["theorem_case"] != "outside";
            if (in_range && j["almost_intersecting"].get<bool>() && j["within_bound"] == false) {
                note(g, "family exceeds the bound inside the theorem's range");
                return kVerificationFailed;
            }
            return kOk;
        }
        if (*partition || *diagnose) {
            Family f = load_family(input);
            char* text = nullptr;
            ok_or_throw(*partition ? aif_partition(f.get(), &text) : aif_diagnose(f.get(), &text));
            print(take_json(text));
            return kOk;
        }
        if (*shadow) {
            Family f = load_family(input);
            aif_family* s = nullptr;
            ok_or_throw(aif_shadow(f.get(), shadow_b, &s));
            Family sh(s);
            print(family_json(sh.get()));
            return kOk;
        }
        if (*search) {
            sargs.symmetry = no_symmetry ? 0 : 1;
            sargs.k3_rules = no_k3 ? 0 : 1;
            sargs.jobs = g.jobs;
            char* summary = nullptr;
            char* wit = nullptr;
            ok_or_throw(aif_search(&sargs, &summary, witnesses_path.empty() ? nullptr : &wit));
            const json j = take_json(summary);
            if (!witnesses_path.empty()) {
                std::ofstream out(witnesses_path);
                out << take_json(wit).dump(2) << '\n';
                if (!out) throw Failure{kUsage, "cannot write " + witnesses_path};
            }
            print(j);
            note(g, "optimum " + j["optimum"].dump() + " after " + j["nodes"].dump() + " nodes");
            if (!j["exhausted"].get<bool>()) {
                note(g, "budget exhausted: the optimum is only a lower bound");
                return kBudget;
            }
            return kOk;
        }
        if (*verify) {
            if (formulas == !lemma.empty()) throw Failure{kUsage, "give exactly one of --lemma or --formulas"};
            if (formulas) {
                char* text = nullptr;
                ok_or_throw(aif_verify_formulas(kmin ? kmin : 3, kmax ? kmax : 6, nmax, &text));
                const json j = take_json(text);
                print(j);
                note(g, "formula comparisons: " + j["comparisons"].dump() + ", ordering checks: " + j["chain_checks"].dump());
                return j["ok"].get<bool>() ? kOk : kVerificationFailed;
            }
            const std::vector<std::string> ids =
                lemma == "all" ? std::vector<std::string>{"central", "ratio", "tail", "large-n"} : std::vector<std::string>{lemma};
            json all = json::array();
            bool ok = true;
            for (const auto& id : ids) {
                char* text = nullptr;
                ok_or_throw(aif_verify_lemma(id.c_str(), kmin ? kmin : 1, kmax ? kmax : 200, g.jobs, &text));
                json j = take_json(text);
                ok = ok && j["ok"].get<bool>();
                note(g, id + ": passed " + j["passed"].dump() + ", out of domain " + j["out_of_domain"].dump() +
                            ", failed " + std::to_string(j["failures"].size()));
                all.push_back(std::move(j));
            }
            print(all);
            return ok ? kOk : kVerificationFailed;
        }
        if (*cross) {
            if (random) {
                char* text = nullptr;
                ok_or_throw(aif_compression_suite(rx, ra, rb, trials, g.seed, &text));
                const json j = take_json(text);
                print(j);
                return j["ok"].get<bool>() ? kOk : kVerificationFailed;
            }
            if (cross_files.size() != 2) throw Failure{kUsage, "cross needs two family files"};
            Family a = load_family(cross_files[0]);
            Family b = load_family(cross_files[1]);
            char* text = nullptr;
            ok_or_throw(aif_cross(a.get(), b.get(), &text));
            print(take_json(text));
            return kOk;
        }
        if (*report) {
            const auto t0 = std::chrono::steady_clock::now();
            const Grid grid = parse_grid(grid_text);
            const int n_lo = grid.n_lo.value_or(2 * grid.k_lo + 1);
            const int n_hi = grid.n_hi.value_or(std::max(14, 3 * grid.k_hi + 3));
            if (n_hi > 64 || grid.k_hi > 31 || grid.k_lo < 2 || grid.k_lo > grid.k_hi) {
                throw Failure{kUsage, "grid must satisfy 2 <= k_lo <= k_hi and n <= 64"};
            }
            char* text = nullptr;
            ok_or_throw(aif_bound_table(grid.k_lo, grid.k_hi, n_lo, n_hi, &text));
            const json rows = take_json(text);
            if (!g.json_only) print_table(rows);
            bool agrees = true;
            for (const auto& r : rows) agrees = agrees && r["enumeration_agrees"].get<bool>();
            std::vector<std::string> echo(argv, argv + argc);
            print({{"command", echo},
                   {"params", {{"k_lo", grid.k_lo}, {"k_hi", grid.k_hi}, {"n_lo", n_lo}, {"n_hi", n_hi}}},
                   {"results", rows},
                   {"wall_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()},
                   {"version", aif_version()}});
            return agrees ? kOk : kVerificationFailed;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
