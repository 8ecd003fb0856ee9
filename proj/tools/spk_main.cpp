#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spk/analysis.hpp"
#include "spk/catalog.hpp"
#include "spk/checks.hpp"
#include "spk/enumerate.hpp"
#include "spk/grammar.hpp"
#include "spk/stats.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace spk;

namespace {

constexpr int kSchemaVersion = 1;

struct GlobalFlags {
    std::string format = "text";
    std::string cache_dir;
    int jobs = 1;
    bool deep = false;
    int n = -1;
    int n_max = -1;
    std::string out_file;
};

json json_word(const StirlingWord& w) { return json(w.letters); }
json json_signed(const SignedPerm& p) { return json(p.values); }
json json_perm(const std::vector<int>& p) { return json(p); }
json json_code(const SPCode& c) {
    json arr = json::array();
    for (const auto& [a, b] : c.pairs) arr.push_back(json::array({a, b}));
    return arr;
}
json json_tree(const TernaryTree& t) {
    return json{{"parent", t.parent}, {"slot", t.slot}};
}

json json_stats(const StatRecord& r) {
    return json{{"asc", r.asc},     {"plat", r.plat}, {"des", r.des},   {"lap", r.lap},
                {"rpd", r.rpd},     {"eud", r.eud},   {"apd", r.apd},   {"vv", r.vv},
                {"dplat", r.dplat}, {"dasc", r.dasc}, {"dd", r.dd},     {"uu", r.uu},
                {"ddes", r.ddes},   {"pasc", r.pasc}, {"apap", r.apap}, {"dpa", r.dpa},
                {"pdpd", r.pdpd},   {"ap", r.ap}};
}
json json_stats(const QZeroStatRecord& r) {
    return json{{"lap", r.lap}, {"ap", r.ap}, {"even", r.even}};
}
json json_stats(const SignedStatRecord& r) {
    json j{{"desA", r.desA}, {"desB", r.desB}, {"neg", r.neg}, {"fdes", r.fdes}};
    if (r.desD) j["desD"] = *r.desD;
    return j;
}
json json_stats(const PermStatRecord& r) {
    return json{{"des", r.des}, {"exc", r.exc},     {"ipk", r.ipk},
                {"lpk", r.lpk}, {"udrun", r.udrun}, {"fix", r.fix}};
}

std::string text_stats(const json& j) {
    std::string out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!out.empty()) out += ' ';
        out += it.key() + "=" + it.value().dump();
    }
    return out;
}

int cmd_enumerate(const GlobalFlags& g, const std::string& family, const std::string& emit) {
    Family f = family_from(family);
    if (g.n < 1) throw CLI::ValidationError("--n is required and must be >= 1");
    bool as_json = g.format == "json";

    if (emit == "count") {
        Int c = count_family(f, g.n);
        if (as_json)
            std::cout << json{{"schema_version", kSchemaVersion},
                              {"family", family},
                              {"n", g.n},
                              {"count", c.str()}}
                             .dump()
                      << "\n";
        else
            std::cout << c.str() << "\n";
        return 0;
    }

    bool with_stats = emit == "stats";
    auto record = [&](const json& object, const json& stats, const std::string& text,
                      const std::string& stats_text) {
        if (as_json) {
            json j{{"schema_version", kSchemaVersion}, {"family", family}, {"n", g.n},
                   {"object", object}};
            if (with_stats) j["stats"] = stats;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << text;
            if (with_stats) std::cout << "  " << stats_text;
            std::cout << "\n";
        }
    };

    FamilyVisitor v;
    v.word = [&](const StirlingWord& w) {
        json stats;
        std::string st;
        if (with_stats) {
            stats = f == Family::Q0 ? json_stats(qzero_stats(w)) : json_stats(word_stats(w));
            st = text_stats(stats);
        }
        record(json_word(w), stats, w.str(), st);
    };
    v.signed_perm = [&](const SignedPerm& p) {
        json stats;
        std::string st;
        if (with_stats) {
            stats = json_stats(signed_stats(p));
            st = text_stats(stats);
        }
        record(json_signed(p), stats, p.str(), st);
    };
    v.perm = [&](const std::vector<int>& p) {
        json stats;
        std::string st;
        if (with_stats) {
            stats = json_stats(perm_stats(p));
            st = text_stats(stats);
        }
        std::string text;
        for (size_t i = 0; i < p.size(); ++i) text += (i ? " " : "") + std::to_string(p[i]);
        record(json_perm(p), stats, text, st);
    };
    v.code = [&](const SPCode& c) {
        json stats;
        std::string st;
        if (with_stats) {
            stats = json_stats(code_stats(c));
            st = text_stats(stats);
        }
        record(json_code(c), stats, c.str(), st);
    };
    v.tree = [&](const TernaryTree& t) {
        json stats;
        std::string st;
        if (with_stats) {
            stats = json_stats(word_stats(tree_to_word(t)));
            st = text_stats(stats);
        }
        std::string text = "parent=[";
        for (size_t i = 1; i < t.parent.size(); ++i)
            text += (i > 1 ? "," : "") + std::to_string(t.parent[i]);
        text += "] slot=[";
        for (size_t i = 1; i < t.slot.size(); ++i)
            text += (i > 1 ? "," : "") + std::to_string(t.slot[i]);
        text += "]";
        record(json_tree(t), stats, text, st);
    };
    for_each_family(f, g.n, v);
    return 0;
}

std::string cache_path(const GlobalFlags& g, const std::string& family, int n) {
    if (g.cache_dir.empty()) return "";
    return (fs::path(g.cache_dir) / (family + "_" + std::to_string(n) + ".poly")).string();
}

Polynomial cached_family_poly(const GlobalFlags& g, FamilyName f, int n) {
    std::string path = cache_path(g, to_string(f), n);
    if (!path.empty() && fs::exists(path)) {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string body = buf.str();
        if (!body.empty() && body.back() == '\n') body.pop_back();
        try {
            Polynomial p = Polynomial::parse(body);
            if (p.text() == body) return p;  // revalidated
        } catch (const ParseError&) {
            // stale or corrupt entry: fall through and recompute
        }
    }
    Polynomial p = family_poly(f, n);
    if (!path.empty()) {
        fs::create_directories(fs::path(path).parent_path());
        std::ofstream out(path, std::ios::trunc);
        out << p.text() << "\n";
    }
    return p;
}

int cmd_poly(const GlobalFlags& g, const std::string& family, const std::string& var_map) {
    FamilyName f = family_poly_from(family);
    if (g.n < 0) throw CLI::ValidationError("--n is required");
    Polynomial p = cached_family_poly(g, f, g.n);
    if (!var_map.empty()) {
        std::map<VarName, Polynomial> subs;
        std::stringstream ss(var_map);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw CLI::ValidationError("--var-map entries must look like k=v");
            subs.emplace(VarName(item.substr(0, eq)), Polynomial::parse(item.substr(eq + 1)));
        }
        p = p.substitute(subs);
    }
    if (g.format == "json")
        std::cout << json{{"schema_version", kSchemaVersion},
                          {"family", family},
                          {"n", g.n},
                          {"poly", p.text()}}
                         .dump()
                  << "\n";
    else
        std::cout << p.text() << "\n";
    return 0;
}

int cmd_gamma(const GlobalFlags& g) {
    if (g.n < 1) throw CLI::ValidationError("--n is required and must be >= 1");
    const GammaTable& t = gamma_table(g.n);
    // rows ordered by k descending, then i, j ascending
    std::vector<std::array<int, 3>> keys;
    for (const auto& [key, value] : t.entries) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        if (a[2] != b[2]) return a[2] > b[2];
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    });
    if (g.format == "json") {
        json rows = json::array();
        for (const auto& [i, j, k] : keys)
            rows.push_back(json{{"i", i}, {"j", j}, {"k", k}, {"value", t.at(i, j, k).str()}});
        std::cout << json{{"schema_version", kSchemaVersion}, {"n", g.n}, {"entries", rows}}.dump()
                  << "\n";
    } else {
        for (const auto& [i, j, k] : keys)
            std::cout << "(" << i << "," << j << "," << k << "): " << t.at(i, j, k).str() << "\n";
    }
    return 0;
}

int cmd_grammar(const GlobalFlags& g, const std::string& name, int power,
                const std::string& seed) {
    const Grammar& gr = builtin_grammar(grammar_name_from(name));
    Polynomial p = gr.derive_iter(Polynomial::parse(seed), power);
    if (g.format == "json")
        std::cout << json{{"schema_version", kSchemaVersion},
                          {"grammar", name},
                          {"power", power},
                          {"poly", p.text()}}
                         .dump()
                  << "\n";
    else
        std::cout << p.text() << "\n";
    return 0;
}

int cmd_verify(const GlobalFlags& g, const std::string& check, bool all) {
    std::vector<CheckId> ids;
    if (all) {
        for (const auto& [name, id] : check_ids()) ids.push_back(id);
    } else if (!check.empty()) {
        ids.push_back(check_from(check));
    } else {
        throw CLI::ValidationError("verify needs --check <id> or --all");
    }
    CheckOptions opts;
    opts.deep = g.deep;
    CheckReport report = run_checks(ids, g.n_max, opts, g.jobs);

    if (g.format == "json") {
        json rows = json::array();
        for (const CheckRow& r : report.rows) {
            json row{{"check", r.check}, {"n", r.n}, {"status", r.pass ? "pass" : "fail"}};
            if (!r.pass) row["counterexample"] = r.counterexample;
            rows.push_back(row);
        }
        std::cout << json{{"schema_version", kSchemaVersion},
                          {"rows", rows},
                          {"all_pass", report.all_pass()}}
                         .dump()
                  << "\n";
    } else {
        for (const CheckRow& r : report.rows) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << " n=" << r.n;
            if (!r.pass) std::cout << "  " << r.counterexample;
            std::cout << "\n";
        }
        size_t failed = 0;
        for (const CheckRow& r : report.rows)
            if (!r.pass) ++failed;
        std::cout << report.rows.size() << " rows, " << (report.rows.size() - failed)
                  << " passed, " << failed << " failed\n";
    }
    // timing is informational only and never part of stdout
    double total = 0;
    for (const CheckRow& r : report.rows) total += r.millis;
    std::cerr << "verify: " << report.rows.size() << " rows in " << (long long)total << " ms\n";

    if (!g.out_file.empty()) {
        json rows = json::array();
        for (const CheckRow& r : report.rows)
            rows.push_back(json{{"check", r.check},
                                {"n", r.n},
                                {"status", r.pass ? "pass" : "fail"},
                                {"millis", r.millis},
                                {"counterexample", r.counterexample}});
        std::ofstream out(g.out_file, std::ios::trunc);
        out << json{{"schema_version", kSchemaVersion},
                    {"rows", rows},
                    {"all_pass", report.all_pass()}}
                   .dump(2)
            << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

Polynomial zeros_family(const std::string& family, int n) {
    if (family == "f") return f_poly(n);
    if (family == "xi") return xi_poly(n);
    if (family == "zeta") {
        if (n < 2) throw CLI::ValidationError("zeta root analysis starts at n=2");
        return zeta_poly(n);
    }
    throw CLI::ValidationError("zeros family must be f, xi, or zeta");
}

int cmd_zeros(const GlobalFlags& g, const std::string& family, bool theorem) {
    if (theorem) {
        int n_max = g.n_max >= 2 ? g.n_max : 12;
        ZerosReport report = theorem_zeros_report(n_max);
        if (g.format == "json") {
            json items = json::array();
            for (const auto& item : report.items) {
                json j{{"n", item.n}, {"claim", item.claim},
                       {"status", item.pass ? "pass" : "fail"}};
                if (!item.detail.empty()) j["detail"] = item.detail;
                items.push_back(j);
            }
            std::cout << json{{"schema_version", kSchemaVersion},
                              {"n_max", n_max},
                              {"items", items},
                              {"all_pass", report.all_pass()}}
                             .dump()
                      << "\n";
        } else {
            for (const auto& item : report.items)
                std::cout << (item.pass ? "PASS " : "FAIL ") << "n=" << item.n << "  "
                          << item.claim << (item.detail.empty() ? "" : "  " + item.detail)
                          << "\n";
        }
        return report.all_pass() ? 0 : 1;
    }

    if (g.n < 1) throw CLI::ValidationError("--n is required and must be >= 1");
    Polynomial p = zeros_family(family, g.n);
    if (p.is_zero()) throw CLI::ValidationError("the zero polynomial has no root report");
    RootReport report = isolate_roots(p);
    if (g.format == "json") {
        json roots = json::array();
        for (const auto& r : report.roots) {
            json j;
            if (r.exact)
                j["root"] = rat_str(r.lo);
            else {
                j["lo"] = rat_str(r.lo);
                j["hi"] = rat_str(r.hi);
            }
            j["multiplicity"] = r.multiplicity;
            roots.push_back(j);
        }
        std::cout << json{{"schema_version", kSchemaVersion},
                          {"family", family},
                          {"n", g.n},
                          {"poly", report.polynomial},
                          {"degree", report.degree},
                          {"distinct_real_roots", report.distinct_real_roots},
                          {"roots", roots}}
                         .dump()
                  << "\n";
    } else {
        std::cout << report.polynomial << "\n";
        for (const auto& r : report.roots) {
            if (r.exact)
                std::cout << "root " << rat_str(r.lo) << " multiplicity " << r.multiplicity
                          << "\n";
            else
                std::cout << "interval (" << rat_str(r.lo) << ", " << rat_str(r.hi)
                          << ") multiplicity " << r.multiplicity << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration, identity verification, and root certification"};
    app.require_subcommand(1);

    GlobalFlags g;
    if (const char* env = std::getenv("SPK_CACHE_DIR")) g.cache_dir = env;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", g.format)->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--jobs", g.jobs)->check(CLI::PositiveNumber);
        sub->add_option("--cache-dir", g.cache_dir);
        sub->add_flag("--deep", g.deep);
        sub->add_option("--n-max", g.n_max);
        sub->add_option("--out", g.out_file);
    };

    std::string family, emit = "objects", check, grammar_name, seed_word, var_map;
    bool all = false, theorem = false;
    int power = 1;

    CLI::App* enumerate = app.add_subcommand("enumerate", "list a combinatorial family");
    enumerate->add_option("--family", family)->required();
    enumerate->add_option("--n", g.n);
    enumerate->add_option("--emit", emit)->check(CLI::IsMember({"objects", "stats", "count"}));
    add_common(enumerate);

    CLI::App* stats = app.add_subcommand("stats", "emit one statistics record per object");
    stats->add_option("--family", family)->required();
    stats->add_option("--n", g.n);
    add_common(stats);

    CLI::App* poly = app.add_subcommand("poly", "compute a named polynomial family");
    poly->add_option("--family", family)->required();
    poly->add_option("--n", g.n);
    poly->add_option("--var-map", var_map);
    add_common(poly);

    CLI::App* gamma = app.add_subcommand("gamma", "print the expansion coefficient table");
    gamma->add_option("--n", g.n);
    add_common(gamma);

    CLI::App* grammar = app.add_subcommand("grammar", "iterate a formal grammar derivative");
    grammar->add_option("--name", grammar_name)->required();
    grammar->add_option("--power", power);
    grammar->add_option("--seed-word", seed_word)->required();
    add_common(grammar);

    CLI::App* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("--check", check);
    verify->add_flag("--all", all);
    add_common(verify);

    CLI::App* zeros = app.add_subcommand("zeros", "exact root reports");
    zeros->add_option("--family", family);
    zeros->add_option("--n", g.n);
    zeros->add_flag("--theorem", theorem);
    add_common(zeros);

    try {
        app.parse(argc, argv);
        if (enumerate->parsed()) return cmd_enumerate(g, family, emit);
        if (stats->parsed()) {
            if (g.format == "text") g.format = "json";
            return cmd_enumerate(g, family, "stats");
        }
        if (poly->parsed()) return cmd_poly(g, family, var_map);
        if (gamma->parsed()) return cmd_gamma(g);
        if (grammar->parsed()) return cmd_grammar(g, grammar_name, power, seed_word);
        if (verify->parsed()) return cmd_verify(g, check, all);
        if (zeros->parsed()) return cmd_zeros(g, family, theorem);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
