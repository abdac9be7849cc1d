// lcadag: recognition, transformation, and generation toolkit for DAGs with
// unique least common ancestors. See README.md for the command reference.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lcadag/dag.hpp"
#include "lcadag/errors.hpp"
#include "lcadag/holju.hpp"
#include "lcadag/io.hpp"
#include "lcadag/lca.hpp"
#include "lcadag/level1.hpp"
#include "lcadag/minors.hpp"
#include "lcadag/poset.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/transform.hpp"

namespace {

using nlohmann::json;
using namespace lcadag;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int effective_cap() {
    if (const char* env = std::getenv("LCADAG_MAX_N")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    return kDefaultIsoCap;
}

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Dag load_graph(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_graph_auto(in);
}

std::vector<std::string> sorted_labels(const Dag& g, const VertexSet& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (VertexId v : s.ids()) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::string braced(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += labels[i];
    }
    return out + "}";
}

std::string braced(const Dag& g, const VertexSet& s) { return braced(sorted_labels(g, s)); }

const char* route_name(Route r) {
    switch (r) {
        case Route::PairwiseVertex: return "pairwise";
        case Route::LxtLeafPairs: return "lxt";
        case Route::JoinSemilattice: return "join";
        case Route::DescendantClosed: return "descendants";
    }
    return "?";
}

// ---- witness rendering ----

struct Verdict {
    bool holds = false;
    json witness;             // null when holding
    std::string human;        // one indented line, empty when holding
    std::vector<std::string> routes;
};

json pair_witness(const Dag& g, VertexId u, VertexId v) {
    return json{{"type", "pair"}, {"vertices", sorted_labels(g, VertexSet::of({u, v}))}};
}

Verdict from_global_report(const Dag& g, const GlobalLcaReport& r) {
    Verdict out;
    out.holds = r.holds;
    out.routes = {route_name(r.route)};
    if (r.holds || !r.witness) return out;
    const GlobalLcaWitness& w = *r.witness;
    switch (w.kind) {
        case GlobalLcaWitness::Kind::AmbiguousPair: {
            out.witness = json{{"type", "ambiguous_pair"},
                               {"sets", json::array({sorted_labels(g, w.query), sorted_labels(g, w.lca)})}};
            out.human = "pair " + braced(g, w.query) + " has lca set " + braced(g, w.lca);
            break;
        }
        case GlobalLcaWitness::Kind::SystemPair: {
            json sets = json::array();
            for (const VertexSet& s : w.sets) sets.push_back(sorted_labels(g, s));
            out.witness = json{{"type", "system_pair"}, {"sets", sets}};
            out.human = "descendant sets " + braced(g, w.sets[0]) + " and " + braced(g, w.sets[1]) +
                        " meet in " + braced(g, w.sets[2]) + ", which is not a member";
            break;
        }
        case GlobalLcaWitness::Kind::MultipleRoots: {
            out.witness =
                json{{"type", "multiple_roots"}, {"vertices", sorted_labels(g, w.query)}};
            out.human = "not a network: roots " + braced(g, w.query);
            break;
        }
    }
    return out;
}

Verdict check_global_lca(const Dag& g, const std::string& route) {
    if (route == "pairwise") return from_global_report(g, has_global_lca_pairwise(g));
    if (route == "lxt") return from_global_report(g, has_global_lca_via_lxt(g));
    if (route == "descendants") return from_global_report(g, has_global_lca_via_descendants(g));
    if (route == "join") {
        JoinSemilatticeReport r = is_join_semilattice(reachability(g));
        Verdict out;
        out.holds = r.holds;
        out.routes = {"join"};
        if (!r.holds && r.witness) {
            out.witness = pair_witness(g, r.witness->first, r.witness->second);
            out.human = "pair {" + g.label(r.witness->first) + "," + g.label(r.witness->second) +
                        "} has no least upper bound";
        }
        return out;
    }
    // all routes, verdicts must agree
    Verdict first = check_global_lca(g, "pairwise");
    std::vector<std::string> names = {"lxt", "join", "descendants"};
    first.routes = {"pairwise", "lxt", "join", "descendants"};
    for (const std::string& name : names) {
        Verdict other = check_global_lca(g, name);
        if (other.holds != first.holds) {
            throw Error("route disagreement: pairwise says " +
                        std::string(first.holds ? "holds" : "fails") + ", " + name +
                        " says the opposite");
        }
    }
    return first;
}

Verdict check_minor_theorem(const Dag& g) {
    Verdict out;
    out.routes = {"minor"};
    try {
        MinorTheoremReport r = verify_minor_theorem(g, effective_cap());
        out.holds = r.holds;
        if (!r.holds && r.counterexample) {
            const K22Subdivision& c = *r.counterexample;
            VertexSet ends = VertexSet::of({c.root1, c.root2, c.sink1, c.sink2});
            out.witness = json{{"type", "k22_subdivision"}, {"vertices", sorted_labels(g, ends)}};
            out.human = "strict K2,2 subdivision with roots {" + g.label(c.root1) + "," +
                        g.label(c.root2) + "} and sinks {" + g.label(c.sink1) + "," +
                        g.label(c.sink2) + "} admits no hourglass refinement";
        }
    } catch (const NotANetwork&) {
        out.holds = false;
        out.witness = json{{"type", "multiple_roots"}, {"vertices", sorted_labels(g, roots(g))}};
        out.human = "not a network: roots " + braced(g, roots(g));
    }
    // the minor route must agree with direct recognition; the empty graph is
    // the one DAG outside the theorem's scope where recognition still holds
    bool direct = has_global_lca_pairwise(g).holds;
    if (g.vertex_count() > 0 && out.holds != direct) {
        throw Error("minor-theorem verdict disagrees with pairwise recognition");
    }
    return out;
}

Verdict check_predicate(const Dag& g, const std::string& which, const std::string& route) {
    if (which == "global-lca") return check_global_lca(g, route);
    if (which == "minor-theorem") return check_minor_theorem(g);

    Verdict out;
    out.routes = {which};
    if (which == "pcc") {
        PairReport r = satisfies_pcc(g);
        out.holds = r.holds;
        if (!r.holds && r.witness) {
            out.witness = pair_witness(g, r.witness->first, r.witness->second);
            out.human = "pair {" + g.label(r.witness->first) + "," + g.label(r.witness->second) +
                        "} breaks cluster-order compatibility";
        }
        return out;
    }
    if (which == "lca-relevant") {
        out.holds = is_lca_relevant(g);
        if (!out.holds) {
            PairReport pcc = satisfies_pcc(g);
            if (!pcc.holds && pcc.witness) {
                out.witness = pair_witness(g, pcc.witness->first, pcc.witness->second);
                out.human = "pair {" + g.label(pcc.witness->first) + "," +
                            g.label(pcc.witness->second) + "} breaks cluster-order compatibility";
            } else {
                SetSystem cs = clusters(g);
                for (int u = 0; u < g.vertex_count() && out.witness.is_null(); ++u) {
                    for (int v = u + 1; v < g.vertex_count(); ++v) {
                        if ((*cs.witness)[u] == (*cs.witness)[v]) {
                            out.witness = pair_witness(g, u, v);
                            out.human = "vertices " + g.label(u) + " and " + g.label(v) +
                                        " share the cluster " + braced(g, cs.members[(*cs.witness)[u]]);
                            break;
                        }
                    }
                }
            }
        }
        return out;
    }
    if (which == "regular") {
        out.holds = is_regular(g);
        if (!out.holds) out.human = "cluster map is not an isomorphism onto its Hasse diagram";
        return out;
    }
    if (which == "join-semilattice") return check_global_lca(g, "join");
    if (which == "level1" || which == "galled") {
        try {
            out.holds = which == "level1" ? is_level1(g) : is_galled_tree(g);
            if (!out.holds)
                out.human = which == "level1" ? "a block has two reticulation vertices"
                                              : "a block is not a single gall";
        } catch (const NotANetwork&) {
            out.holds = false;
            out.witness =
                json{{"type", "multiple_roots"}, {"vertices", sorted_labels(g, roots(g))}};
            out.human = "not a network: roots " + braced(g, roots(g));
        }
        return out;
    }
    throw CLI::ValidationError("check", "unknown predicate '" + which + "'");
}

struct CheckOutput {
    int code = kExitInternal;
    std::string out, err;
};

CheckOutput run_check_one(const std::string& path, const std::string& which,
                          const std::string& route, bool as_json, bool prefix) {
    CheckOutput r;
    std::ostringstream out, err;
    std::string head = prefix ? path + ": " : "";
    try {
        Dag g = load_graph(path);
        auto t0 = std::chrono::steady_clock::now();
        Verdict v = check_predicate(g, which, route);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (as_json) {
            json rep{{"predicate", which},
                     {"holds", v.holds},
                     {"routes", v.routes},
                     {"witness", v.witness},
                     {"timing_ms", ms}};
            out << head << rep.dump() << "\n";
        } else {
            out << head << which << ": " << (v.holds ? "holds" : "fails") << "\n";
            if (!v.human.empty()) out << head << "  " << v.human << "\n";
        }
        r.code = v.holds ? kExitHolds : kExitFails;
    } catch (const ParseError& e) {
        err << head << "parse error";
        if (e.line > 0) err << " (line " << e.line << ")";
        err << ": " << e.what() << "\n";
        r.code = kExitUsage;
    } catch (const SizeLimitExceeded& e) {
        err << head << "input too large: " << e.what() << "\n";
        r.code = kExitUsage;
    } catch (const Error& e) {
        err << head << "internal invariant violated: " << e.what() << "\n";
        r.code = kExitInternal;
    }
    r.out = out.str();
    r.err = err.str();
    return r;
}

int cmd_check(const std::vector<std::string>& inputs, const std::string& which,
              const std::string& route, bool as_json, int jobs) {
    std::vector<std::string> files = inputs.empty() ? std::vector<std::string>{"-"} : inputs;
    bool prefix = files.size() > 1;
    std::vector<CheckOutput> results(files.size());
    if (jobs > 1 && files.size() > 1) {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < files.size(); i = next++)
                results[i] = run_check_one(files[i], which, route, as_json, prefix);
        };
        std::vector<std::thread> pool;
        std::size_t n = std::min<std::size_t>(jobs, files.size());
        for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < files.size(); ++i)
            results[i] = run_check_one(files[i], which, route, as_json, prefix);
    }
    int worst = kExitHolds;
    for (const CheckOutput& r : results) {
        std::cout << r.out;
        std::cerr << r.err;
        worst = std::max(worst, r.code);
    }
    return worst;
}

int cmd_transform(const std::string& input, const std::string& which, const std::string& policy,
                  bool as_dot) {
    Dag g = load_graph(input);
    Dag out = [&] {
        if (which == "sf") return sf(g);
        if (which == "rev") return reverse(g);
        if (which == "lxt") return lxt(g).dag;
        if (which == "lop") {
            LopPolicy p = policy == "lowest"    ? LopPolicy::LowestId
                          : policy == "highest" ? LopPolicy::HighestId
                                                : LopPolicy::SyntheticFirst;
            return lop(g, p);
        }
        if (which == "hasse-clusters") return hasse(clusters(g), HasseLabeling::SetNotation);
        if (which == "hasse-descendants") return hasse(descendants(g), HasseLabeling::WitnessLabels);
        throw CLI::ValidationError("transform", "unknown transform '" + which + "'");
    }();
    std::cout << (as_dot ? emit_dot(out) : emit_edge_list(out));
    return kExitHolds;
}

int cmd_systems(const std::string& input, const std::string& which, bool closed, bool pre_binary,
                int pre_k) {
    Dag g = load_graph(input);
    SetSystem s = [&] {
        if (which == "clusters") return clusters(g);
        if (which == "descendants") return descendants(g);
        if (which == "ancestors") return ancestors(g);
        if (which == "intermediaries") return intermediaries(g);
        throw CLI::ValidationError("systems", "unknown family '" + which + "'");
    }();
    if (!closed && !pre_binary && pre_k == 0) {
        std::cout << set_system_to_json(s) << "\n";
        return kExitHolds;
    }
    json rep{{"family", json::parse(set_system_to_json(s))}};
    bool all_hold = true;
    auto label_sets = [&](const std::vector<VertexSet>& sets) {
        json arr = json::array();
        for (const VertexSet& m : sets) {
            std::vector<std::string> ls;
            for (VertexId v : m.ids()) ls.push_back(s.labels.at(v));
            std::sort(ls.begin(), ls.end());
            arr.push_back(ls);
        }
        return arr;
    };
    if (closed) {
        ClosednessReport r = is_closed(s);
        json entry{{"holds", r.closed}};
        if (!r.closed && r.violating) {
            entry["witness"] = json{{"type", "system_pair"},
                                    {"sets", label_sets({s.members[r.violating->first],
                                                         s.members[r.violating->second]})}};
        }
        rep["closed"] = entry;
        all_hold = all_hold && r.closed;
    }
    auto pre_entry = [&](const PreAryReport& r) {
        json entry{{"holds", r.holds}};
        if (!r.holds && r.witness)
            entry["witness"] = json{{"type", "subset"}, {"sets", label_sets({*r.witness})}};
        return entry;
    };
    if (pre_binary) {
        PreAryReport r = is_pre_binary(s);
        rep["pre_binary"] = pre_entry(r);
        all_hold = all_hold && r.holds;
    }
    if (pre_k > 0) {
        PreAryReport r = is_pre_k_ary(s, pre_k);
        rep["pre_k"] = pre_entry(r);
        all_hold = all_hold && r.holds;
    }
    std::cout << rep.dump() << "\n";
    return all_hold ? kExitHolds : kExitFails;
}

int cmd_generate_holju(int n, std::uint64_t seed, int max_parents, const std::string& trace_path,
                       bool as_dot) {
    RandomLcaParams params;
    params.max_parents = max_parents;
    auto [g, trace] = random_global_lca(n, seed, params);
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) throw ParseError("cannot open '" + trace_path + "' for writing");
        out << emit_trace(trace);
    }
    std::cout << (as_dot ? emit_dot(g) : emit_edge_list(g));
    return kExitHolds;
}

int cmd_generate_level1(int n, std::uint64_t seed, bool galled_only, bool as_dot) {
    Level1Params params;
    params.galled_only = galled_only;
    Dag g = random_level1(n, seed, params);
    std::cout << (as_dot ? emit_dot(g) : emit_edge_list(g));
    return kExitHolds;
}

int cmd_replay(const std::string& input, bool unchecked, bool as_dot) {
    std::istringstream in(slurp(input));
    ConstructionTrace t = parse_trace(in);
    Dag g = replay(t, unchecked ? ExtendMode::Unchecked : ExtendMode::Checked);
    std::cout << (as_dot ? emit_dot(g) : emit_edge_list(g));
    return kExitHolds;
}

int cmd_deconstruct(const std::string& input) {
    Dag g = load_graph(input);
    ConstructionTrace t = deconstruct(g);
    std::cout << emit_trace(t);
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unique least common ancestors in DAGs: checks, transforms, generators"};
    app.require_subcommand(1);

    // check
    std::vector<std::string> check_inputs;
    std::string check_which, check_route = "all";
    bool check_json = false;
    int check_jobs = 1;
    CLI::App* check = app.add_subcommand("check", "Decide a predicate; exit 0 holds, 1 fails");
    check->add_option("predicate", check_which, "One of: global-lca, lca-relevant, pcc, regular, "
                                                "level1, galled, join-semilattice, minor-theorem")
        ->required()
        ->check(CLI::IsMember({"global-lca", "lca-relevant", "pcc", "regular", "level1", "galled",
                               "join-semilattice", "minor-theorem"}));
    check->add_option("inputs", check_inputs, "Graph files ('-' or none: stdin)");
    check->add_option("--route", check_route, "Restrict global-lca to one route")
        ->check(CLI::IsMember({"all", "pairwise", "lxt", "join", "descendants"}));
    check->add_flag("--json", check_json, "One JSON report per input line");
    check->add_option("--jobs", check_jobs, "Parallel workers over multiple inputs")
        ->check(CLI::PositiveNumber);

    // transform
    std::string tf_input = "-", tf_which, tf_policy = "synthetic-first";
    bool tf_dot = false;
    CLI::App* transform = app.add_subcommand("transform", "Rewrite a graph and print it");
    transform->add_option("op", tf_which, "One of: sf, lxt, lop, rev, hasse-clusters, "
                                          "hasse-descendants")
        ->required()
        ->check(CLI::IsMember({"sf", "lxt", "lop", "rev", "hasse-clusters", "hasse-descendants"}));
    transform->add_option("input", tf_input, "Graph file ('-': stdin)");
    transform->add_option("--policy", tf_policy, "Leaf choice for lop")
        ->check(CLI::IsMember({"synthetic-first", "lowest", "highest"}));
    transform->add_flag("--dot", tf_dot, "Emit DOT instead of an edge list");

    // systems
    std::string sys_input = "-", sys_which;
    bool sys_closed = false, sys_pre_binary = false;
    int sys_pre_k = 0;
    CLI::App* systems = app.add_subcommand("systems", "Print a set system as JSON");
    systems->add_option("family", sys_which, "One of: clusters, descendants, ancestors, "
                                             "intermediaries")
        ->required()
        ->check(CLI::IsMember({"clusters", "descendants", "ancestors", "intermediaries"}));
    systems->add_option("input", sys_input, "Graph file ('-': stdin)");
    systems->add_flag("--closed", sys_closed, "Also report closedness");
    systems->add_flag("--pre-binary", sys_pre_binary, "Also report the pre-binary property");
    systems->add_option("--pre-k", sys_pre_k, "Also report the pre-k-ary property")
        ->check(CLI::PositiveNumber);

    // generate
    CLI::App* generate = app.add_subcommand("generate", "Produce seeded random graphs");
    generate->require_subcommand(1);
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    int gen_max_parents = 3;
    std::string gen_trace;
    bool gen_dot = false, gen_galled = false;
    CLI::App* gen_holju =
        generate->add_subcommand("holju", "Graph with the global lca-property, by construction");
    gen_holju->add_option("n", gen_n, "Vertex count")->required()->check(CLI::PositiveNumber);
    gen_holju->add_option("seed", gen_seed, "Random seed")->required();
    gen_holju->add_option("--max-parents", gen_max_parents, "Cap on parents per added leaf")
        ->check(CLI::PositiveNumber);
    gen_holju->add_option("--trace", gen_trace, "Also write the construction trace to a file");
    gen_holju->add_flag("--dot", gen_dot, "Emit DOT instead of an edge list");
    CLI::App* gen_level1 = generate->add_subcommand("level1", "Level-1 network");
    gen_level1->add_option("n", gen_n, "Vertex count")->required()->check(CLI::PositiveNumber);
    gen_level1->add_option("seed", gen_seed, "Random seed")->required();
    gen_level1->add_flag("--galled-only", gen_galled, "Keep every block a plain gall");
    gen_level1->add_flag("--dot", gen_dot, "Emit DOT instead of an edge list");

    // replay / deconstruct
    std::string replay_input = "-";
    bool replay_unchecked = false, replay_dot = false;
    CLI::App* replay_cmd = app.add_subcommand("replay", "Rebuild a graph from a trace");
    replay_cmd->add_option("input", replay_input, "Trace file ('-': stdin)");
    replay_cmd->add_flag("--unchecked", replay_unchecked, "Skip the per-step attachment check");
    replay_cmd->add_flag("--dot", replay_dot, "Emit DOT instead of an edge list");

    std::string dec_input = "-";
    CLI::App* dec = app.add_subcommand("deconstruct", "Derive a construction trace");
    dec->add_option("input", dec_input, "Graph file ('-': stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(check_inputs, check_which, check_route, check_json, check_jobs);
        if (transform->parsed()) return cmd_transform(tf_input, tf_which, tf_policy, tf_dot);
        if (systems->parsed())
            return cmd_systems(sys_input, sys_which, sys_closed, sys_pre_binary, sys_pre_k);
        if (gen_holju->parsed())
            return cmd_generate_holju(gen_n, gen_seed, gen_max_parents, gen_trace, gen_dot);
        if (gen_level1->parsed()) return cmd_generate_level1(gen_n, gen_seed, gen_galled, gen_dot);
        if (replay_cmd->parsed()) return cmd_replay(replay_input, replay_unchecked, replay_dot);
        if (dec->parsed()) return cmd_deconstruct(dec_input);
    } catch (const ParseError& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "input too large: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotHolju& e) {
        std::cerr << "not constructible: " << e.what() << " (valid prefix: " << e.prefix_size
                  << " vertices)\n";
        return kExitFails;
    } catch (const OStarViolated& e) {
        std::cerr << "attachment condition violated";
        if (e.step > 0) std::cerr << " at step " << e.step;
        std::cerr << ": " << e.what() << "\n";
        return kExitFails;
    } catch (const NotTreeLeafChild& e) {
        std::cerr << "no removable leaf: " << e.what() << "\n";
        return kExitFails;
    } catch (const MalformedInput& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
