#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "inversion/constructions.hpp"
#include "inversion/experiments.hpp"
#include "inversion/gf2.hpp"
#include "inversion/io.hpp"
#include "inversion/solvers.hpp"

using nlohmann::json;
using namespace inversion;

namespace {

constexpr int kExitViolated = 2;
constexpr int kExitBudget = 3;

OrientedGraph load_graph(const std::string& path) {
    if (path == "-") return parse_digraph(std::cin);
    return parse_digraph_file(path);
}

std::ostream& open_sink(const std::string& path, std::ofstream& file, bool append = false) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, append ? std::ios::app : std::ios::out);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

json family_json(const InversionFamily& f) {
    json a = json::array();
    for (const Bitset& s : f.sets) a.push_back(s.members());
    return a;
}

json certified_json(const CertifiedValue& cv) {
    json j = {{"value", cv.value},
              {"found", cv.found},
              {"family", family_json(cv.family)},
              {"method", cv.method},
              {"elapsed_s", cv.elapsed}};
    if (!cv.vertex_witness.empty()) j["vertex_witness"] = cv.vertex_witness;
    if (!cv.arc_witness.empty()) {
        json arcs = json::array();
        for (auto [u, v] : cv.arc_witness) arcs.push_back({u, v});
        j["arc_witness"] = arcs;
    }
    if (cv.exhaustion)
        j["exhaustion"] = {{"space", cv.exhaustion->space},
                           {"candidates", cv.exhaustion->candidates},
                           {"examined", cv.exhaustion->examined},
                           {"depth", cv.exhaustion->depth}};
    return j;
}

// exact inv for any input within the guards: Gram solver for small
// tournaments, otherwise iterative deepening capped by tau'
CertifiedValue solve_inv(const OrientedGraph& d) {
    if (d.is_tournament() && d.order() <= 9) return inv_exact(d);
    CertifiedValue cap = tau_prime(d);
    CertifiedValue res = inv_exact_oracle(d, cap.value);
    if (!res.found) throw std::logic_error("solve_inv: inv > tau' is impossible");
    return res;
}

int cmd_gen(const std::string& family, int n, int k, int big_n, uint64_t seed,
            const std::string& format, const std::string& out_path) {
    OrientedGraph g;
    if (family == "transitive") g = transitive(n);
    else if (family == "cycle") g = directed_cycle(n);
    else if (family == "q") g = q_tournament(n);
    else if (family == "r5") g = r5();
    else if (family == "tk") g = tk_tournament(k, big_n).first;
    else if (family == "random-tournament") g = random_tournament(n, seed);
    else if (family == "random-oriented") g = random_oriented_graph(n, seed);
    else if (family == "triangle") g = triangle_iter(transitive(n), k);
    else if (family == "lex-c3") g = lex_product(transitive(n), directed_cycle(3));
    else throw CLI::ValidationError("--family", "unknown family " + family);

    std::ofstream file;
    std::ostream& out = open_sink(out_path, file);
    if (format == "dot")
        to_dot(g, out);
    else
        render_digraph(g, out);
    return 0;
}

int cmd_solve(const std::string& op, const std::string& in_path, int limit, long budget,
              const std::string& out_path) {
    OrientedGraph d = load_graph(in_path);
    std::ofstream file;
    std::ostream& out = open_sink(out_path, file);
    json j;
    j["op"] = op;
    j["order"] = d.order();
    if (op == "inv") {
        j["result"] = certified_json(solve_inv(d));
    } else if (op == "inv-oracle") {
        j["result"] = certified_json(inv_exact_oracle(d, limit, budget));
    } else if (op == "greedy") {
        j["result"] = certified_json(greedy_upper_bound(d));
    } else if (op == "tau") {
        j["result"] = certified_json(tau(d));
    } else if (op == "tau-prime") {
        j["result"] = certified_json(tau_prime(d));
    } else if (op == "bounds") {
        BoundsReport rep = check_bounds(d);
        j["result"] = {{"inv", certified_json(rep.inv)},
                       {"tau", certified_json(rep.tau_value)},
                       {"tau_prime", certified_json(rep.tau_prime_value)},
                       {"inv_le_tau_prime", rep.inv_le_tau_prime},
                       {"inv_le_two_tau", rep.inv_le_two_tau},
                       {"deletion_monotone", rep.deletion_monotone}};
        if (!rep.inv_le_tau_prime || !rep.inv_le_two_tau || !rep.deletion_monotone) {
            out << j.dump() << "\n";
            return kExitViolated;
        }
    } else if (op == "split") {
        Cycle c = shortest_cycle(d);
        Bitset cs(d.order());
        for (int v : c.vertices) cs.set(v);
        OrientedGraph rest = delete_vertices(d, cs).graph;
        CertifiedValue cap = tau_prime(rest);
        CertifiedValue sub = inv_exact_oracle(rest, cap.value, budget);
        SplitResult sr = split_off_cycle(d, sub.family);
        j["result"] = {{"cycle", sr.cycle.vertices},
                       {"family", family_json(sr.family)},
                       {"overhead", sr.overhead},
                       {"subfamily_length", sub.family.length()}};
    } else {
        throw CLI::ValidationError("--op", "unknown op " + op);
    }
    out << j.dump() << "\n";
    return 0;
}

int emit_record(const ExperimentRecord& rec, const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_sink(out_path, file, /*append=*/true);
    out << rec.to_json().dump() << "\n";
    return rec.verdict == "violated" ? kExitViolated : 0;
}

int cmd_check(const std::string& in_path, const std::string& cert_path) {
    OrientedGraph d = load_graph(in_path);
    std::ifstream cf(cert_path);
    if (!cf) throw std::runtime_error("cannot open certificate file " + cert_path);
    json cert = json::parse(cf);
    InversionFamily fam;
    for (const auto& set : cert.at("family")) {
        Bitset b(d.order());
        for (int v : set.get<std::vector<int>>()) b.set(v);
        fam.push(b);
    }
    bool ok = is_acyclic(apply_family(d, fam));
    json j = {{"op", "check"}, {"family_length", fam.length()}, {"decycles", ok}};
    std::cout << j.dump() << "\n";
    return ok ? 0 : kExitViolated;
}

int cmd_report(const std::string& in_path) {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open " + in_path);
    std::cout << "| experiment | params | verdict | runtime (s) |\n";
    std::cout << "|---|---|---|---|\n";
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        std::cout << "| " << j.value("experiment", std::string("?")) << " | "
                  << j.value("params", json::object()).dump() << " | "
                  << j.value("verdict", std::string("?")) << " | "
                  << j.value("runtime_s", 0.0) << " |\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inversion number toolkit"};
    app.require_subcommand(1);

    int threads = 1;
    if (const char* env = std::getenv("INVERSION_THREADS")) threads = std::atoi(env);
    app.add_option("--threads", threads, "worker thread count (advisory)");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a constructed digraph");
    std::string family, format = "text", out_path;
    int n = 3, k = 3, big_n = 1;
    uint64_t seed = 0;
    gen->add_option("--family", family, "construction name")->required();
    gen->add_option("--n", n, "order parameter");
    gen->add_option("--k", k, "depth/index parameter");
    gen->add_option("--N", big_n, "block size parameter");
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));
    gen->add_option("--out", out_path, "output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "run a solver on one digraph");
    std::string op, in_path = "-", solve_out;
    int limit = 3;
    long budget = 400'000'000;
    solve->add_option("--op", op, "inv | inv-oracle | greedy | tau | tau-prime | bounds | split")
        ->required();
    solve->add_option("--in", in_path, "input digraph file, - for stdin");
    solve->add_option("--limit", limit, "search depth cap (inv-oracle)");
    solve->add_option("--budget", budget, "step budget")->check(CLI::PositiveNumber);
    solve->add_option("--out", solve_out, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a reproduction experiment");
    std::string experiment, verify_out, r_name = "c3", target = "q";
    int vn = 6, vk = 3, v_big_n = 1, r_lo = 5, r_hi = 10, lo = 1, hi = 5;
    long samples = 100000;
    uint64_t vseed = 0;
    verify->add_option("--experiment", experiment,
                       "max-inv | rank-tail | dijoin | gram-obstruction | conjecture")
        ->required();
    verify->add_option("--n", vn);
    verify->add_option("--k", vk);
    verify->add_option("--N", v_big_n);
    verify->add_option("--r", r_name, "dijoin right side: c3 | r5 | <file>");
    verify->add_option("--r-lo", r_lo);
    verify->add_option("--r-hi", r_hi);
    verify->add_option("--samples", samples);
    verify->add_option("--seed", vseed);
    verify->add_option("--target", target, "q | triangle_tt1 | triangle_tt2 | prop_inv1");
    verify->add_option("--lo", lo);
    verify->add_option("--hi", hi);
    verify->add_option("--out", verify_out, "JSON-lines journal (appended)");

    // check
    auto* check = app.add_subcommand("check", "re-verify a family certificate");
    std::string check_in = "-", cert_path;
    check->add_option("--in", check_in, "input digraph file, - for stdin");
    check->add_option("--certificate", cert_path, "JSON file with a \"family\" array")
        ->required();

    // report
    auto* report = app.add_subcommand("report", "render a journal as markdown");
    std::string report_in;
    report->add_option("--in", report_in, "JSON-lines journal")->required();

    CLI11_PARSE(app, argc, argv);
    if (threads < 1) {
        std::cerr << "error: --threads must be positive\n";
        return 1;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, n, k, big_n, seed, format, out_path);
        if (solve->parsed()) return cmd_solve(op, in_path, limit, budget, solve_out);
        if (verify->parsed()) {
            ExperimentRecord rec;
            if (experiment == "max-inv") {
                rec = max_inv_of_order(vn);
            } else if (experiment == "rank-tail") {
                rec = rank_tail_experiment(vn, r_lo, r_hi, samples, vseed);
            } else if (experiment == "dijoin") {
                OrientedGraph r = r_name == "c3"   ? directed_cycle(3)
                                  : r_name == "r5" ? r5()
                                                   : parse_digraph_file(r_name);
                rec = dijoin_counterexample(vk, r, v_big_n);
            } else if (experiment == "gram-obstruction") {
                rec = gram_obstruction(vk);
            } else if (experiment == "conjecture") {
                rec = conjecture_scan(target, lo, hi, vseed);
            } else {
                std::cerr << "error: unknown experiment " << experiment << "\n";
                return 1;
            }
            return emit_record(rec, verify_out);
        }
        if (check->parsed()) return cmd_check(check_in, cert_path);
        if (report->parsed()) return cmd_report(report_in);
    } catch (const ResourceError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
