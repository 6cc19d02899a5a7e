#include "cli.hpp"

#include "polycert/certificate.hpp"
#include "polycert/dualcolor.hpp"
#include "polycert/encodings.hpp"
#include "polycert/graph_oracles.hpp"
#include "polycert/oracle.hpp"
#include "polycert/stablecert.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace polycert::cli {

using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph, poset, system, cert, encoding, out, report;
    int k = 0, L = 0, R = 0, r = 1, d = 0, dim = 0;
    unsigned max_degree = 4;
    double keep_prob = 1.0;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    int threads = 0;
    std::uint64_t budget = OracleOptions{}.budget;
    bool reduced = false, count = false, serial = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream o(path, std::ios::binary);
    if (!o || !(o << text)) throw UsageError("cannot write " + path);
}

Graph load_graph(const std::string& spec) {
    if (spec.empty()) throw UsageError("--graph is required");
    if (std::filesystem::is_regular_file(spec)) return parse_graph(read_file(spec));
    return graphs::by_name(spec);
}

int need(int value, const char* flag, const std::string& encoding) {
    if (value <= 0) throw UsageError("encoding " + encoding + " needs " + flag);
    return value;
}

PolySystem build_encoding(const Options& o) {
    const std::string& e = o.encoding;
    if (e.empty()) throw UsageError("--encoding is required");
    bool known = false;
    for (auto name : encoding_names()) known = known || name == e;
    if (!known) throw UsageError("unknown encoding '" + e + "'");
    if (e == "poset-dim") {
        Poset p = !o.poset.empty() ? parse_poset(read_file(o.poset)) : Poset::incidence(load_graph(o.graph));
        return encode_poset_dimension(p, need(o.dim, "--dim", e));
    }
    const Graph g = load_graph(o.graph);
    if (e == "coloring") return encode_k_coloring(g, need(o.k, "--k", e));
    if (e == "stable-set") return encode_stable_set(g, need(o.k, "--k", e));
    if (e == "stable-refute") return encode_stable_set_refutation(g, need(o.r, "--r", e), stability_number(g));
    if (e == "cycle") return encode_longest_cycle(g, need(o.L, "--L", e));
    if (e == "hamiltonian") return encode_hamiltonian(g);
    if (e == "planar-subgraph") return encode_planar_subgraph(g, need(o.k, "--k", e));
    if (e == "colorable-subgraph") return encode_k_colorable_subgraph(g, need(o.k, "--k", e), need(o.R, "--R", e));
    return encode_edge_chromatic(g);
}

std::string input_bytes(const Options& o) {
    std::string bytes;
    if (!o.system.empty()) bytes += read_file(o.system);
    if (!o.cert.empty()) bytes += read_file(o.cert);
    if (!o.poset.empty()) bytes += read_file(o.poset);
    if (!o.graph.empty()) bytes += load_graph(o.graph).to_edge_list();
    return bytes;
}

PolySystem load_system(const Options& o) {
    if (!o.system.empty()) return PolySystem::parse(read_file(o.system));
    return build_encoding(o);
}

json census(const PolySystem& s) {
    return {{"encoding", s.encoding}, {"generators", s.generators.size()}, {"variables", s.variable_count()}};
}

void print_labels(std::ostream& out, const Labeling& c) {
    for (std::size_t v = 1; v < c.values.size(); ++v) out << (v > 1 ? " " : "") << c.values[v];
}

json labels_json(const Labeling& c) { return json(std::vector<int>(c.values.begin() + 1, c.values.end())); }

struct Run {
    const Options& o;
    std::ostream& out;
    json result = json::object();
    std::vector<std::string> outputs;

    void emit(const std::string& path, const std::string& text) {
        write_file(path, text);
        outputs.push_back(path);
    }

    int encode() {
        PolySystem s = build_encoding(o);
        if (o.out.empty()) out << s.to_text();
        else emit(o.out, s.to_text());
        out << "generators " << s.generators.size() << "\nvariables " << s.variable_count() << "\n";
        result = census(s);
        return kOk;
    }

    int certify() {
        PolySystem s = load_system(o);
        result = census(s);
        if (o.trials > 1) {
            TrialSummary t = sparsification_trial(s, o.max_degree, o.keep_prob, o.trials, o.seed,
                                                  o.serial ? Exec::Serial : Exec::Parallel);
            out << "degree " << o.max_degree << " p " << o.keep_prob << " trials " << t.trials << " successes "
                << t.successes << " fraction " << t.fraction() << "\n";
            result["trials"] = {{"deg", o.max_degree}, {"p", o.keep_prob}, {"trials", t.trials},
                                {"successes", t.successes}, {"fraction", t.fraction()}};
            return kOk;
        }
        FindOptions f;
        f.keep_prob = o.keep_prob;
        f.seed = o.seed;
        f.exec = o.serial ? Exec::Serial : Exec::Parallel;
        CertificateSearch search = find_certificate(s, o.max_degree, f);
        json attempts = json::array();
        for (const auto& a : search.attempts) {
            out << "deg " << a.degree << " row " << a.rows << " col " << a.cols << " nnz " << a.nnz << " p "
                << o.keep_prob << (a.solvable ? " solvable" : " inconsistent") << "\n";
            attempts.push_back({{"deg", a.degree}, {"row", a.rows}, {"col", a.cols}, {"nnz", a.nnz},
                                {"p", o.keep_prob}, {"solvable", a.solvable}, {"seconds", a.seconds}});
        }
        result["attempts"] = attempts;
        if (!search.certificate) {
            out << "no certificate up to degree " << o.max_degree << "\n";
            result["degree"] = nullptr;
            return kNegative;
        }
        out << "certificate degree " << search.certificate->degree << "\n";
        result["degree"] = search.certificate->degree;
        if (!o.out.empty()) emit(o.out, certificate_to_json(*search.certificate));
        return kOk;
    }

    int verify() {
        if (o.cert.empty()) throw UsageError("--cert is required");
        Certificate c = certificate_from_json(read_file(o.cert));
        bool ok = false;
        try {
            ok = verify_certificate(c, o.serial ? Exec::Serial : Exec::Parallel);
        } catch (const std::invalid_argument&) {
            ok = false;
        }
        out << (ok ? "PASS" : "FAIL") << "\n";
        result = {{"verified", ok}, {"degree", c.degree}};
        return ok ? kOk : kNegative;
    }

    int stable() {
        const Graph g = load_graph(o.graph);
        Certificate c = construct_certificate(g, o.r);
        if (o.reduced) c = reduce_certificate(c);
        const bool ok = verify_certificate(c, o.serial ? Exec::Serial : Exec::Parallel);
        const int alpha = std::stoi(c.system->param("alpha"));
        out << "alpha " << alpha << "\ndegree " << c.degree << "\nverified " << (ok ? "yes" : "no") << "\n";
        result = {{"alpha", alpha}, {"degree", c.degree}, {"verified", ok}, {"reduced", o.reduced}};
        if (!o.out.empty()) emit(o.out, certificate_to_json(c));
        return ok ? kOk : kNegative;
    }

    int dual() {
        const Graph g = load_graph(o.graph);
        if (o.d < 1) throw UsageError("--d must be positive");
        Polynomial f = graph_polynomial_normal_form(g, static_cast<unsigned>(o.d));
        out << "terms " << f.size() << "\n";
        json list = json::array();
        for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
            Labeling c{o.d, std::vector<int>(static_cast<std::size_t>(g.n()) + 1, 0)};
            for (const auto& [v, e] : it->first.entries()) c.values[static_cast<std::size_t>(v.index(0))] = static_cast<int>(e);
            out << "dual ";
            print_labels(out, c);
            out << " eps* " << it->second.get_str() << (epsilon(g, c) ? " simultaneous" : "") << "\n";
            list.push_back({{"labeling", labels_json(c)}, {"eps_star", it->second.get_str()}});
        }
        result = {{"d", o.d}, {"terms", f.size()}, {"dual_colorings", list}};
        return kOk;
    }

    int sigma() {
        const Graph g = load_graph(o.graph);
        SigmaResult s = simultaneous_chromatic_number(g, o.serial ? Exec::Serial : Exec::Parallel, o.budget);
        out << "sigma " << s.sigma << "\nwitness ";
        print_labels(out, s.witness);
        out << "\n";
        result = {{"sigma", s.sigma}, {"witness", labels_json(s.witness)}};
        return kOk;
    }

    int oracle() {
        PolySystem s = load_system(o);
        OracleOptions opt;
        opt.count_all = o.count;
        opt.budget = o.budget;
        opt.exec = o.serial ? Exec::Serial : Exec::Parallel;
        OracleResult r = decide(s, opt);
        out << (r.feasible ? "feasible" : "infeasible") << "\nnodes " << r.nodes << "\n";
        result = census(s);
        result["feasible"] = r.feasible;
        result["nodes"] = r.nodes;
        if (r.count) {
            out << "count " << r.count->get_str() << "\n";
            result["count"] = r.count->get_str();
        }
        if (r.witness) {
            json w = json::object();
            out << "witness";
            for (const auto& [v, val] : *r.witness) {
                out << " " << v.to_string() << "=" << val;
                w[v.to_string()] = val;
            }
            out << "\n";
            result["witness"] = w;
        }
        return kOk;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Polynomial encodings and Nullstellensatz certificates for graph problems", "polycert"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", o.threads, "Maximum worker threads (0 = runtime default)");
    app.add_option("--report", o.report, "Write a JSON run report to this file");
    app.add_flag("--serial", o.serial, "Use the serial reference kernels");

    auto graph_opt = [&](CLI::App* s) { s->add_option("--graph", o.graph, "Graph file or generator name"); };
    auto params = [&](CLI::App* s) {
        s->add_option("--encoding", o.encoding, "Encoding name");
        s->add_option("--poset", o.poset, "Poset file (poset-dim)");
        s->add_option("--k", o.k, "Colors, stable-set size, or planar edge count");
        s->add_option("--L", o.L, "Cycle length");
        s->add_option("--R", o.R, "Edge count for colorable-subgraph");
        s->add_option("--r", o.r, "Excess over the stability number");
        s->add_option("--dim", o.dim, "Poset dimension bound");
    };

    CLI::App* encode = app.add_subcommand("encode", "Write a polynomial system");
    graph_opt(encode);
    params(encode);
    encode->add_option("--out", o.out, "System file (default: stdout)");

    CLI::App* certify = app.add_subcommand("certify", "Search for a minimum-degree certificate");
    graph_opt(certify);
    params(certify);
    certify->add_option("--system", o.system, "System file instead of --graph/--encoding");
    certify->add_option("--max-degree", o.max_degree, "Largest degree tried");
    certify->add_option("--keep-prob", o.keep_prob, "Column keep probability")->check(CLI::Range(0.0, 1.0));
    CLI::Option* seed = certify->add_option("--seed", o.seed, "Sparsification seed");
    certify->add_option("--trials", o.trials, "Sparsified trials at --max-degree")->check(CLI::PositiveNumber);
    certify->add_option("--out", o.out, "Certificate JSON file");

    CLI::App* verify = app.add_subcommand("verify", "Check a certificate by exact expansion");
    verify->add_option("--cert", o.cert, "Certificate JSON file")->required();

    CLI::App* stable = app.add_subcommand("stable", "Build the explicit stable-set certificate");
    graph_opt(stable);
    stable->add_option("--r", o.r, "Excess over the stability number")->check(CLI::PositiveNumber);
    stable->add_flag("--reduced", o.reduced, "Emit the reduced form");
    stable->add_option("--out", o.out, "Certificate JSON file");

    CLI::App* dual = app.add_subcommand("dual", "Normal form of the graph polynomial and dual colorings");
    graph_opt(dual);
    dual->add_option("--d", o.d, "Order")->required();

    CLI::App* sigma = app.add_subcommand("sigma", "Simultaneous chromatic number");
    graph_opt(sigma);
    sigma->add_option("--budget", o.budget, "Maximum labelings per order");

    CLI::App* oracle = app.add_subcommand("oracle", "Decide a system by exhaustive search");
    graph_opt(oracle);
    params(oracle);
    oracle->add_option("--system", o.system, "System file instead of --graph/--encoding");
    oracle->add_option("--budget", o.budget, "Search-node budget");
    oracle->add_flag("--count", o.count, "Count all solutions");

    std::vector<const char*> argv{"polycert"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    if (o.threads < 0) {
        err << "usage error: --threads must be non-negative\n";
        return kUsage;
    }
    set_thread_limit(o.threads);
    if (certify->parsed() && (o.keep_prob < 1.0 || o.trials > 1) && seed->count() == 0) {
        err << "usage error: randomized runs need an explicit --seed\n";
        return kUsage;
    }

    Run run{o, out, json::object(), {}};
    const auto start = std::chrono::steady_clock::now();
    int status = kOk;
    std::string digest;
    std::string command;
    try {
        digest = fnv1a_hex(input_bytes(o));
        if (encode->parsed()) command = "encode", status = run.encode();
        else if (certify->parsed()) command = "certify", status = run.certify();
        else if (verify->parsed()) command = "verify", status = run.verify();
        else if (stable->parsed()) command = "stable", status = run.stable();
        else if (dual->parsed()) command = "dual", status = run.dual();
        else if (sigma->parsed()) command = "sigma", status = run.sigma();
        else command = "oracle", status = run.oracle();
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kUsage;
    }

    if (!o.report.empty()) {
        json report;
        report["command"] = args;
        report["input_digest"] = "fnv1a64:" + digest;
        report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report["result"] = run.result;
        report["outputs"] = run.outputs;
        report["exit_status"] = status;
        if (seed->count() > 0) report["seed"] = o.seed;
        try {
            write_file(o.report, report.dump(2) + "\n");
        } catch (const UsageError& e) {
            err << "usage error: " << e.what() << "\n";
            return kUsage;
        }
    }
    return status;
}

}  // namespace polycert::cli
