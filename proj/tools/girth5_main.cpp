// girth5: command-line driver for the girth-5 extremal graph search.
//
// Exit codes: 0 success, 1 validation or verification failure, 2 usage error.
// Result files are only written after every flag has been checked; stdout
// carries results and tables, stderr carries status lines.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "girth5/best_store.hpp"
#include "girth5/canon.hpp"
#include "girth5/errors.hpp"
#include "girth5/graph6.hpp"
#include "girth5/local_search.hpp"
#include "girth5/oracle.hpp"
#include "girth5/pipeline.hpp"
#include "girth5/report.hpp"
#include "girth5/store_io.hpp"

namespace fs = std::filesystem;
using namespace girth5;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct SearchFlags {
    std::string seed_file;
    std::size_t order = 0;
    std::optional<std::uint64_t> iters;
    std::optional<std::uint64_t> window;
    std::uint32_t kmax = 3;
    double p = 0.5;
    std::optional<std::uint64_t> rng_seed;
    std::string out;
    bool deterministic = false;
};

struct RangeFlags {
    std::size_t n_low = 0;
    std::size_t n_high = 0;
    std::string seed_dir;
    std::string out_dir;
    std::size_t passes = 2;
    std::size_t ell = 150;
    std::optional<std::uint64_t> master_seed;
    std::size_t threads = 1;
    bool deterministic = false;
    std::size_t capacity = kDefaultStoreCapacity;
    std::uint64_t iters_per_order = 1000;
    std::string previous;
    bool early_stop = false;
};

struct VerifyFlags {
    std::string file;
    std::optional<std::size_t> order;
    std::size_t size = 0;
    unsigned girth = kDefaultGirth;
};

struct OracleFlags {
    std::size_t n = 0;
    std::uint64_t budget = kDefaultOracleBudget;
    std::string witness_out;
};

struct MooreFlags {
    std::uint64_t k = 0;
    std::uint64_t g = 0;
};

struct CodecFlags {
    std::string in;
    std::string out;
};

struct ReportFlags {
    std::string csv;
    std::string previous;
    std::string out;
};

struct DegreeFlags {
    std::string dir;
    std::string out;
};

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) ^ rd();
}

void require_seed(bool deterministic, const std::optional<std::uint64_t>& seed, const char* flag) {
    if (deterministic && !seed) {
        throw UsageError(std::string("--deterministic requires an explicit ") + flag);
    }
}

std::string read_file(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot read " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<PreviousBounds> load_previous(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    if (spec == "literature") return literature_bounds();
    return read_previous_bounds(spec);
}

void check_parent_writable(const std::string& out) {
    const fs::path parent = fs::absolute(out).parent_path();
    if (!fs::is_directory(parent)) {
        throw UsageError("output directory " + parent.string() + " does not exist");
    }
}

// Edge-list text: each graph is a block whose first line is the order and
// whose remaining lines are "u v" pairs; blocks are separated by blank lines.
std::vector<Graph> parse_edge_lists(const std::string& text, const std::string& where) {
    std::vector<Graph> graphs;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<Graph> cur;
    auto flush = [&] {
        if (cur) graphs.push_back(std::move(*cur));
        cur.reset();
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) {
            flush();
            continue;
        }
        std::istringstream ls(line);
        const std::string loc = where + ":" + std::to_string(lineno);
        try {
            if (!cur) {
                long long n = -1;
                if (!(ls >> n) || n <= 0) throw ValidationError(loc + ": expected a positive order");
                cur.emplace(static_cast<std::size_t>(n));
            } else {
                long long u = -1, v = -1;
                if (!(ls >> u >> v) || u < 0 || v < 0) throw ValidationError(loc + ": expected \"u v\"");
                cur->connect(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
            std::string rest;
            if (ls >> rest) throw ValidationError(loc + ": trailing text");
        } catch (const ValidationError&) {
            throw;
        } catch (const std::exception& e) {
            throw ValidationError(loc + ": " + e.what());
        }
    }
    flush();
    return graphs;
}

std::string format_edge_lists(const std::vector<Graph>& graphs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (i) out << '\n';
        out << graphs[i].order() << '\n';
        for (const auto& e : graphs[i].edges()) out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

int cmd_search(const SearchFlags& f) {
    if (f.seed_file.empty() == (f.order == 0)) {
        throw UsageError("give exactly one of --seed-file and --order");
    }
    require_seed(f.deterministic, f.rng_seed, "--rng-seed");
    check_parent_writable(f.out);

    Graph seed;
    if (!f.seed_file.empty()) {
        auto graphs = read_graph6_file(f.seed_file);
        if (graphs.size() != 1) {
            throw ValidationError(f.seed_file + ": expected exactly one graph, found " +
                                  std::to_string(graphs.size()));
        }
        seed = std::move(graphs.front());
    } else {
        seed = Graph(f.order);
    }
    const std::size_t n = seed.order();

    SearchParams params;
    params.total_num_iters = f.iters.value_or(1000 * n);
    params.num_iters_too_recent = f.window.value_or(n);
    params.k_max = f.kmax;
    params.p = f.p;
    params.rng_seed = f.rng_seed.value_or(fresh_seed());
    params.validate();
    if (!girth_at_least(seed, params.girth)) {
        throw ValidationError(f.seed_file + ": seed graph has girth below 5");
    }
    if (!f.rng_seed) std::cerr << "rng seed " << params.rng_seed << '\n';

    const auto result = local_search(seed, params);
    write_graph6_file(f.out, result.graphs);
    std::cerr << "iterations " << result.iterations_run << ", " << result.graphs.size()
              << " graphs written to " << f.out << '\n';
    std::cout << result.best_size << '\n';
    return kExitOk;
}

int cmd_run_range(const RangeFlags& f) {
    require_seed(f.deterministic, f.master_seed, "--master-seed");
    RunConfig cfg;
    cfg.n_low = f.n_low;
    cfg.n_high = f.n_high;
    cfg.ell = f.ell;
    cfg.passes = f.passes;
    cfg.seed_dir = f.seed_dir;
    cfg.out_dir = f.out_dir;
    cfg.params_a.iters_per_order = f.iters_per_order;
    cfg.params_b.iters_per_order = f.iters_per_order;
    cfg.master_seed = f.master_seed.value_or(fresh_seed());
    cfg.threads = f.threads;
    cfg.store_capacity = f.capacity;
    cfg.early_stop = f.early_stop;
    cfg.validate();
    cfg.previous = load_previous(f.previous);
    if (fs::exists(f.out_dir) && !fs::is_directory(f.out_dir)) {
        throw UsageError("--out-dir " + f.out_dir + " is not a directory");
    }
    if (!f.master_seed) std::cerr << "master seed " << cfg.master_seed << '\n';

    std::vector<std::string> warnings;
    auto seeded = load_seed_store(cfg.seed_dir, cfg.n_low, cfg.n_high, cfg.store_capacity);
    for (const auto& w : seeded.warnings) std::cerr << "warning: " << w << '\n';

    fs::create_directories(f.out_dir);
    const auto table = compute_lower_bounds(seeded.store, cfg, [](const std::string& line) {
        std::cerr << line << '\n';
    });
    std::cout << report(table, cfg.previous).text;
    return kExitOk;
}

int cmd_verify(const VerifyFlags& f) {
    if (f.girth < 3) throw UsageError("--girth must be at least 3");
    const auto graphs = read_graph6_file(f.file);
    if (graphs.empty()) throw ValidationError(f.file + ": no graph found");
    bool all = true;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        const auto v = verify_witness(g, f.order.value_or(g.order()), f.size, f.girth);
        std::cout << "graph " << i + 1 << ": order " << (v.order_ok ? "ok" : "FAIL") << ", size "
                  << (v.size_ok ? "ok" : "FAIL") << ", girth " << (v.girth_ok ? "ok" : "FAIL")
                  << (v.passed() ? "  PASS" : "  FAIL") << '\n';
        all = all && v.passed();
    }
    return all ? kExitOk : kExitFailed;
}

int cmd_oracle(const OracleFlags& f) {
    if (f.n == 0 || f.n > 64) throw UsageError("--n must lie in 1..64");
    if (!f.witness_out.empty()) check_parent_writable(f.witness_out);
    const auto rec = exact_max_size(f.n, f.budget);
    std::cerr << (rec.kind == BoundKind::exact ? "exact" : "inconclusive: node budget exhausted, lower bound only")
              << '\n';
    std::cout << rec.value << '\n';
    if (!f.witness_out.empty() && rec.witness_graph) write_graph6_file(f.witness_out, {*rec.witness_graph});
    return kExitOk;
}

int cmd_moore(const MooreFlags& f) {
    std::cout << moore_bound(f.k, f.g) << '\n';
    return kExitOk;
}

int cmd_encode(const CodecFlags& f) {
    check_parent_writable(f.out);
    const auto graphs = parse_edge_lists(read_file(f.in), f.in);
    write_graph6_file(f.out, graphs);
    std::cerr << graphs.size() << " graphs encoded\n";
    return kExitOk;
}

int cmd_decode(const CodecFlags& f) {
    check_parent_writable(f.out);
    const auto graphs = read_graph6_file(f.in);
    write_text_file(f.out, format_edge_lists(graphs));
    std::cerr << graphs.size() << " graphs decoded\n";
    return kExitOk;
}

int cmd_report(const ReportFlags& f) {
    if (!f.out.empty()) check_parent_writable(f.out);
    const auto previous = load_previous(f.previous);
    const auto table = parse_bounds_csv(read_file(f.csv));
    const auto rep = report(table, previous);
    std::cout << rep.text;
    if (!f.out.empty()) write_text_file(f.out, rep.csv);
    return kExitOk;
}

int cmd_degree_sets(const DegreeFlags& f) {
    if (!f.out.empty()) check_parent_writable(f.out);
    if (!fs::is_directory(f.dir)) throw ConfigError(f.dir + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(f.dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".g6") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<Graph> graphs;
    for (const auto& file : files) {
        auto part = read_graph6_file(file);
        std::move(part.begin(), part.end(), std::back_inserter(graphs));
    }
    const auto found = biregular_candidates(graphs);

    std::ostringstream text, csv;
    text << std::setw(4) << "r" << std::setw(4) << "m" << std::setw(7) << "order" << std::setw(7)
         << "size" << "  graph6\n";
    csv << "r,m,order,size,graph6\n";
    for (const auto& c : found) {
        text << std::setw(4) << c.r << std::setw(4) << c.m << std::setw(7) << c.order << std::setw(7)
             << c.size << "  " << c.key.key << '\n';
        csv << c.r << ',' << c.m << ',' << c.order << ',' << c.size << ',' << c.key.key << '\n';
    }
    std::cerr << graphs.size() << " graphs scanned, " << found.size() << " degree sets\n";
    std::cout << text.str();
    if (!f.out.empty()) write_text_file(f.out, csv.str());
    return kExitOk;
}

// CLI11 only applies config files to the top-level app, so `--config FILE`
// is spliced into argv here: each `key=value` line becomes `--key value`,
// `key=true` a bare flag, `key=false` nothing. Repeating a flag that is also
// on the command line is then an ordinary duplicate-option error.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 0; i < argc; ++i) {
        std::string a = argv[i];
        std::string file;
        if (a == "--config") {
            if (i + 1 >= argc) throw UsageError("--config needs a file");
            file = argv[++i];
        } else if (a.rfind("--config=", 0) == 0) {
            file = a.substr(9);
        } else {
            out.push_back(std::move(a));
            continue;
        }
        std::ifstream in(file);
        if (!in) throw UsageError("cannot read config file " + file);
        std::string line;
        for (std::size_t ln = 1; std::getline(in, line); ++ln) {
            const auto trim = [](std::string t) {
                const auto b = t.find_first_not_of(" \t\r");
                if (b == std::string::npos) return std::string();
                return t.substr(b, t.find_last_not_of(" \t\r") - b + 1);
            };
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw UsageError(file + ":" + std::to_string(ln) + ": expected key=value");
            }
            const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
            if (key.empty()) throw UsageError(file + ":" + std::to_string(ln) + ": empty key");
            if (value == "false") continue;
            out.push_back("--" + key);
            if (value != "true") out.push_back(value);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Search for large graphs of girth at least 5"};
    app.require_subcommand(1);

    SearchFlags sf;
    auto* search = app.add_subcommand("search", "run one local search at fixed order");
    search->add_option("--seed-file", sf.seed_file, "graph6 file holding the seed graph")->check(CLI::ExistingFile);
    search->add_option("--order", sf.order, "start from the edgeless graph of this order");
    search->add_option("--iters", sf.iters, "outer iterations (default 1000n)");
    search->add_option("--window", sf.window, "iterations a deleted edge stays protected (default n)");
    search->add_option("--kmax", sf.kmax, "maximum edges deleted per iteration")->capture_default_str();
    search->add_option("--p", sf.p, "probability of a greedy degree-sum addition")->capture_default_str();
    search->add_option("--rng-seed", sf.rng_seed, "random seed");
    search->add_option("--out", sf.out, "graph6 file for the recorded graphs")->required();
    search->add_flag("--deterministic", sf.deterministic, "refuse to run without an explicit seed");

    RangeFlags rf;
    auto* range = app.add_subcommand("run-range", "up/down passes over an order range");
    range->add_option("--n-low", rf.n_low)->required();
    range->add_option("--n-high", rf.n_high)->required();
    range->add_option("--seed-dir", rf.seed_dir, "directory of .g6 seeds (absent: edgeless seeds)")->required();
    range->add_option("--out-dir", rf.out_dir, "snapshots and bounds.csv go here")->required();
    range->add_option("--passes", rf.passes)->capture_default_str();
    range->add_option("--ell", rf.ell, "graphs taken per order")->capture_default_str();
    range->add_option("--master-seed", rf.master_seed);
    range->add_option("--threads", rf.threads)->capture_default_str();
    range->add_flag("--deterministic", rf.deterministic, "refuse to run without an explicit seed");
    range->add_option("--capacity", rf.capacity, "graphs kept per order")->capture_default_str();
    range->add_option("--iters-per-order", rf.iters_per_order, "local search iterations per vertex")
        ->capture_default_str();
    range->add_option("--previous", rf.previous, "\"literature\" or an n,value csv");
    range->add_flag("--early-stop", rf.early_stop, "stop after a pass that improves nothing");

    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "check order, size and girth claims");
    verify->add_option("--file", vf.file)->required()->check(CLI::ExistingFile);
    verify->add_option("--order", vf.order, "claimed order (default: the graph's own)");
    verify->add_option("--size", vf.size, "claimed edge count")->required();
    verify->add_option("--girth", vf.girth)->capture_default_str();

    OracleFlags of;
    auto* oracle = app.add_subcommand("oracle", "exact maximum size at small order");
    oracle->add_option("--n", of.n)->required();
    oracle->add_option("--budget", of.budget, "search node limit")->capture_default_str();
    oracle->add_option("--witness-out", of.witness_out, "graph6 file for the witness");

    MooreFlags mf;
    auto* moore = app.add_subcommand("moore", "Moore bound M(k,g)");
    moore->add_option("--k", mf.k)->required();
    moore->add_option("--g", mf.g)->required();

    CodecFlags ef, df;
    auto* encode = app.add_subcommand("encode", "edge-list text to graph6");
    encode->add_option("--in", ef.in)->required()->check(CLI::ExistingFile);
    encode->add_option("--out", ef.out)->required();
    auto* decode = app.add_subcommand("decode", "graph6 to edge-list text");
    decode->add_option("--in", df.in)->required()->check(CLI::ExistingFile);
    decode->add_option("--out", df.out)->required();

    ReportFlags pf;
    auto* rep = app.add_subcommand("report", "format a bounds.csv");
    rep->add_option("--csv", pf.csv)->required()->check(CLI::ExistingFile);
    rep->add_option("--previous", pf.previous, "\"literature\" or an n,value csv");
    rep->add_option("--out", pf.out, "write the csv form here");

    DegreeFlags gf;
    auto* degs = app.add_subcommand("degree-sets", "bi-regular girth-5 graphs in a snapshot directory");
    degs->add_option("--dir", gf.dir)->required();
    degs->add_option("--out", gf.out, "write a csv here");

    std::string config_help;
    for (auto* sub : app.get_subcommands({})) {
        sub->add_option("--config", config_help, "flat key=value file mirroring the flags");
    }

    std::vector<std::string> args;
    try {
        args = expand_config(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::vector<char*> argp;
    for (auto& a : args) argp.push_back(a.data());

    try {
        app.parse(static_cast<int>(argp.size()), argp.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*search) return cmd_search(sf);
        if (*range) return cmd_run_range(rf);
        if (*verify) return cmd_verify(vf);
        if (*oracle) return cmd_oracle(of);
        if (*moore) return cmd_moore(mf);
        if (*encode) return cmd_encode(ef);
        if (*decode) return cmd_decode(df);
        if (*rep) return cmd_report(pf);
        if (*degs) return cmd_degree_sets(gf);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}
