#include "girth5/pipeline.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include "girth5/errors.hpp"
#include "girth5/rng.hpp"
#include "girth5/store_io.hpp"

namespace girth5 {

SearchParams ParamTemplate::at(std::size_t n, std::uint64_t rng_seed) const {
    SearchParams p;
    p.total_num_iters = iters_per_order * n;
    p.num_iters_too_recent = std::max<std::uint64_t>(1, n / window_divisor);
    p.k_max = k_max_divisor == 0
                  ? k_max_floor
                  : std::max<std::uint32_t>(k_max_floor, static_cast<std::uint32_t>(n / k_max_divisor));
    p.p = this->p;
    p.rng_seed = rng_seed;
    return p;
}

ParamTemplate first_run_template() { return ParamTemplate{1000, 1, 3, 0, 0.5}; }
ParamTemplate second_run_template() { return ParamTemplate{1000, 3, 3, 10, 0.5}; }

void RunConfig::validate() const {
    if (n_low >= n_high) {
        throw UsageError("order range must satisfy n_low < n_high, got " + std::to_string(n_low) +
                         ".." + std::to_string(n_high));
    }
    if (n_low == 0) throw UsageError("n_low must be positive");
    if (n_high > kMaxOrder) throw UsageError("n_high exceeds maximum order " + std::to_string(kMaxOrder));
    if (ell == 0) throw UsageError("ell must be positive");
    if (threads == 0) throw UsageError("threads must be positive");
    if (store_capacity == 0) throw UsageError("store capacity must be positive");
    for (const auto* t : {&params_a, &params_b}) {
        if (t->iters_per_order == 0 || t->window_divisor == 0 || t->k_max_floor == 0) {
            throw UsageError("parameter template counts must be positive");
        }
        if (!(t->p >= 0.0 && t->p <= 1.0)) throw UsageError("p must lie in [0, 1]");
    }
}

namespace {

TaskOutput run_task(const SearchTask& task) {
    auto result = local_search(task.seed, task.params);
    TaskOutput out;
    out.reserve(result.graphs.size());
    for (auto& g : result.graphs) {
        CanonicalForm key = canonical_form(g);
        out.push_back(KeyedGraph{std::move(g), std::move(key)});
    }
    return out;
}

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, std::size_t threads, Fn&& fn) {
    std::vector<T> out(count);
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(threads))
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

std::vector<TaskOutput> execute(std::span<const SearchTask> tasks, std::size_t threads) {
    return threads <= 1 ? run_tasks_serial(tasks) : run_tasks_parallel(tasks, threads);
}

std::vector<CanonicalForm> keys_of(std::span<const Graph> graphs, std::size_t threads) {
    return threads <= 1 ? canonical_forms_serial(graphs) : canonical_forms_parallel(graphs, threads);
}

void merge(BestStore& store, std::vector<TaskOutput>& outputs) {
    for (auto& out : outputs) {
        for (auto& kg : out) store.insert(std::move(kg.graph), std::move(kg.key));
    }
}

std::string pass_tag(std::size_t pass, RunDirection dir) {
    return std::to_string(pass) + (dir == RunDirection::up ? "up" : "down");
}

}  // namespace

std::vector<TaskOutput> run_tasks_serial(std::span<const SearchTask> tasks) {
    std::vector<TaskOutput> out;
    out.reserve(tasks.size());
    for (const auto& t : tasks) out.push_back(run_task(t));
    return out;
}

std::vector<TaskOutput> run_tasks_parallel(std::span<const SearchTask> tasks, std::size_t threads) {
    return parallel_map<TaskOutput>(tasks.size(), threads,
                                    [&](std::size_t i) { return run_task(tasks[i]); });
}

std::vector<CanonicalForm> canonical_forms_serial(std::span<const Graph> graphs) {
    std::vector<CanonicalForm> out;
    out.reserve(graphs.size());
    for (const auto& g : graphs) out.push_back(canonical_form(g));
    return out;
}

std::vector<CanonicalForm> canonical_forms_parallel(std::span<const Graph> graphs,
                                                    std::size_t threads) {
    return parallel_map<CanonicalForm>(graphs.size(), threads,
                                       [&](std::size_t i) { return canonical_form(graphs[i]); });
}

std::uint64_t task_seed(std::uint64_t master_seed, std::size_t pass, RunDirection dir,
                        std::size_t order, std::size_t index, unsigned which) {
    std::uint64_t s = derive_seed(master_seed, pass);
    s = derive_seed(s, dir == RunDirection::up ? 1 : 2);
    s = derive_seed(s, order);
    return derive_seed(s, (std::uint64_t{index} << 1) | (which & 1u));
}

void up_run(BestStore& store, const RunConfig& cfg, std::size_t pass, const ProgressSink& progress) {
    for (std::size_t n = cfg.n_low; n < cfg.n_high; ++n) {
        const auto tops = store.top_ell(n, cfg.ell);
        if (tops.empty()) continue;
        std::vector<SearchTask> tasks;
        tasks.reserve(2 * tops.size());
        for (std::size_t i = 0; i < tops.size(); ++i) {
            Graph grown = add_isolated_vertex(tops[i]);
            tasks.push_back({grown, cfg.params_a.at(n, task_seed(cfg.master_seed, pass, RunDirection::up, n, i, 0))});
            tasks.push_back({std::move(grown), cfg.params_b.at(n, task_seed(cfg.master_seed, pass, RunDirection::up, n, i, 1))});
        }
        auto outputs = execute(tasks, cfg.threads);
        merge(store, outputs);
        if (progress) {
            progress("pass " + std::to_string(pass) + " up n=" + std::to_string(n) + "->" +
                     std::to_string(n + 1) + " seeds=" + std::to_string(tops.size()) +
                     " best=" + std::to_string(store.best_size(n + 1).value_or(0)));
        }
    }
}

void down_run(BestStore& store, const RunConfig& cfg, std::size_t pass, const ProgressSink& progress) {
    for (std::size_t n = cfg.n_high; n > cfg.n_low; --n) {
        const auto tops = store.top_ell(n, cfg.ell);
        if (tops.empty()) continue;
        std::vector<Graph> shrunk;
        shrunk.reserve(tops.size() * n);
        for (const auto& g : tops) {
            for (Vertex v = 0; v < g.order(); ++v) shrunk.push_back(delete_vertex(g, v));
        }
        auto keys = keys_of(shrunk, cfg.threads);

        // set semantics: one representative per isomorphism class
        std::map<std::string, std::size_t> first_seen;
        std::vector<std::size_t> picks;
        for (std::size_t i = 0; i < shrunk.size(); ++i) {
            if (first_seen.emplace(keys[i].key, i).second) picks.push_back(i);
        }
        std::sort(picks.begin(), picks.end(), [&](std::size_t a, std::size_t b) {
            return ranks_before(shrunk[a].size(), keys[a], shrunk[b].size(), keys[b]);
        });
        if (picks.size() > cfg.ell) picks.resize(cfg.ell);

        std::vector<SearchTask> tasks;
        tasks.reserve(2 * picks.size());
        for (std::size_t i = 0; i < picks.size(); ++i) {
            const Graph& g = shrunk[picks[i]];
            tasks.push_back({g, cfg.params_a.at(n, task_seed(cfg.master_seed, pass, RunDirection::down, n, i, 0))});
            tasks.push_back({g, cfg.params_b.at(n, task_seed(cfg.master_seed, pass, RunDirection::down, n, i, 1))});
        }
        auto outputs = execute(tasks, cfg.threads);
        merge(store, outputs);
        if (progress) {
            progress("pass " + std::to_string(pass) + " down n=" + std::to_string(n) + "->" +
                     std::to_string(n - 1) + " seeds=" + std::to_string(picks.size()) +
                     " best=" + std::to_string(store.best_size(n - 1).value_or(0)));
        }
    }
}

BoundsTable compute_lower_bounds(const RunConfig& cfg, const ProgressSink& progress,
                                 std::vector<std::string>* warnings) {
    cfg.validate();
    auto seeded = load_seed_store(cfg.seed_dir, cfg.n_low, cfg.n_high, cfg.store_capacity);
    if (warnings) *warnings = seeded.warnings;
    return compute_lower_bounds(seeded.store, cfg, progress);
}

BoundsTable compute_lower_bounds(BestStore& store, const RunConfig& cfg, const ProgressSink& progress) {
    cfg.validate();
    BoundsTable table;
    for (std::size_t n = cfg.n_low; n <= cfg.n_high; ++n) {
        table.rows.push_back(BoundsRow{n, store.best_size(n), {}, std::nullopt});
    }
    auto finish_rows = [&] {
        for (auto& row : table.rows) row.final_size = store.best_size(row.n);
    };
    auto half_pass_done = [&](std::size_t pass, RunDirection dir) {
        for (auto& row : table.rows) row.half_passes.push_back(store.best_size(row.n));
        finish_rows();
        if (cfg.out_dir) {
            save_store_snapshot(store, *cfg.out_dir, pass_tag(pass, dir));
            write_text_file(*cfg.out_dir / "bounds.csv", report(table, cfg.previous).csv);
        }
    };

    for (std::size_t pass = 1; pass <= cfg.passes; ++pass) {
        std::vector<std::optional<std::size_t>> before;
        for (const auto& row : table.rows) before.push_back(store.best_size(row.n));
        up_run(store, cfg, pass, progress);
        half_pass_done(pass, RunDirection::up);
        down_run(store, cfg, pass, progress);
        half_pass_done(pass, RunDirection::down);

        if (cfg.early_stop) {
            bool improved = false;
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                improved |= store.best_size(table.rows[i].n) != before[i];
            }
            if (!improved) break;
        }
    }
    finish_rows();
    if (cfg.out_dir) {
        std::filesystem::create_directories(*cfg.out_dir);
        write_text_file(*cfg.out_dir / "bounds.csv", report(table, cfg.previous).csv);
    }
    return table;
}

}  // namespace girth5
