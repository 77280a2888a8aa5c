#include "girth5/store_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "girth5/errors.hpp"
#include "girth5/graph6.hpp"

namespace girth5 {

namespace fs = std::filesystem;

namespace {

// Calls fn(where, graph) for every graph line; `where` is "file:line".
template <class Fn>
void scan_graph6_lines(const fs::path& file, Fn&& fn) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open " + file.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view body = line;
        if (body.starts_with(kGraph6Header)) {
            body.remove_prefix(kGraph6Header.size());
        } else if (body.starts_with(">>")) {
            continue;
        }
        if (body.empty()) continue;
        const std::string where = file.string() + ":" + std::to_string(line_no);
        Graph g;
        try {
            g = decode_graph6(body);
        } catch (const std::exception& e) {
            throw ValidationError(where + ": invalid graph6: " + e.what());
        }
        fn(where, std::move(g));
    }
    if (in.bad()) throw IoError("read failure on " + file.string());
}

}  // namespace

std::vector<Graph> read_graph6_file(const fs::path& file) {
    std::vector<Graph> out;
    scan_graph6_lines(file, [&](const std::string&, Graph g) { out.push_back(std::move(g)); });
    return out;
}

void write_text_file(const fs::path& file, const std::string& content) {
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw IoError("write failure on " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, file, ec);
    if (ec) throw IoError("cannot rename " + tmp.string() + " to " + file.string() + ": " + ec.message());
}

void write_graph6_file(const fs::path& file, const std::vector<Graph>& graphs) {
    std::string text;
    for (const auto& g : graphs) {
        text += encode_graph6(g);
        text += '\n';
    }
    write_text_file(file, text);
}

SeedLoad load_seed_store(const fs::path& dir, std::size_t n_low, std::size_t n_high,
                         std::size_t capacity, unsigned girth) {
    SeedLoad result{BestStore(capacity, girth), {}};
    std::error_code ec;
    std::vector<fs::path> files;
    if (fs::exists(dir, ec)) {
        if (!fs::is_directory(dir, ec)) {
            throw ConfigError("seed path " + dir.string() + " is not a directory");
        }
        fs::directory_iterator it(dir, ec);
        if (ec) throw ConfigError("cannot read seed directory " + dir.string() + ": " + ec.message());
        for (const auto& entry : it) {
            if (entry.is_regular_file() && entry.path().extension() == ".g6") {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
    }

    if (files.empty()) {
        for (std::size_t n = n_low; n <= n_high; ++n) result.store.insert(Graph(n));
        return result;
    }

    for (const auto& file : files) {
        scan_graph6_lines(file, [&](const std::string& where, Graph g) {
            if (!girth_at_least(g, girth)) {
                throw ValidationError(where + ": graph has a cycle shorter than " +
                                      std::to_string(girth));
            }
            if (g.order() < n_low || g.order() > n_high) {
                result.warnings.push_back(where + ": order " + std::to_string(g.order()) +
                                          " outside [" + std::to_string(n_low) + ", " +
                                          std::to_string(n_high) + "], skipped");
                return;
            }
            result.store.insert(g);
        });
    }
    return result;
}

std::string snapshot_file_name(std::size_t order, const std::string& tag) {
    return "best_n" + std::to_string(order) + "_" + tag + ".g6";
}

void save_store_snapshot(const BestStore& store, const fs::path& dir, const std::string& tag) {
    if (store.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    for (std::size_t n : store.orders()) {
        std::string text;
        for (const auto& e : store.entries(n)) {
            text += e.key.key;
            text += '\n';
        }
        write_text_file(dir / snapshot_file_name(n, tag), text);
    }
}

}  // namespace girth5
