#include "girth5/report.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "girth5/errors.hpp"

namespace girth5 {

namespace {

std::string cell(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }

std::size_t pass_columns(const BoundsTable& table) {
    std::size_t half = 4;
    for (const auto& r : table.rows) half = std::max(half, r.half_passes.size() + r.half_passes.size() % 2);
    return half;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::size_t parse_count(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw ValidationError("bad " + what + " value '" + s + "'");
    }
    if (pos != s.size()) throw ValidationError("bad " + what + " value '" + s + "'");
    return static_cast<std::size_t>(v);
}

}  // namespace

Report report(const BoundsTable& table, const std::optional<PreviousBounds>& previous) {
    const std::size_t half = pass_columns(table);
    std::vector<std::string> header{"n"};
    for (std::size_t i = 0; i < half; ++i) {
        header.push_back((i % 2 == 0 ? "up" : "down") + std::to_string(i / 2 + 1));
    }
    header.insert(header.end(), {"final", "previous", "improved"});

    std::vector<std::vector<std::string>> rows;
    for (const auto& r : table.rows) {
        std::vector<std::string> row{std::to_string(r.n)};
        for (std::size_t i = 0; i < half; ++i) {
            row.push_back(i < r.half_passes.size() ? cell(r.half_passes[i]) : "");
        }
        row.push_back(cell(r.final_size));
        std::optional<std::size_t> prev;
        if (previous) {
            auto it = previous->find(r.n);
            if (it != previous->end()) prev = it->second;
        }
        row.push_back(cell(prev));
        row.push_back(prev && r.final_size ? (*r.final_size > *prev ? "true" : "false") : "");
        rows.push_back(std::move(row));
    }

    Report out;
    auto join = [](const std::vector<std::string>& fields) {
        std::string s;
        for (std::size_t i = 0; i < fields.size(); ++i) s += (i ? "," : "") + fields[i];
        return s + "\n";
    };
    out.csv = join(header);
    for (const auto& row : rows) out.csv += join(row);

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& fields) {
        std::string s;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (c) s += "  ";
            s += std::string(width[c] - fields[c].size(), ' ') + fields[c];
        }
        return s + "\n";
    };
    out.text = line(header);
    for (const auto& row : rows) out.text += line(row);
    return out;
}

BoundsTable parse_bounds_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("empty bounds csv");
    const auto header = split(line, ',');
    if (header.empty() || header.front() != "n") throw ValidationError("bounds csv must start with column n");
    std::vector<std::size_t> pass_cols;
    std::optional<std::size_t> final_col;
    for (std::size_t c = 1; c < header.size(); ++c) {
        if (header[c].starts_with("up") || header[c].starts_with("down")) pass_cols.push_back(c);
        if (header[c] == "final") final_col = c;
    }
    BoundsTable table;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split(line, ',');
        fields.resize(header.size());
        BoundsRow row;
        row.n = parse_count(fields[0], "n");
        auto opt = [&](const std::string& s) -> std::optional<std::size_t> {
            if (s.empty()) return std::nullopt;
            return parse_count(s, "bound");
        };
        std::size_t last_filled = 0;
        for (std::size_t i = 0; i < pass_cols.size(); ++i) {
            row.half_passes.push_back(opt(fields[pass_cols[i]]));
            if (row.half_passes.back()) last_filled = i + 1;
        }
        row.half_passes.resize(last_filled);
        if (final_col) row.final_size = opt(fields[*final_col]);
        table.rows.push_back(std::move(row));
    }
    return table;
}

PreviousBounds read_previous_bounds(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open " + file.string());
    PreviousBounds out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (first && (f.empty() || f[0].empty() || !std::isdigit(static_cast<unsigned char>(f[0][0])))) {
            first = false;
            continue;
        }
        first = false;
        if (f.size() < 2) throw ValidationError(file.string() + ": expected 'n,value' lines");
        out[parse_count(f[0], "n")] = parse_count(f[1], "bound");
    }
    return out;
}

const PreviousBounds& literature_bounds() {
    static const PreviousBounds kBounds{
        {50, 175}, {51, 176}, {52, 178}, {53, 181}, {54, 185}, {55, 189},
        {56, 193}, {57, 197}, {58, 202}, {59, 207}, {60, 212}, {61, 216},
        {62, 220}, {63, 224}, {64, 230}, {65, 235}, {66, 241}, {67, 246},
        {68, 251}, {69, 257}, {70, 262}, {71, 268}, {72, 273}, {73, 279},
        {74, 284}, {75, 290}, {76, 295}, {77, 301}, {78, 306}, {79, 312},
        {80, 320}, {81, 324}, {82, 329}, {83, 335}, {84, 341}, {85, 348},
        {86, 355}, {87, 362}, {88, 369}, {89, 376}, {90, 384}, {91, 392},
        {92, 399}, {93, 407}, {94, 415}, {95, 423}, {96, 432}, {97, 436},
        {98, 438}, {99, 440}, {100, 443}, {101, 445}, {102, 447}, {103, 452},
        {104, 458}, {105, 464}, {106, 470}, {107, 476}, {108, 482}, {109, 488},
        {110, 496}, {111, 504}, {112, 512}, {113, 520}, {114, 528}, {115, 536},
        {116, 544}, {117, 552}, {118, 560}, {119, 568}, {120, 576}, {121, 585},
        {122, 593}, {123, 602}, {124, 611}, {125, 620}, {126, 630}, {127, 634},
        {128, 638}, {129, 641}, {130, 644}, {131, 647}, {132, 650}, {133, 653},
        {134, 657}, {135, 666}, {136, 674}, {137, 683}, {138, 692}, {139, 700},
        {140, 709}, {141, 717}, {142, 726}, {143, 735}, {144, 744}, {145, 753},
        {146, 762}, {147, 771}, {148, 780}, {149, 789}, {150, 798}, {151, 808},
        {152, 817}, {153, 827}, {154, 837}, {155, 847}, {156, 858}, {157, 862},
        {158, 865}, {159, 868}, {160, 871}, {161, 873}, {162, 875}, {163, 878},
        {164, 880}, {165, 883}, {166, 886}, {167, 892}, {168, 901}, {169, 910},
        {170, 920}, {171, 930}, {172, 932}, {173, 935}, {174, 938}, {175, 941},
        {176, 949}, {177, 958}, {178, 968}, {179, 977}, {180, 986}, {181, 995},
        {182, 1004}, {183, 1013}, {184, 1022}, {185, 1032}, {186, 1042}, {187, 1052},
        {188, 1062}, {189, 1072}, {190, 1082}, {191, 1092}, {192, 1102}, {193, 1112},
        {194, 1122}, {195, 1132}, {196, 1142}, {197, 1152}, {198, 1163}, {199, 1173},
        {200, 1184}, {201, 1195}, {202, 1206}, {203, 1218},
    };
    return kBounds;
}

}  // namespace girth5
