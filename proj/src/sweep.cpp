#include "ctrlchain/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ctrlchain/errors.hpp"
#include "ctrlchain/gramian.hpp"
#include "ctrlchain/parallel.hpp"

namespace ctrlchain {

const char* to_string(EnergyClass c) {
    switch (c) {
        case EnergyClass::low_energy: return "low_energy";
        case EnergyClass::high_energy: return "high_energy";
        case EnergyClass::unclassified: return "unclassified";
    }
    return "unclassified";
}

EnergyClass energy_class_from_string(const std::string& s) {
    if (s == "low_energy") return EnergyClass::low_energy;
    if (s == "high_energy") return EnergyClass::high_energy;
    if (s == "unclassified") return EnergyClass::unclassified;
    throw InvalidArgumentError("unknown energy class: " + s);
}

int energy_order(double trace) {
    if (!(trace > 0.0)) throw InvalidArgumentError("trace must be positive to classify");
    int order = static_cast<int>(std::floor(std::log10(trace)));
    // log10 can land a hair off at exact powers of ten; settle by comparison
    while (std::pow(10.0, order) > trace) --order;
    while (std::pow(10.0, order + 1) <= trace) ++order;
    return order;
}

EnergyClass classify_energy(double trace) {
    const int order = energy_order(trace);
    if (order >= 9 && order <= 11) return EnergyClass::low_energy;
    if (order >= 6 && order <= 8) return EnergyClass::high_energy;
    return EnergyClass::unclassified;
}

std::vector<RegionSweepRecord> region_sweep(const StructuralNetwork& g, double t_f,
                                            int threads) {
    const int n = g.size();
    if (n == 0) throw EmptyNetworkError();
    std::vector<RegionSweepRecord> records(n);
    parallel_for(n, threads, [&](int v) {
        RegionSweepRecord rec;
        rec.node = v;
        rec.label = g.label(v);
        rec.degree = g.degree(v);
        try {
            GramianResult res = gramian(control_system(g, {v}, t_f));
            rec.trace = res.trace;
            rec.log10_trace = std::log10(res.trace);
            rec.lambda_min = res.lambda_min;
            rec.controllable = controllability_check(res);
        } catch (const OverflowError& e) {
            std::string name = rec.label.empty() ? std::to_string(v + 1) : rec.label;
            throw OverflowError("region " + name + ": " + e.what(), e.spectral_radius());
        }
        auto ecc = lcc(g, {v});
        rec.lcc = ecc ? *ecc : -1;
        rec.energy_class = rec.trace > 0.0 ? classify_energy(rec.trace)
                                           : EnergyClass::unclassified;
        records[v] = std::move(rec);
    });
    return records;
}

SweepExtremes sweep_extremes(std::span<const RegionSweepRecord> records) {
    if (records.empty()) throw InvalidArgumentError("no sweep records");
    SweepExtremes ex;
    for (size_t i = 1; i < records.size(); ++i) {
        if (records[i].trace > records[ex.argmax_trace].trace) ex.argmax_trace = static_cast<int>(i);
        if (records[i].trace < records[ex.argmin_trace].trace) ex.argmin_trace = static_cast<int>(i);
    }
    return ex;
}

std::map<int, int> lcc_energy_histogram(std::span<const RegionSweepRecord> records,
                                        EnergyClass cls) {
    std::map<int, int> histogram;
    for (const auto& rec : records) {
        if (rec.energy_class == cls) ++histogram[rec.lcc];
    }
    return histogram;
}

std::map<int, int> lcc_energy_histogram(std::span<const RegionSweepRecord> records,
                                        int order_lo, int order_hi) {
    std::map<int, int> histogram;
    for (const auto& rec : records) {
        if (rec.trace <= 0.0) continue;
        const int order = energy_order(rec.trace);
        if (order >= order_lo && order <= order_hi) ++histogram[rec.lcc];
    }
    return histogram;
}

std::string histogram_csv(const std::map<int, int>& histogram) {
    std::ostringstream oss;
    oss << "lcc,count\n";
    for (const auto& [lcc_value, count] : histogram) {
        oss << lcc_value << "," << count << "\n";
    }
    return oss.str();
}

AtlasMapping AtlasMapping::bundled() {
    AtlasMapping atlas;
    atlas.systems["Default Mode"] = {"Frontal Sup Medial", "Frontal Med Orb", "Cingulum Post",
                                     "Hippocampus",        "ParaHippocampal", "Angular",
                                     "Precuneus"};
    atlas.systems["Auditory"] = {"Rolandic Oper", "SupraMarginal", "Heschl"};
    return atlas;
}

AtlasMapping AtlasMapping::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open atlas file");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path, std::string("invalid atlas JSON: ") + e.what());
    }
    AtlasMapping atlas;
    for (const auto& [system, names] : doc.items()) {
        if (!names.is_array()) throw IoError(path, "atlas systems must map to label arrays");
        for (const auto& name : names) {
            atlas.systems[system].push_back(name.get<std::string>());
        }
    }
    return atlas;
}

SystemBreakdown system_lcc_breakdown(std::span<const RegionSweepRecord> records,
                                     const AtlasMapping& atlas) {
    SystemBreakdown breakdown;
    for (const auto& [system, names] : atlas.systems) {
        auto& histogram = breakdown.histograms[system];
        for (const auto& base : names) {
            bool found = false;
            for (const auto& rec : records) {
                if (rec.label == base || rec.label == base + " L" || rec.label == base + " R") {
                    ++histogram[rec.lcc];
                    found = true;
                }
            }
            if (!found) breakdown.unresolved[system].push_back(base);
        }
    }
    return breakdown;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void export_sweep_csv(std::span<const RegionSweepRecord> records, std::ostream& out) {
    out << "node,label,K,trace,log10_trace,lambda_min,controllable,lcc,class\n";
    for (const auto& rec : records) {
        if (rec.label.find(',') != std::string::npos) {
            throw InvalidArgumentError("label contains a comma: " + rec.label);
        }
        out << (rec.node + 1) << ',' << rec.label << ',' << rec.degree << ','
            << format_double(rec.trace) << ',' << format_double(rec.log10_trace) << ','
            << format_double(rec.lambda_min) << ',' << (rec.controllable ? "true" : "false")
            << ',' << rec.lcc << ',' << to_string(rec.energy_class) << '\n';
    }
}

void write_sweep_csv(const std::string& path, std::span<const RegionSweepRecord> records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path, "cannot open sweep CSV for writing");
    export_sweep_csv(records, out);
    if (!out) throw IoError(path, "failed writing sweep CSV");
}

namespace {

double parse_double_field(const std::string& text, int row, int col) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw CellParseError(row, col, text);
    }
    return value;
}

int parse_int_field(const std::string& text, int row, int col) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw CellParseError(row, col, text);
    }
    return value;
}

}  // namespace

std::vector<RegionSweepRecord> import_sweep_csv(std::istream& in) {
    std::vector<RegionSweepRecord> records;
    std::string line;
    int row = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;  // first line is the column header
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() == 8 && line.ends_with(',')) cells.emplace_back();
        if (cells.size() != 9) {
            throw CellParseError(row, static_cast<int>(cells.size()), line);
        }
        RegionSweepRecord rec;
        rec.node = parse_int_field(cells[0], row, 1) - 1;
        rec.label = cells[1];
        rec.degree = parse_int_field(cells[2], row, 3);
        rec.trace = parse_double_field(cells[3], row, 4);
        rec.log10_trace = parse_double_field(cells[4], row, 5);
        rec.lambda_min = parse_double_field(cells[5], row, 6);
        if (cells[6] == "true") rec.controllable = true;
        else if (cells[6] == "false") rec.controllable = false;
        else throw CellParseError(row, 7, cells[6]);
        rec.lcc = parse_int_field(cells[7], row, 8);
        rec.energy_class = energy_class_from_string(cells[8]);
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<RegionSweepRecord> read_sweep_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open sweep CSV");
    return import_sweep_csv(in);
}

}  // namespace ctrlchain
