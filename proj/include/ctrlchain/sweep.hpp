#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctrlchain/lcc.hpp"
#include "ctrlchain/motifs.hpp"
#include "ctrlchain/net.hpp"
#include "ctrlchain/sweep_record.hpp"

namespace ctrlchain {

/// Integer order of magnitude floor(log10 x), exact at powers of ten.
int energy_order(double trace);

/// low_energy for orders 9..11, high_energy for 6..8, unclassified otherwise.
EnergyClass classify_energy(double trace);

/// One Gramian per region as the single input; records ordered by node id.
/// Parallel over regions (threads = 0 means hardware concurrency) with
/// thread-count-independent results.
std::vector<RegionSweepRecord> region_sweep(const StructuralNetwork& g, double t_f = 1.0,
                                            int threads = 0);

struct SweepExtremes {
    int argmax_trace = 0;
    int argmin_trace = 0;
};

SweepExtremes sweep_extremes(std::span<const RegionSweepRecord> records);

/// LCC histogram over records in the given energy class.
std::map<int, int> lcc_energy_histogram(std::span<const RegionSweepRecord> records,
                                        EnergyClass cls);
/// LCC histogram over records whose energy order lies in [order_lo, order_hi].
std::map<int, int> lcc_energy_histogram(std::span<const RegionSweepRecord> records,
                                        int order_lo, int order_hi);

std::string histogram_csv(const std::map<int, int>& histogram);

/// Cognitive-system grouping: system name -> base region names; a base name
/// resolves to labels equal to it or carrying an " L"/" R" hemisphere suffix.
struct AtlasMapping {
    std::map<std::string, std::vector<std::string>> systems;

    /// Default Mode and Auditory assignments over AAL90 labels.
    static AtlasMapping bundled();
    static AtlasMapping from_json_file(const std::string& path);
};

struct SystemBreakdown {
    std::map<std::string, std::map<int, int>> histograms;          // system -> lcc -> count
    std::map<std::string, std::vector<std::string>> unresolved;    // system -> base names
};

SystemBreakdown system_lcc_breakdown(std::span<const RegionSweepRecord> records,
                                     const AtlasMapping& atlas);

/// CSV with columns node,label,K,trace,log10_trace,lambda_min,controllable,
/// lcc,class. Doubles are printed round-trip exact, so re-exporting an
/// imported sweep is byte-identical.
void export_sweep_csv(std::span<const RegionSweepRecord> records, std::ostream& out);
void write_sweep_csv(const std::string& path, std::span<const RegionSweepRecord> records);
std::vector<RegionSweepRecord> import_sweep_csv(std::istream& in);
std::vector<RegionSweepRecord> read_sweep_csv(const std::string& path);

/// Round-trip exact double formatting shared by the CSV and JSON writers.
std::string format_double(double value);

}  // namespace ctrlchain
