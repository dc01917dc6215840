#pragma once

#include <string>

namespace ctrlchain {

enum class EnergyClass { low_energy, high_energy, unclassified };

const char* to_string(EnergyClass c);
EnergyClass energy_class_from_string(const std::string& s);

/// One row of the per-region single-input sweep.
struct RegionSweepRecord {
    int node = 0;  // 0-based
    std::string label;
    int degree = 0;
    double trace = 0.0;
    double log10_trace = 0.0;
    double lambda_min = 0.0;
    bool controllable = false;
    int lcc = -1;  // -1 when some node is unreachable from this input
    EnergyClass energy_class = EnergyClass::unclassified;
};

}  // namespace ctrlchain
