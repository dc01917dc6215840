#include "ctrlchain/motifs.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ctrlchain/errors.hpp"

namespace ctrlchain {

long long MotifCensus::connected_triples() const {
    long long total = 0;
    for (const auto& [id, count] : counts) total += count;
    return total;
}

namespace {

// 9-bit row-major encoding of a 3x3 adjacency matrix, a(0,0) most significant.
int encode(const std::array<std::array<bool, 3>, 3>& a) {
    int code = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            code = (code << 1) | (a[i][j] ? 1 : 0);
        }
    }
    return code;
}

constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

int canonical_id(const std::array<std::array<bool, 3>, 3>& a) {
    int best = 1 << 9;
    for (const auto& p : kPermutations) {
        std::array<std::array<bool, 3>, 3> b{};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) b[p[i]][p[j]] = a[i][j];
        }
        best = std::min(best, encode(b));
    }
    return best;
}

// 64-entry table: edge flags (0->1,1->0,0->2,2->0,1->2,2->1) -> class id,
// -1 for disconnected configurations.
std::array<int, 64> build_class_table() {
    std::array<int, 64> table{};
    for (int mask = 0; mask < 64; ++mask) {
        const bool e01 = mask & 1, e10 = mask & 2, e02 = mask & 4;
        const bool e20 = mask & 8, e12 = mask & 16, e21 = mask & 32;
        int linked_pairs = (e01 || e10) + (e02 || e20) + (e12 || e21);
        if (linked_pairs < 2) {
            table[mask] = -1;
            continue;
        }
        std::array<std::array<bool, 3>, 3> a{};
        a[0][1] = e01;
        a[1][0] = e10;
        a[0][2] = e02;
        a[2][0] = e20;
        a[1][2] = e12;
        a[2][1] = e21;
        table[mask] = canonical_id(a);
    }
    return table;
}

const std::array<int, 64>& class_table() {
    static const std::array<int, 64> table = build_class_table();
    return table;
}

MotifCensus census_symmetric(const StructuralNetwork& g) {
    const int n = g.size();
    long long triangles = 0;
    for (int u = 0; u < n; ++u) {
        const auto& nu = g.out_neighbors(u);
        for (int v : nu) {
            if (v <= u) continue;
            // common neighbors w with w > v close the triangle exactly once
            const auto& nv = g.out_neighbors(v);
            auto iu = std::upper_bound(nu.begin(), nu.end(), v);
            auto iv = std::upper_bound(nv.begin(), nv.end(), v);
            while (iu != nu.end() && iv != nv.end()) {
                if (*iu < *iv) ++iu;
                else if (*iv < *iu) ++iv;
                else {
                    ++triangles;
                    ++iu;
                    ++iv;
                }
            }
        }
    }
    long long wedges = 0;
    for (int v = 0; v < n; ++v) {
        const long long d = g.out_degree(v);
        wedges += d * (d - 1) / 2;
    }
    wedges -= 3 * triangles;  // closed wedges are induced triangles, not wedges

    MotifCensus census;
    if (wedges > 0) census.counts[kMotifWedge] = wedges;
    if (triangles > 0) census.counts[kMotifTriangle] = triangles;
    census.n_m = wedges + triangles;
    return census;
}

MotifCensus census_directed(const StructuralNetwork& g) {
    const int n = g.size();
    const auto& table = class_table();
    MotifCensus census;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const bool ab = g.has_link(a, b), ba = g.has_link(b, a);
            for (int c = b + 1; c < n; ++c) {
                int mask = (ab ? 1 : 0) | (ba ? 2 : 0);
                mask |= g.has_link(a, c) ? 4 : 0;
                mask |= g.has_link(c, a) ? 8 : 0;
                mask |= g.has_link(b, c) ? 16 : 0;
                mask |= g.has_link(c, b) ? 32 : 0;
                int id = table[mask];
                if (id >= 0) ++census.counts[id];
            }
        }
    }
    auto wedge = census.counts.find(kMotifWedge);
    auto triangle = census.counts.find(kMotifTriangle);
    census.n_m = (wedge != census.counts.end() ? wedge->second : 0) +
                 (triangle != census.counts.end() ? triangle->second : 0);
    return census;
}

}  // namespace

int triad_class_id(const std::array<bool, 6>& edges) {
    int mask = 0;
    for (int i = 0; i < 6; ++i) mask |= edges[i] ? (1 << i) : 0;
    return class_table()[mask];
}

MotifCensus triad_census(const StructuralNetwork& g) {
    if (g.is_symmetric()) return census_symmetric(g);
    return census_directed(g);
}

std::vector<MotifEnergyRow> motif_energy_table(
    const std::map<std::string, MotifCensus>& censuses,
    const std::map<std::string, std::vector<RegionSweepRecord>>& sweeps) {
    if (censuses.size() != sweeps.size()) {
        throw InvalidArgumentError("census and sweep network ids do not match");
    }
    std::vector<MotifEnergyRow> rows;
    for (const auto& [id, census] : censuses) {
        auto it = sweeps.find(id);
        if (it == sweeps.end()) {
            throw InvalidArgumentError("no sweep records for network " + id);
        }
        const auto& records = it->second;
        if (records.empty()) {
            throw InvalidArgumentError("empty sweep for network " + id);
        }
        MotifEnergyRow row;
        row.network = id;
        row.n_m = census.n_m;
        int max_lcc = -1;
        double sum = 0.0;
        double sum3 = 0.0, sum5 = 0.0;
        int count3 = 0, count5 = 0;
        for (const auto& rec : records) {
            sum += rec.trace;
            max_lcc = std::max(max_lcc, rec.lcc);
            if (rec.lcc == 3) {
                sum3 += rec.trace;
                ++count3;
            }
            if (rec.lcc == 5) {
                sum5 += rec.trace;
                ++count5;
            }
        }
        row.mean_energy = sum / static_cast<double>(records.size());
        if (count3 > 0) row.mean_energy_lcc3 = sum3 / count3;
        if (max_lcc >= 5 && count5 > 0) row.mean_energy_lcc5 = sum5 / count5;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const MotifEnergyRow& a, const MotifEnergyRow& b) {
        if (a.n_m != b.n_m) return a.n_m > b.n_m;
        return a.network < b.network;
    });
    return rows;
}

}  // namespace ctrlchain
