#include "possver/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "possver/categorical.hpp"
#include "possver/errors.hpp"

namespace possver {

namespace {

struct Range {
    double x_min, x_max, y_min, y_max;
};

// Two offset rectangular lattices make a hex grid; each point goes to the
// nearer of its two candidate centers (distance measured in lattice units).
std::vector<HexBinCell> hexbin(std::span<const DiagramPoint> points, const Range& range,
                               std::size_t gridsize, bool with_ignorance) {
    if (gridsize == 0) throw InvalidConfig("hexbin gridsize must be positive");
    const double sx = (range.x_max - range.x_min) / static_cast<double>(gridsize);
    const std::size_t ny = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::lround(static_cast<double>(gridsize) / std::sqrt(3.0))));
    const double sy = (range.y_max - range.y_min) / static_cast<double>(ny);

    struct Cell {
        std::size_t count = 0;
        double ignorance_sum = 0.0;
    };
    std::map<std::pair<long, long>, Cell> lattice_a;  // centers at integer coords
    std::map<std::pair<long, long>, Cell> lattice_b;  // offset by (0.5, 0.5)

    for (const auto& p : points) {
        const double gx = (p.x - range.x_min) / sx;
        const double gy = (p.y - range.y_min) / sy;
        const double ax = std::round(gx), ay = std::round(gy);
        const double bx = std::floor(gx) + 0.5, by = std::floor(gy) + 0.5;
        // y differences weighted 3x: the lattice-unit metric of a pointy-top grid
        const double da = (gx - ax) * (gx - ax) + 3.0 * (gy - ay) * (gy - ay);
        const double db = (gx - bx) * (gx - bx) + 3.0 * (gy - by) * (gy - by);
        Cell& cell = (da <= db)
                         ? lattice_a[{static_cast<long>(ax), static_cast<long>(ay)}]
                         : lattice_b[{static_cast<long>(std::floor(gx)), static_cast<long>(std::floor(gy))}];
        ++cell.count;
        cell.ignorance_sum += p.ignorance;
    }

    std::vector<HexBinCell> cells;
    auto emit = [&](const auto& lattice, double offset) {
        for (const auto& [coord, cell] : lattice) {
            HexBinCell out;
            out.x = range.x_min + (static_cast<double>(coord.first) + offset) * sx;
            out.y = range.y_min + (static_cast<double>(coord.second) + offset) * sy;
            out.count = cell.count;
            if (with_ignorance)
                out.mean_ignorance = cell.ignorance_sum / static_cast<double>(cell.count);
            cells.push_back(out);
        }
    };
    emit(lattice_a, 0.0);
    emit(lattice_b, 0.5);
    std::sort(cells.begin(), cells.end(), [](const HexBinCell& l, const HexBinCell& r) {
        return l.x != r.x ? l.x < r.x : l.y < r.y;
    });
    return cells;
}

std::vector<CategoryMean> category_means(std::span<const DiagramPoint> points) {
    std::size_t k = 0;
    for (const auto& p : points) k = std::max(k, p.observed + 1);
    std::vector<double> sx(k, 0.0), sy(k, 0.0);
    std::vector<std::size_t> counts(k, 0);
    for (const auto& p : points) {
        sx[p.observed] += p.x;
        sy[p.observed] += p.y;
        ++counts[p.observed];
    }
    std::vector<CategoryMean> means;
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] == 0) continue;
        means.push_back({c, sx[c] / static_cast<double>(counts[c]),
                         sy[c] / static_cast<double>(counts[c]), counts[c]});
    }
    return means;
}

DiagramData build_diagram(std::span<const ScorecardRow> rows,
                          std::span<const VerificationPair> pairs, const Range& range,
                          bool performance, const HexBinConfig& config) {
    if (rows.empty()) throw EmptySample("cannot build a diagram from an empty sample");
    if (rows.size() != pairs.size()) throw WrongArity("rows and pairs differ in length");

    DiagramData data;
    data.points.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        DiagramPoint p;
        if (performance) {
            p.x = 1.0 - rows[i].eta;
            p.y = rows[i].alpha_star;
        } else {
            p.x = rows[i].commitment;
            p.y = rows[i].delta;
        }
        p.ignorance = rows[i].ignorance;
        p.observed = pairs[i].observed;
        p.id = pairs[i].id;
        data.points.push_back(std::move(p));
    }
    data.hexbins = hexbin(data.points, range, config.gridsize, performance);
    data.category_means = category_means(data.points);
    return data;
}

}  // namespace

DiagramData performance_points(std::span<const ScorecardRow> rows,
                               std::span<const VerificationPair> pairs,
                               const HexBinConfig& config) {
    return build_diagram(rows, pairs, Range{0.0, 1.0, 0.0, 1.0}, true, config);
}

DiagramData commitment_points(std::span<const ScorecardRow> rows,
                              std::span<const VerificationPair> pairs,
                              const HexBinConfig& config) {
    return build_diagram(rows, pairs, Range{0.0, 1.0, -1.0, 1.0}, false, config);
}

ReliabilityCurve reliability_curve(std::span<const VerificationPair> pairs,
                                   std::span<const double> tau_grid) {
    if (pairs.empty()) throw EmptySample("cannot build a reliability curve from an empty sample");
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        if (!(tau_grid[i] >= 0.0 && tau_grid[i] <= 1.0))
            throw OutOfRange("tau grid values must lie in [0,1]");
        if (i > 0 && tau_grid[i] <= tau_grid[i - 1])
            throw InvalidConfig("tau grid must be strictly ascending");
    }

    struct Entry {
        double nc_peak;
        bool hit;
    };
    std::vector<Entry> entries;
    entries.reserve(pairs.size());
    std::size_t hits = 0;
    for (const auto& pair : pairs) {
        const std::size_t peak = peak_category(pair.forecast);
        const EventSet event{peak};
        const bool hit = peak == pair.observed;
        entries.push_back({conditional_necessity(pair.forecast, event), hit});
        hits += hit ? 1 : 0;
    }

    ReliabilityCurve curve;
    curve.baseline_random = 1.0 / static_cast<double>(pairs[0].forecast.size());
    curve.baseline_accuracy = static_cast<double>(hits) / static_cast<double>(pairs.size());
    for (double tau : tau_grid) {
        std::size_t kept = 0, kept_hits = 0;
        for (const auto& e : entries) {
            if (e.nc_peak >= tau) {
                ++kept;
                kept_hits += e.hit ? 1 : 0;
            }
        }
        ReliabilityPoint pt;
        pt.tau = tau;
        pt.sample_count = kept;
        if (kept > 0) pt.hit_rate = static_cast<double>(kept_hits) / static_cast<double>(kept);
        curve.points.push_back(pt);
    }
    return curve;
}

std::vector<double> default_tau_grid(double step) {
    if (!(step > 0.0 && step <= 1.0)) throw InvalidConfig("tau step must lie in (0, 1]");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double tau = static_cast<double>(i) * step;
        if (tau > 0.95 + 1e-12) break;
        grid.push_back(tau);
    }
    return grid;
}

}  // namespace possver
