// possver: command-line front end for the possibilistic verification toolkit.
//
// Exit codes: 0 success, 2 input validation failure, 3 I/O failure,
// 4 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "possver/archive.hpp"
#include "possver/bridge.hpp"
#include "possver/categorical.hpp"
#include "possver/compare.hpp"
#include "possver/diagnostics.hpp"
#include "possver/errors.hpp"
#include "possver/scorecard.hpp"
#include "possver/synthgen.hpp"
#include "possver/table.hpp"

namespace {

using namespace possver;

struct Options {
    std::string universe_path;
    std::string input;
    std::string candidate;
    std::string baseline;
    std::string output = "-";
    std::string format = "json";
    std::string threshold_label;
    bool all_thresholds = false;
    bool aggregate_mode = false;
    bool decompose_mode = false;
    bool confusion_mode = false;
    bool multi_hss_mode = false;
    bool unpaired = false;
    std::string diag_kind = "performance";
    std::string diag_table = "points";
    double epsilon = kDefaultEpsilon;
    double tau_step = 0.05;
    std::uint64_t seed = 0;
    std::size_t n = 800;
    std::size_t resamples = 1000;
    std::size_t gridsize = 18;
};

UniversePtr load_universe(const Options& opt) {
    if (opt.universe_path.empty()) return spc_universe();
    return read_universe(opt.universe_path);
}

template <typename Fn>
void with_output(const std::string& destination, Fn&& fn) {
    if (destination == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(destination);
    if (!out) throw IoError("cannot open " + destination + " for writing");
    fn(out);
    if (!out) throw IoError("failed writing " + destination);
}

void emit(const Table& table, const Options& opt) {
    const OutputFormat fmt = parse_format(opt.format);
    with_output(opt.output, [&](std::ostream& out) { write_table(table, fmt, out); });
}

Table::Cell cell(std::optional<double> v) {
    if (v) return *v;
    return std::monostate{};
}

std::size_t resolve_threshold(const std::string& label, const UniversePtr& universe) {
    if (auto idx = universe->index_of(label)) {
        if (*idx < 1 || *idx > universe->size() - 1)
            throw BadThreshold("'" + label + "' is not a usable severity threshold");
        return *idx;
    }
    try {
        const std::size_t idx = std::stoul(label);
        if (idx < 1 || idx > universe->size() - 1)
            throw BadThreshold("threshold index " + label + " outside [1, " +
                               std::to_string(universe->size() - 1) + "]");
        return idx;
    } catch (const std::invalid_argument&) {
        throw ValidationError("unknown threshold '" + label + "'");
    } catch (const std::out_of_range&) {
        throw ValidationError("unknown threshold '" + label + "'");
    }
}

// score: per-pair five-number rows, or strata means with --aggregate.
void run_score(const Options& opt) {
    const auto universe = load_universe(opt);
    const auto pairs = read_archive(opt.input, universe);

    std::vector<ScorecardRow> rows;
    std::vector<std::size_t> observed;
    rows.reserve(pairs.size());
    for (const auto& pair : pairs) {
        rows.push_back(score_pair(pair));
        observed.push_back(pair.observed);
    }

    Table table;
    if (opt.aggregate_mode) {
        const auto agg = aggregate(rows, observed);
        table.columns = {"stratum",   "count",   "alpha_star", "eta",        "delta",
                         "ignorance", "nc_star", "m",          "joint_skill"};
        auto add = [&](const std::string& name, std::size_t count, const ScorecardMeans& m) {
            table.add_row({name, static_cast<std::int64_t>(count), m.alpha_star, m.eta, m.delta,
                           m.ignorance, m.nc_star, m.commitment, m.joint_skill});
        };
        add("overall", agg.count, agg.overall);
        for (std::size_t c = 0; c < agg.category_counts.size(); ++c)
            if (agg.category_counts[c] > 0)
                add(universe->label(c), agg.category_counts[c], agg.category_means[c]);
    } else {
        table.columns = {"id",        "alpha_star", "eta", "delta",      "ignorance",
                         "nc_star",   "m",          "peak", "joint_skill"};
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            table.add_row({pairs[i].id, r.alpha_star, r.eta, r.delta, r.ignorance, r.nc_star,
                           r.commitment, universe->label(r.peak), r.joint_skill});
        }
    }
    emit(table, opt);
}

// bridge: probability conversion and information gain per pair, or the
// sample decomposition with --decompose. Baseline is climatology unless a
// second archive is given.
void run_bridge(const Options& opt) {
    const auto universe = load_universe(opt);
    const auto pairs = read_archive(opt.input, universe);

    std::vector<ProbabilityVector> probs;
    std::vector<std::size_t> observed;
    probs.reserve(pairs.size());
    for (const auto& pair : pairs) {
        probs.push_back(convert(pair.forecast));
        observed.push_back(pair.observed);
    }

    if (opt.decompose_mode) {
        const auto d = decompose(probs, observed, opt.epsilon);
        Table table;
        table.columns = {"count", "groups", "mean_surprise", "unc", "dsc", "rel"};
        table.add_row({static_cast<std::int64_t>(pairs.size()),
                       static_cast<std::int64_t>(d.groups), d.mean_surprise, d.unc, d.dsc, d.rel});
        emit(table, opt);
        return;
    }

    std::vector<ProbabilityVector> baselines;
    if (!opt.baseline.empty()) {
        const auto base_pairs = read_archive(opt.baseline, universe);
        if (base_pairs.size() != pairs.size())
            throw UnpairedSamples("baseline archive has a different record count");
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (base_pairs[i].observed != pairs[i].observed)
                throw UnpairedSamples("baseline archive observes a different outcome at record " +
                                      std::to_string(i + 1));
            baselines.push_back(convert(base_pairs[i].forecast));
        }
    } else {
        baselines.assign(pairs.size(), climatology_vector(universe));
    }

    Table table;
    table.columns = {"id",      "p_obs",   "p_ign",             "surprise",
                     "floored", "baseline_surprise", "ig"};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto s = surprise(probs[i], observed[i], opt.epsilon);
        const auto sb = surprise(baselines[i], observed[i], opt.epsilon);
        table.add_row({pairs[i].id, probs[i].p[observed[i]], probs[i].ignorance_mass(), s.bits,
                       s.floored, sb.bits, sb.bits - s.bits});
    }
    emit(table, opt);
}

// cat: contingency scores per severity threshold; K x K views via flags.
void run_cat(const Options& opt) {
    const auto universe = load_universe(opt);
    const auto pairs = read_archive(opt.input, universe);
    const std::size_t k = universe->size();

    Table table;
    if (opt.confusion_mode) {
        const auto cm = confusion(pairs);
        table.columns = {"forecast"};
        for (std::size_t c = 0; c < k; ++c) table.columns.push_back(universe->label(c));
        for (std::size_t r = 0; r < k; ++r) {
            std::vector<Table::Cell> row{universe->label(r)};
            for (std::size_t c = 0; c < k; ++c) row.push_back(cm.at(r, c));
            table.add_row(std::move(row));
        }
        emit(table, opt);
        return;
    }
    if (opt.multi_hss_mode) {
        const auto cm = confusion(pairs);
        std::int64_t trace = 0;
        for (std::size_t i = 0; i < k; ++i) trace += cm.at(i, i);
        table.columns = {"n", "n_correct", "hss"};
        table.add_row({cm.total(), trace, cell(hss_multicategory(cm))});
        emit(table, opt);
        return;
    }

    std::vector<std::size_t> thresholds;
    if (!opt.threshold_label.empty())
        thresholds.push_back(resolve_threshold(opt.threshold_label, universe));
    else
        for (std::size_t t = 1; t <= k - 1; ++t) thresholds.push_back(t);

    table.columns = {"threshold", "a", "b", "c", "d", "pod", "far", "csi", "pss", "hss"};
    for (std::size_t t : thresholds) {
        const auto tbl = contingency(pairs, t);
        const auto s = binary_scores(tbl);
        table.add_row({universe->label(t), tbl.hits, tbl.false_alarms, tbl.misses,
                       tbl.correct_negatives, cell(s.pod), cell(s.far), cell(s.csi), cell(s.pss),
                       cell(s.hss)});
    }
    emit(table, opt);
}

// diag: plot-ready tables for the performance / commitment diagrams and the
// conditional-necessity reliability curve.
void run_diag(const Options& opt) {
    const auto universe = load_universe(opt);
    const auto pairs = read_archive(opt.input, universe);

    Table table;
    if (opt.diag_kind == "reliability") {
        const auto grid = default_tau_grid(opt.tau_step);
        const auto curve = reliability_curve(pairs, grid);
        table.columns = {"tau", "hit_rate", "count", "baseline_random", "baseline_accuracy"};
        for (const auto& pt : curve.points)
            table.add_row({pt.tau, cell(pt.hit_rate), static_cast<std::int64_t>(pt.sample_count),
                           curve.baseline_random, curve.baseline_accuracy});
        emit(table, opt);
        return;
    }

    std::vector<ScorecardRow> rows;
    rows.reserve(pairs.size());
    for (const auto& pair : pairs) rows.push_back(score_pair(pair));

    const bool performance = opt.diag_kind == "performance";
    if (!performance && opt.diag_kind != "commitment")
        throw ValidationError("unknown diagram kind '" + opt.diag_kind + "'");
    HexBinConfig hex{opt.gridsize};
    const DiagramData data = performance ? performance_points(rows, pairs, hex)
                                         : commitment_points(rows, pairs, hex);

    if (opt.diag_table == "points") {
        table.columns = {"id", "x", "y", "ignorance", "observed"};
        for (const auto& p : data.points)
            table.add_row({p.id, p.x, p.y, p.ignorance, universe->label(p.observed)});
    } else if (opt.diag_table == "hexbin") {
        if (performance) {
            table.columns = {"x", "y", "count", "mean_ignorance"};
            for (const auto& c : data.hexbins)
                table.add_row({c.x, c.y, static_cast<std::int64_t>(c.count),
                               cell(c.mean_ignorance)});
        } else {
            table.columns = {"x", "y", "count"};
            for (const auto& c : data.hexbins)
                table.add_row({c.x, c.y, static_cast<std::int64_t>(c.count)});
        }
    } else if (opt.diag_table == "means") {
        table.columns = {"category", "x", "y", "count"};
        for (const auto& m : data.category_means)
            table.add_row({universe->label(m.category), m.x, m.y,
                           static_cast<std::int64_t>(m.count)});
    } else {
        throw ValidationError("unknown diag table '" + opt.diag_table + "'");
    }
    emit(table, opt);
}

// gen: synthetic possibilistic reforecast in the archive format.
void run_gen(const Options& opt) {
    UniversePtr universe;
    SynthConfig config;
    if (!opt.universe_path.empty()) {
        universe = read_universe(opt.universe_path);
        if (!universe->climatology())
            throw MissingClimatology("gen needs a universe with climatology");
        config.climatology = *universe->climatology();
    } else {
        universe = spc_universe();
    }
    config.n = opt.n;
    config.seed = opt.seed;

    const auto sample = generate(config, universe);
    std::vector<VerificationPair> pairs;
    pairs.reserve(sample.records.size());
    for (const auto& rec : sample.records) pairs.push_back(rec.pair);
    with_output(opt.output, [&](std::ostream& out) { write_archive(pairs, out); });
}

// compare: two-sample scorecard with bootstrap significance flags.
void run_compare(const Options& opt) {
    const auto universe = load_universe(opt);
    const auto baseline = read_archive(opt.input, universe);
    const auto candidate = read_archive(opt.candidate, universe);

    CompareSettings settings;
    settings.resamples = opt.resamples;
    settings.seed = opt.seed;
    settings.epsilon = opt.epsilon;
    settings.paired = !opt.unpaired;
    if (!opt.threshold_label.empty())
        settings.threshold = resolve_threshold(opt.threshold_label, universe);

    const auto report = compare(baseline, candidate, settings);

    Table table;
    table.columns = {"facet",       "metric",      "baseline", "candidate",
                     "delta",       "orientation", "significant", "magnitude"};
    for (const auto& row : report.rows)
        table.add_row({row.facet, row.metric, cell(row.baseline), cell(row.candidate),
                       cell(row.delta), to_string(row.orientation), row.significant,
                       row.magnitude.empty() ? Table::Cell{std::monostate{}}
                                             : Table::Cell{row.magnitude}});

    if (parse_format(opt.format) == OutputFormat::Csv) {
        emit(table, opt);
        return;
    }

    // JSON carries the full report: settings plus rows.
    nlohmann::ordered_json doc;
    doc["baseline_n"] = report.baseline_n;
    doc["candidate_n"] = report.candidate_n;
    doc["resamples"] = report.settings.resamples;
    doc["confidence"] = report.settings.confidence;
    doc["seed"] = report.settings.seed;
    doc["threshold"] = universe->label(report.settings.threshold);
    doc["epsilon"] = report.settings.epsilon;
    doc["paired"] = report.settings.paired;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["facet"] = row.facet;
        r["metric"] = row.metric;
        r["baseline"] = row.baseline ? nlohmann::ordered_json(*row.baseline) : nullptr;
        r["candidate"] = row.candidate ? nlohmann::ordered_json(*row.candidate) : nullptr;
        r["delta"] = row.delta ? nlohmann::ordered_json(*row.delta) : nullptr;
        r["orientation"] = to_string(row.orientation);
        r["significant"] = row.significant;
        r["magnitude"] = row.magnitude.empty() ? nlohmann::ordered_json(nullptr)
                                               : nlohmann::ordered_json(row.magnitude);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    with_output(opt.output, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"possibilistic forecast verification toolkit"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool needs_input) {
        sub->add_option("--universe", opt.universe_path,
                        "universe JSON file (default: built-in SPC categories)");
        if (needs_input)
            sub->add_option("--input", opt.input, "forecast archive (NDJSON)")->required();
        sub->add_option("--output", opt.output, "output path, or - for stdout");
        sub->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* score = app.add_subcommand("score", "five-number scorecard per pair");
    add_common(score, true);
    score->add_flag("--aggregate", opt.aggregate_mode, "emit overall and per-category means");

    auto* bridge = app.add_subcommand("bridge", "probability conversion and information gain");
    add_common(bridge, true);
    bridge->add_option("--baseline", opt.baseline,
                       "baseline archive (default: climatology baseline)");
    bridge->add_option("--epsilon", opt.epsilon, "surprise floor, in (0, 0.5)");
    bridge->add_flag("--decompose", opt.decompose_mode,
                     "emit the UNC/DSC/REL decomposition instead of per-pair rows");

    auto* cat = app.add_subcommand("cat", "threshold contingency scores");
    add_common(cat, true);
    cat->add_option("--threshold", opt.threshold_label, "single severity threshold (label)");
    cat->add_flag("--all-thresholds", opt.all_thresholds,
                  "score every threshold (default when --threshold is absent)");
    cat->add_flag("--confusion", opt.confusion_mode, "emit the K x K confusion matrix");
    cat->add_flag("--multi-hss", opt.multi_hss_mode, "emit the K x K Heidke skill summary");

    auto* diag = app.add_subcommand("diag", "diagram and reliability tables");
    add_common(diag, true);
    diag->add_option("--kind", opt.diag_kind, "performance, commitment, or reliability")
        ->check(CLI::IsMember({"performance", "commitment", "reliability"}));
    diag->add_option("--table", opt.diag_table, "points, hexbin, or means")
        ->check(CLI::IsMember({"points", "hexbin", "means"}));
    diag->add_option("--tau-step", opt.tau_step, "reliability threshold spacing");
    diag->add_option("--gridsize", opt.gridsize, "hexbin columns");

    auto* gen = app.add_subcommand("gen", "synthetic possibilistic reforecast");
    add_common(gen, false);
    gen->add_option("--n", opt.n, "number of records");
    gen->add_option("--seed", opt.seed, "random seed");

    auto* cmp = app.add_subcommand("compare", "model-version comparison scorecard");
    add_common(cmp, true);
    cmp->add_option("--candidate", opt.candidate, "candidate archive (NDJSON)")->required();
    cmp->add_option("--resamples", opt.resamples, "bootstrap resamples");
    cmp->add_option("--seed", opt.seed, "bootstrap seed");
    cmp->add_option("--threshold", opt.threshold_label, "categorical-facet threshold (label)");
    cmp->add_option("--epsilon", opt.epsilon, "surprise floor");
    cmp->add_flag("--unpaired", opt.unpaired, "resample the two archives independently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    try {
        if (score->parsed()) run_score(opt);
        else if (bridge->parsed()) run_bridge(opt);
        else if (cat->parsed()) run_cat(opt);
        else if (diag->parsed()) run_diag(opt);
        else if (gen->parsed()) run_gen(opt);
        else if (cmp->parsed()) run_compare(opt);
        return 0;
    } catch (const IoError& e) {
        std::cerr << "possver: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "possver: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "possver: " << e.what() << '\n';
        return 3;
    }
}
