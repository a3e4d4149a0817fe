// Copyright 2026 The qtransduce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtd/cli/output.h"

#include <fmt/format.h>

#include "qtd/analytics/compare.h"
#include "qtd/core/random_stream.h"

namespace qtd::cli {

namespace {

void write_header(std::ostream &out, const std::vector<std::string_view> &columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? "," : "") << columns[i];
    }
    out << '\n';
}

const char *flag(bool b) {
    return b ? "1" : "0";
}

const char *flag(const std::optional<bool> &b) {
    return b ? flag(*b) : "-";
}

std::string herald_fraction(const ResultsSummary &s) {
    std::int64_t th = s.count(to_string(HeraldClass::kTrueHerald));
    std::int64_t fh = s.count(to_string(HeraldClass::kFalseHerald));
    if (th + fh == 0) {
        return "";
    }
    return format_number(static_cast<double>(th) / static_cast<double>(th + fh));
}

}  // namespace

const std::vector<std::string_view> &dqt_table_columns() {
    static const std::vector<std::string_view> cols = {
        "eta_up", "eta_down", "p_theory", "p_sim", "ci_lo", "ci_hi", "fiber_length_km",
        "attenuation_length_km", "trials", "n_success", "replicate", "seed", "experiment_id"};
    return cols;
}

const std::vector<std::string_view> &eqt_table_columns() {
    static const std::vector<std::string_view> cols = {
        "eta_up", "detector", "eta_d", "p_theory", "p_sim", "ci_lo", "ci_hi",
        "fiber_length_km", "attenuation_length_km", "trials", "n_clicks", "n_true_herald",
        "n_false_herald", "n_no_click", "n_rejected_multi_photon", "true_herald_fraction",
        "replicate", "seed", "experiment_id"};
    return cols;
}

const std::vector<std::string_view> &dqt_trace_columns() {
    static const std::vector<std::string_view> cols = {
        "trial_index", "time_ps", "up_source_ok", "channel_survived", "down_dest_ok",
        "classification"};
    return cols;
}

const std::vector<std::string_view> &eqt_trace_columns() {
    static const std::vector<std::string_view> cols = {
        "trial_index", "time_ps",    "up_source_ok", "up_dest_ok",
        "source_survived", "dest_survived", "clicked_0", "clicked_1",
        "detected_0", "detected_1", "classification"};
    return cols;
}

std::string format_number(double value) {
    return fmt::format("{}", value);
}

void write_table(std::ostream &out, Strategy strategy, std::span<const ExperimentOutcome> outcomes) {
    write_header(out, strategy == Strategy::kDqt ? dqt_table_columns() : eqt_table_columns());
    for (const ExperimentOutcome &o : outcomes) {
        const ExperimentConfig &c = o.point.config;
        const ResultsSummary &s = o.summary;
        if (c.strategy != strategy) {
            continue;
        }
        if (strategy == Strategy::kDqt) {
            out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                               format_number(c.eta_up_source), format_number(c.eta_down_dest),
                               format_number(s.theoretical_probability),
                               format_number(s.simulated_probability), format_number(s.ci95.lo),
                               format_number(s.ci95.hi), format_number(c.fiber_length_km),
                               format_number(c.attenuation_length_km), s.n_ideal, s.n_success,
                               o.point.replicate, c.master_seed, o.point.experiment_id);
        } else {
            out << fmt::format(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                format_number(c.eta_up), to_string(c.detector_kind), format_number(c.eta_d),
                format_number(s.theoretical_probability), format_number(s.simulated_probability),
                format_number(s.ci95.lo), format_number(s.ci95.hi),
                format_number(c.fiber_length_km), format_number(c.attenuation_length_km),
                s.n_ideal, s.n_success, s.count(to_string(HeraldClass::kTrueHerald)),
                s.count(to_string(HeraldClass::kFalseHerald)),
                s.count(to_string(HeraldClass::kNoClick)),
                s.count(to_string(HeraldClass::kRejectedMultiPhoton)), herald_fraction(s),
                o.point.replicate, c.master_seed, o.point.experiment_id);
        }
    }
}

void emit_trace(std::ostream &out, std::span<const DqtTrialRecord> records) {
    write_header(out, dqt_trace_columns());
    for (const DqtTrialRecord &r : records) {
        out << r.trial_index << ',' << r.time.ps() << ',' << flag(r.up_source_ok) << ','
            << flag(r.channel_survived) << ',' << flag(r.down_dest_ok) << ','
            << to_string(r.classification) << '\n';
    }
}

void emit_trace(std::ostream &out, std::span<const EqtTrialRecord> records) {
    write_header(out, eqt_trace_columns());
    for (const EqtTrialRecord &r : records) {
        out << r.trial_index << ',' << r.time.ps() << ',' << flag(r.up_source_ok) << ','
            << flag(r.up_dest_ok) << ',' << flag(r.source_survived) << ','
            << flag(r.dest_survived) << ',' << flag(r.detections.clicked[0]) << ','
            << flag(r.detections.clicked[1]) << ',' << r.detections.detected_count[0] << ','
            << r.detections.detected_count[1] << ',' << to_string(r.classification) << '\n';
    }
}

std::string trace_filename(const ExperimentOutcome &o) {
    std::string strategy(to_string(o.point.config.strategy));
    for (char &ch : strategy) {
        ch = static_cast<char>(ch - 'A' + 'a');
    }
    return fmt::format("trace_{}_{}_r{}.csv", strategy, o.point.experiment_id, o.point.replicate);
}

nlohmann::json summary_json(std::span<const ExperimentOutcome> outcomes) {
    nlohmann::json doc;
    doc["tool"] = {{"name", "qtransduce"}, {"version", QTD_VERSION}};
    doc["generator"] = {{"name", RandomStream::kGeneratorName},
                        {"version", RandomStream::kGeneratorVersion},
                        {"seeding", "splitmix64 over fnv1a64(stream_id)"}};
    nlohmann::json experiments = nlohmann::json::array();
    for (const ExperimentOutcome &o : outcomes) {
        const ExperimentConfig &c = o.point.config;
        const ResultsSummary &s = o.summary;
        ComparisonReport cmp = compare(s);
        nlohmann::json e;
        e["experiment_id"] = o.point.experiment_id;
        e["replicate"] = o.point.replicate;
        e["seed"] = c.master_seed;
        e["parameter_key"] = o.point.parameter_key;
        e["strategy"] = to_string(c.strategy);
        nlohmann::json params = {{"fiber_length_km", c.fiber_length_km},
                                 {"attenuation_length_km", c.attenuation_length_km},
                                 {"propagation_delay_ps_per_km", c.propagation_delay_ps_per_km},
                                 {"period_ps", c.period_ps}};
        if (c.strategy == Strategy::kDqt) {
            params["eta_up_source"] = c.eta_up_source;
            params["eta_down_dest"] = c.eta_down_dest;
        } else {
            params["eta_up"] = c.eta_up;
            params["detector_kind"] = to_string(c.detector_kind);
            params["eta_d"] = c.eta_d;
            params["coincidence_window_ps"] = c.coincidence_window_ps;
        }
        e["parameters"] = params;
        e["trials"] = s.n_ideal;
        e["n_success"] = s.n_success;
        e["p_sim"] = s.simulated_probability;
        e["p_theory"] = s.theoretical_probability;
        e["ci95"] = {s.ci95.lo, s.ci95.hi};
        e["within_ci"] = cmp.within_ci;
        e["z_score"] = cmp.z_score;
        e["class_histogram"] = s.class_histogram;
        experiments.push_back(std::move(e));
    }
    doc["experiments"] = std::move(experiments);
    return doc;
}

}  // namespace qtd::cli
