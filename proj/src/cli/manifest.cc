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

#include "qtd/cli/manifest.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "qtd/core/random_stream.h"

namespace qtd::cli {

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    while (true) {
        auto comma = s.find(',');
        out.emplace_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        s.remove_prefix(comma + 1);
    }
    return out;
}

double parse_double(std::string_view name, std::string_view text) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError(std::string(name), "'" + std::string(text) + "' is not a number");
    }
    return value;
}

template <typename Int>
Int parse_int(std::string_view name, std::string_view text) {
    Int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError(std::string(name), "'" + std::string(text) + "' is not an integer");
    }
    return value;
}

using Setter = std::function<void(ExperimentConfig &, std::string_view)>;

struct Parameter {
    std::string_view name;
    bool sweepable;
    Setter set;
};

const std::vector<Parameter> &parameter_table() {
    static const std::vector<Parameter> table = {
        {"strategy", true,
         [](ExperimentConfig &c, std::string_view v) {
             auto s = parse_strategy(v);
             if (!s) {
                 throw ConfigError("strategy", "'" + std::string(v) + "' is not DQT or EQT");
             }
             c.strategy = *s;
         }},
        {"eta", true,
         [](ExperimentConfig &c, std::string_view v) {
             double x = parse_double("eta", v);
             if (!(x >= 0.0 && x <= 1.0)) {
                 throw ConfigError("eta", "value " + std::string(v) + " is outside [0, 1]");
             }
             c.eta_up_source = c.eta_down_dest = c.eta_up = x;
         }},
        {"eta_up_source", true,
         [](ExperimentConfig &c, std::string_view v) {
             c.eta_up_source = parse_double("eta_up_source", v);
         }},
        {"eta_down_dest", true,
         [](ExperimentConfig &c, std::string_view v) {
             c.eta_down_dest = parse_double("eta_down_dest", v);
         }},
        {"eta_up", true,
         [](ExperimentConfig &c, std::string_view v) { c.eta_up = parse_double("eta_up", v); }},
        {"detector_kind", true,
         [](ExperimentConfig &c, std::string_view v) {
             auto k = parse_detector_kind(v);
             if (!k) {
                 throw ConfigError("detector_kind", "'" + std::string(v) + "' is not SPD or PNRD");
             }
             c.detector_kind = *k;
         }},
        {"eta_d", true,
         [](ExperimentConfig &c, std::string_view v) { c.eta_d = parse_double("eta_d", v); }},
        {"fiber_length_km", true,
         [](ExperimentConfig &c, std::string_view v) {
             c.fiber_length_km = parse_double("fiber_length_km", v);
         }},
        {"attenuation_length_km", true,
         [](ExperimentConfig &c, std::string_view v) {
             c.attenuation_length_km = parse_double("attenuation_length_km", v);
         }},
        {"propagation_delay_ps_per_km", true,
         [](ExperimentConfig &c, std::string_view v) {
             c.propagation_delay_ps_per_km = parse_double("propagation_delay_ps_per_km", v);
         }},
        {"period_ps", true,
         [](ExperimentConfig &c, std::string_view v) {
             c.period_ps = parse_int<SimTime::rep>("period_ps", v);
         }},
        {"coincidence_window_ps", true,
         [](ExperimentConfig &c, std::string_view v) {
             c.coincidence_window_ps = parse_int<SimTime::rep>("coincidence_window_ps", v);
         }},
        {"trials", false,
         [](ExperimentConfig &c, std::string_view v) {
             c.trials = parse_int<std::int64_t>("trials", v);
         }},
        {"master_seed", false,
         [](ExperimentConfig &c, std::string_view v) {
             c.master_seed = parse_int<std::uint64_t>("master_seed", v);
         }},
    };
    return table;
}

const Parameter *find_parameter(std::string_view name) {
    for (const Parameter &p : parameter_table()) {
        if (p.name == name) {
            return &p;
        }
    }
    return nullptr;
}

/// Applies and validates, reporting failures against the manifest line.
void apply_checked(ExperimentConfig &config, const Parameter &p, std::string_view value,
                   const std::string &source, int line) {
    try {
        p.set(config, value);
        config.validate();
    } catch (const ConfigError &e) {
        throw ManifestError(source, line, e.what());
    }
}

std::optional<OutputFormat> parse_format(std::string_view text) {
    if (text == "summary-json") {
        return OutputFormat::kSummaryJson;
    }
    if (text == "table-csv") {
        return OutputFormat::kTableCsv;
    }
    if (text == "trace-csv") {
        return OutputFormat::kTraceCsv;
    }
    return std::nullopt;
}

/// Parameters each strategy must receive explicitly; `eta` covers all
/// efficiencies.
const std::map<Strategy, std::vector<std::string_view>> &required_parameters() {
    static const std::map<Strategy, std::vector<std::string_view>> req = {
        {Strategy::kDqt, {"eta_up_source", "eta_down_dest"}},
        {Strategy::kEqt, {"eta_up", "detector_kind"}},
    };
    return req;
}

}  // namespace

ManifestError::ManifestError(const std::string &source, int line, const std::string &message)
    : std::runtime_error(line > 0 ? fmt::format("{}:{}: {}", source, line, message)
                                  : fmt::format("{}: {}", source, message)),
      line_(line) {
}

std::string_view to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::kSummaryJson:
            return "summary-json";
        case OutputFormat::kTableCsv:
            return "table-csv";
        case OutputFormat::kTraceCsv:
            return "trace-csv";
    }
    return "?";
}

const std::vector<std::string_view> &manifest_parameters() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const Parameter &p : parameter_table()) {
            out.push_back(p.name);
        }
        return out;
    }();
    return names;
}

RunManifest parse_manifest(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ManifestError(path.string(), 0, "cannot open manifest");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_manifest_text(buffer.str(), path.string());
}

RunManifest parse_manifest_text(std::string_view text, std::string source) {
    RunManifest m;
    m.source = source;
    std::string section;
    std::set<std::string> seen_keys;
    std::set<std::string, std::less<>> given;
    std::vector<std::string> strategies;
    bool formats_given = false;

    std::istringstream lines{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(lines, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ManifestError(source, line_no, "unterminated section header");
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "experiment" && section != "sweep" && section != "output") {
                throw ManifestError(source, line_no, "unknown section [" + section + "]");
            }
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ManifestError(source, line_no, "expected 'key = value'");
        }
        std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (section.empty()) {
            throw ManifestError(source, line_no, "'" + key + "' appears before any section");
        }
        if (key.empty() || value.empty()) {
            throw ManifestError(source, line_no, "empty key or value");
        }
        if (!seen_keys.insert(section + "." + key).second) {
            throw ManifestError(source, line_no, "duplicate key '" + key + "' in [" + section + "]");
        }

        if (section == "output") {
            if (key == "dir") {
                m.output_dir = std::string(value);
            } else if (key == "formats") {
                m.formats.clear();
                formats_given = true;
                for (const std::string &f : split_list(value)) {
                    auto format = parse_format(f);
                    if (!format) {
                        throw ManifestError(source, line_no, "unknown output format '" + f + "'");
                    }
                    m.formats.insert(*format);
                }
            } else if (key == "replicates") {
                try {
                    m.replicate_count = parse_int<int>("replicates", value);
                } catch (const ConfigError &e) {
                    throw ManifestError(source, line_no, e.what());
                }
                if (m.replicate_count < 1) {
                    throw ManifestError(source, line_no, "replicates: must be >= 1");
                }
            } else {
                throw ManifestError(source, line_no, "unknown key '" + key + "' in [output]");
            }
            continue;
        }

        const Parameter *p = find_parameter(key);
        if (p == nullptr) {
            throw ManifestError(source, line_no, "unknown parameter '" + key + "'");
        }
        given.insert(key);
        if (section == "experiment") {
            apply_checked(m.base, *p, value, source, line_no);
            if (key == "strategy") {
                strategies = {std::string(value)};
            }
        } else {
            if (!p->sweepable) {
                throw ManifestError(source, line_no, "'" + key + "' cannot be swept");
            }
            SweepAxis axis{key, split_list(value), line_no};
            for (const std::string &v : axis.values) {
                if (v.empty()) {
                    throw ManifestError(source, line_no, "empty value in sweep list");
                }
            }
            if (key == "strategy") {
                strategies = axis.values;
            }
            m.sweep.push_back(std::move(axis));
        }
    }
    if (formats_given && m.formats.empty()) {
        throw ManifestError(source, 0, "formats: at least one output format is required");
    }

    for (const SweepAxis &axis : m.sweep) {
        const Parameter *p = find_parameter(axis.parameter);
        for (const std::string &v : axis.values) {
            ExperimentConfig scratch = m.base;
            apply_checked(scratch, *p, v, source, axis.line);
        }
    }

    if (strategies.empty()) {
        throw ManifestError(source, 0, "missing required parameter 'strategy'");
    }
    for (const std::string &name : strategies) {
        Strategy s = *parse_strategy(name);
        for (std::string_view req : required_parameters().at(s)) {
            bool covered = given.count(req) > 0 || (req != "detector_kind" && given.count("eta") > 0);
            if (!covered) {
                throw ManifestError(source, 0,
                                    fmt::format("missing required parameter '{}' for {}", req,
                                                to_string(s)));
            }
        }
    }
    return m;
}

std::string parameter_key(const ExperimentConfig &c) {
    std::string key = fmt::format("strategy={}", to_string(c.strategy));
    if (c.strategy == Strategy::kDqt) {
        key += fmt::format(";eta_up_source={};eta_down_dest={}", c.eta_up_source, c.eta_down_dest);
    } else {
        key += fmt::format(";eta_up={};detector_kind={};eta_d={};coincidence_window_ps={}",
                           c.eta_up, to_string(c.detector_kind), c.eta_d,
                           c.coincidence_window_ps);
    }
    key += fmt::format(
        ";fiber_length_km={};attenuation_length_km={};propagation_delay_ps_per_km={};period_ps={}",
        c.fiber_length_km, c.attenuation_length_km, c.propagation_delay_ps_per_km, c.period_ps);
    return key;
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view key, int replicate) {
    return mix_seed(mix_seed(master_seed, fnv1a64(key)), static_cast<std::uint64_t>(replicate));
}

std::vector<ExperimentPoint> expand(const RunManifest &m) {
    std::vector<ExperimentConfig> grid = {m.base};
    for (const SweepAxis &axis : m.sweep) {
        const Parameter *p = find_parameter(axis.parameter);
        std::vector<ExperimentConfig> next;
        next.reserve(grid.size() * axis.values.size());
        for (const ExperimentConfig &c : grid) {
            for (const std::string &v : axis.values) {
                ExperimentConfig cell = c;
                try {
                    p->set(cell, v);
                } catch (const ConfigError &e) {
                    throw ManifestError(m.source, axis.line, e.what());
                }
                next.push_back(cell);
            }
        }
        grid = std::move(next);
    }

    std::vector<ExperimentPoint> points;
    std::set<std::string> seen;
    for (const ExperimentConfig &cell : grid) {
        try {
            cell.validate();
        } catch (const ConfigError &e) {
            throw ManifestError(m.source, 0, std::string("sweep cell rejected: ") + e.what());
        }
        std::string key = parameter_key(cell);
        // Axes irrelevant to a strategy (e.g. eta_d under DQT) repeat cells.
        if (!seen.insert(key).second) {
            continue;
        }
        for (int r = 0; r < m.replicate_count; ++r) {
            ExperimentPoint point;
            point.config = cell;
            point.config.master_seed = derive_seed(m.base.master_seed, key, r);
            point.replicate = r;
            point.parameter_key = key;
            point.experiment_id = fmt::format("{:016x}", fnv1a64(key));
            points.push_back(std::move(point));
        }
    }
    return points;
}

}  // namespace qtd::cli
