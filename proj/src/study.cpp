// Copyright 2026 The qesearch Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qes/study.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "qes/errors.hpp"

namespace qes {

namespace {

// Stream tags for deriving section seeds from the study seed.
constexpr std::uint64_t kDataStream = 1;
constexpr std::uint64_t kTrainStream = 2;
constexpr std::uint64_t kNoiseStream = 3;
constexpr std::uint64_t kGaStream = 4;
constexpr std::uint64_t kRandomStream = 5;

std::string trim(const std::string &s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return s.substr(b, e - b);
}

// Shortest representation that round-trips exactly.
std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

class KeyValueFile {
  public:
    static KeyValueFile parse(const std::string &text) {
        KeyValueFile f;
        std::stringstream ss(text);
        std::string line;
        std::string section;
        std::size_t line_no = 0;
        while (std::getline(ss, line)) {
            ++line_no;
            const std::string t = trim(line);
            if (t.empty() || t[0] == '#' || t[0] == ';') {
                continue;
            }
            if (t.front() == '[') {
                if (t.back() != ']') {
                    throw ConfigError("malformed section header '" + t + "' at line " +
                                      std::to_string(line_no));
                }
                section = trim(t.substr(1, t.size() - 2));
                continue;
            }
            const std::size_t eq = t.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("expected key = value at line " + std::to_string(line_no));
            }
            const std::string key = section + "." + trim(t.substr(0, eq));
            if (!f.values_.emplace(key, trim(t.substr(eq + 1))).second) {
                throw ConfigError("duplicate config key: " + key);
            }
        }
        return f;
    }

    std::optional<std::string> take(const std::string &key) {
        auto it = values_.find(key);
        if (it == values_.end()) {
            return std::nullopt;
        }
        std::string v = it->second;
        values_.erase(it);
        return v;
    }

    void expect_empty() const {
        if (!values_.empty()) {
            throw ConfigError("unknown config key: " + values_.begin()->first);
        }
    }

  private:
    std::map<std::string, std::string> values_;
};

template <typename T> T parse_integer(const std::string &v, const std::string &key) {
    T out{};
    const std::string t = trim(v);
    const auto res = std::from_chars(t.data(), t.data() + t.size(), out);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
        throw ConfigError("config key " + key + ": cannot parse integer '" + v + "'");
    }
    return out;
}

double parse_real(const std::string &v, const std::string &key) {
    const std::string t = trim(v);
    try {
        std::size_t pos = 0;
        const double d = std::stod(t, &pos);
        if (pos != t.size()) {
            throw std::invalid_argument(t);
        }
        return d;
    } catch (const std::exception &) {
        throw ConfigError("config key " + key + ": cannot parse number '" + v + "'");
    }
}

bool parse_bool(const std::string &v, const std::string &key) {
    const std::string t = trim(v);
    if (t == "true" || t == "1") {
        return true;
    }
    if (t == "false" || t == "0") {
        return false;
    }
    throw ConfigError("config key " + key + ": expected true/false, got '" + v + "'");
}

struct Reader {
    KeyValueFile &file;

    template <typename T> void integer(const std::string &key, T &out) {
        if (auto v = file.take(key)) {
            out = parse_integer<T>(*v, key);
        }
    }
    void real(const std::string &key, double &out) {
        if (auto v = file.take(key)) {
            out = parse_real(*v, key);
        }
    }
    void boolean(const std::string &key, bool &out) {
        if (auto v = file.take(key)) {
            out = parse_bool(*v, key);
        }
    }
    void text(const std::string &key, std::string &out) {
        if (auto v = file.take(key)) {
            out = *v;
        }
    }
    void seed(const std::string &key, std::uint64_t &out, std::uint64_t fallback) {
        if (auto v = file.take(key)) {
            out = parse_integer<std::uint64_t>(*v, key);
        } else {
            out = fallback;
        }
    }
};

} // namespace

StudyConfig StudyConfig::from_text(const std::string &text) {
    KeyValueFile file = KeyValueFile::parse(text);
    Reader r{file};
    StudyConfig c;

    if (auto v = file.take("study.strategy")) {
        c.strategy = strategy_from_name(trim(*v));
    }
    r.integer("study.n_qubits", c.n_qubits);
    r.integer("study.seed", c.seed);
    r.integer("study.threads", c.threads);

    if (auto v = file.take("dataset.source")) {
        const std::string s = trim(*v);
        if (s == "synth") {
            c.dataset.source = DatasetSpec::Source::Synth;
        } else if (s == "csv") {
            c.dataset.source = DatasetSpec::Source::Csv;
        } else {
            throw ConfigError("dataset.source must be synth or csv, got '" + s + "'");
        }
    }
    r.text("dataset.csv_path", c.dataset.csv_path);
    r.text("dataset.label_column", c.dataset.label_column);
    r.boolean("dataset.has_header", c.dataset.has_header);
    r.integer("dataset.pca_to", c.dataset.pca_to);
    r.integer("dataset.n_per_class", c.dataset.n_per_class);
    r.real("dataset.separation", c.dataset.separation);
    r.boolean("dataset.planted", c.dataset.planted);
    r.real("dataset.split_ratio", c.dataset.split_ratio);
    r.seed("dataset.seed", c.dataset.seed, derive_seed(c.seed, kDataStream));

    r.integer("model.layers", c.model.num_layers);
    r.integer("model.readout_qubit", c.model.readout_qubit);

    r.integer("train.epochs", c.train.epochs);
    r.real("train.learning_rate", c.train.learning_rate);
    r.integer("train.batch_size", c.train.batch_size);
    if (auto v = file.take("train.optimizer")) {
        const std::string s = trim(*v);
        if (s == "adam") {
            c.train.optimizer = Optimizer::Adam;
        } else if (s == "sgd") {
            c.train.optimizer = Optimizer::Sgd;
        } else {
            throw ConfigError("train.optimizer must be adam or sgd, got '" + s + "'");
        }
    }
    r.seed("train.seed", c.train.seed, derive_seed(c.seed, kTrainStream));

    r.boolean("noise.enabled", c.noise_enabled);
    r.real("noise.p1", c.noise.p1);
    r.real("noise.p2", c.noise.p2);
    r.real("noise.readout_flip", c.noise.readout_flip);
    r.integer("noise.num_runs", c.noise.num_runs);
    r.seed("noise.seed", c.noise.seed, derive_seed(c.seed, kNoiseStream));

    r.integer("ga.s_pop", c.ga.s_pop);
    r.integer("ga.generations", c.ga.generations);
    r.real("ga.crossover_rate", c.ga.crossover_rate);
    r.real("ga.retention_rate", c.ga.retention_rate);
    r.real("ga.mutation_rate", c.ga.mutation_rate);
    r.integer("ga.tournament_size", c.ga.tournament_size);
    r.boolean("ga.cache_elites", c.ga.cache_elites);
    r.seed("ga.seed", c.ga.seed, derive_seed(c.seed, kGaStream));

    r.integer("random.budget", c.random.budget);
    r.seed("random.seed", c.random.seed, derive_seed(c.seed, kRandomStream));

    r.integer("sweep.cap", c.sweep.cap);

    file.expect_empty();
    c.validate();
    return c;
}

StudyConfig StudyConfig::from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
}

std::string StudyConfig::to_text() const {
    std::ostringstream out;
    out << "[study]\n";
    out << "strategy = " << strategy_name(strategy) << "\n";
    out << "n_qubits = " << n_qubits << "\n";
    out << "seed = " << seed << "\n";
    out << "threads = " << threads << "\n";
    out << "\n[dataset]\n";
    out << "source = " << (dataset.source == DatasetSpec::Source::Synth ? "synth" : "csv") << "\n";
    out << "csv_path = " << dataset.csv_path << "\n";
    out << "label_column = " << dataset.label_column << "\n";
    out << "has_header = " << (dataset.has_header ? "true" : "false") << "\n";
    out << "pca_to = " << dataset.pca_to << "\n";
    out << "n_per_class = " << dataset.n_per_class << "\n";
    out << "separation = " << format_double(dataset.separation) << "\n";
    out << "planted = " << (dataset.planted ? "true" : "false") << "\n";
    out << "split_ratio = " << format_double(dataset.split_ratio) << "\n";
    out << "seed = " << dataset.seed << "\n";
    out << "\n[model]\n";
    out << "layers = " << model.num_layers << "\n";
    out << "readout_qubit = " << model.readout_qubit << "\n";
    out << "\n[train]\n";
    out << "epochs = " << train.epochs << "\n";
    out << "learning_rate = " << format_double(train.learning_rate) << "\n";
    out << "batch_size = " << train.batch_size << "\n";
    out << "optimizer = " << (train.optimizer == Optimizer::Adam ? "adam" : "sgd") << "\n";
    out << "seed = " << train.seed << "\n";
    out << "\n[noise]\n";
    out << "enabled = " << (noise_enabled ? "true" : "false") << "\n";
    out << "p1 = " << format_double(noise.p1) << "\n";
    out << "p2 = " << format_double(noise.p2) << "\n";
    out << "readout_flip = " << format_double(noise.readout_flip) << "\n";
    out << "num_runs = " << noise.num_runs << "\n";
    out << "seed = " << noise.seed << "\n";
    out << "\n[ga]\n";
    out << "s_pop = " << ga.s_pop << "\n";
    out << "generations = " << ga.generations << "\n";
    out << "crossover_rate = " << format_double(ga.crossover_rate) << "\n";
    out << "retention_rate = " << format_double(ga.retention_rate) << "\n";
    out << "mutation_rate = " << format_double(ga.mutation_rate) << "\n";
    out << "tournament_size = " << ga.tournament_size << "\n";
    out << "cache_elites = " << (ga.cache_elites ? "true" : "false") << "\n";
    out << "seed = " << ga.seed << "\n";
    out << "\n[random]\n";
    out << "budget = " << random.budget << "\n";
    out << "seed = " << random.seed << "\n";
    out << "\n[sweep]\n";
    out << "cap = " << sweep.cap << "\n";
    return out.str();
}

void StudyConfig::validate() const {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigError("study.n_qubits must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (threads < 0) {
        throw ConfigError("study.threads must be >= 0");
    }
    if (dataset.source == DatasetSpec::Source::Csv && dataset.csv_path.empty()) {
        throw ConfigError("dataset.csv_path is required when dataset.source = csv");
    }
    if (!(dataset.split_ratio > 0.0 && dataset.split_ratio < 1.0)) {
        throw ConfigError("dataset.split_ratio must be in (0,1)");
    }
    if (dataset.pca_to < 0) {
        throw ConfigError("dataset.pca_to must be >= 0");
    }
    if (model.num_layers < 0) {
        throw ConfigError("model.layers must be >= 0");
    }
    if (model.readout_qubit < 0 || model.readout_qubit >= n_qubits) {
        throw ConfigError("model.readout_qubit out of range");
    }
    train.validate();
    if (noise_enabled) {
        noise.validate();
    }
    if (strategy == Strategy::Ga) {
        ga.validate();
    }
    if (strategy == Strategy::Random && random.budget < 1) {
        throw ConfigError("random.budget must be >= 1");
    }
}

Dataset build_dataset(const StudyConfig &cfg) {
    const std::size_t want = static_cast<std::size_t>(2 * cfg.n_qubits);
    Dataset data;
    if (cfg.dataset.source == DatasetSpec::Source::Synth) {
        SynthOptions opts;
        opts.n_features = static_cast<int>(want);
        opts.n_per_class = cfg.dataset.n_per_class;
        opts.separation = cfg.dataset.separation;
        opts.seed = cfg.dataset.seed;
        opts.planted = cfg.dataset.planted;
        opts.split_ratio = cfg.dataset.split_ratio;
        data = synth_blobs(opts);
    } else {
        CsvOptions opts;
        opts.label_column = cfg.dataset.label_column;
        opts.has_header = cfg.dataset.has_header;
        opts.split_ratio = cfg.dataset.split_ratio;
        opts.seed = cfg.dataset.seed;
        data = load_csv(cfg.dataset.csv_path, opts);
        if (cfg.dataset.pca_to > 0) {
            Matrix reduced = pca_reduce(data.features, static_cast<std::size_t>(cfg.dataset.pca_to));
            data = make_dataset(data.name + "+pca", std::move(reduced), data.labels,
                                cfg.dataset.split_ratio, cfg.dataset.seed, data.label_values);
        }
    }
    if (data.num_features() != want) {
        throw ConfigError("dataset provides " + std::to_string(data.num_features()) +
                          " features but study.n_qubits = " + std::to_string(cfg.n_qubits) +
                          " needs " + std::to_string(want));
    }
    return data;
}

StudyResult run_study(const StudyConfig &cfg, int threads_override) {
    cfg.validate();
    const int threads = threads_override > 0 ? threads_override : cfg.threads;

    const Dataset data = build_dataset(cfg);
    EvalContext ctx;
    ctx.data = &data;
    ctx.model = cfg.model;
    ctx.train = cfg.train;
    if (cfg.noise_enabled) {
        ctx.noise = cfg.noise;
    }
    const FitnessFn fitness = make_fitness(ctx);

    StudyResult result;
    result.config = cfg;
    switch (cfg.strategy) {
    case Strategy::Sweep:
        result.report = sweep_search(cfg.n_qubits, fitness, cfg.sweep.cap, threads);
        break;
    case Strategy::Random:
        result.report = random_search(cfg.n_qubits, cfg.random.budget, cfg.random.seed, fitness,
                                      threads);
        break;
    case Strategy::Ga:
        result.report = run_ga(cfg.ga, cfg.n_qubits, fitness, threads);
        break;
    }
    return result;
}

} // namespace qes
