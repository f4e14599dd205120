#include "pairgraph/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pairgraph {

namespace {

using Json = nlohmann::json;

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open " + path.string());
    return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot open " + path.string() + " for writing");
    return out;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

bool parse_double(const std::string& s, double* out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\t')) --end;
    if (begin == end) return false;
    const auto [ptr, ec] = std::from_chars(begin, end, *out);
    return ec == std::errc() && ptr == end;
}

bool parse_int(const std::string& s, int* out) {
    double v = 0.0;
    if (!parse_double(s, &v)) return false;
    if (v != std::floor(v)) return false;
    *out = static_cast<int>(v);
    return true;
}

// Full-precision shortest-round-trip formatting.
std::string fmt(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

void write_edge_list(const std::filesystem::path& path, int d, const std::vector<Edge>& directed,
                     const std::vector<Edge>& undirected) {
    std::ofstream out = open_for_write(path);
    out << "#d=" << d << '\n';
    for (const Edge& e : directed) out << e.first << '\t' << e.second << '\n';
    for (const Edge& e : undirected) out << e.first << '\t' << e.second << "\tu\n";
    if (!out) throw data_error("write failed: " + path.string());
}

MixedGraph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    int d = -1;
    int lineno = 0;
    std::vector<Edge> directed, undirected;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(lineno);
        if (line[0] == '#') {
            if (line.rfind("#d=", 0) == 0 && parse_int(line.substr(3), &d)) continue;
            throw data_error(where + ": bad header line '" + line + "'");
        }
        if (d < 0) throw data_error(path.string() + ": missing '#d=<int>' header line");
        const std::vector<std::string> parts = split(line, '\t');
        int i = 0, j = 0;
        if (parts.size() < 2 || parts.size() > 3 || !parse_int(parts[0], &i) ||
            !parse_int(parts[1], &j)) {
            throw data_error(where + ": expected 'i<TAB>j[<TAB>u]', got '" + line + "'");
        }
        if (parts.size() == 3) {
            if (parts[2] != "u") throw data_error(where + ": unknown edge marker '" + parts[2] + "'");
            undirected.push_back({i, j});
        } else {
            directed.push_back({i, j});
        }
    }
    if (d < 0) throw data_error(path.string() + ": missing '#d=<int>' header line");
    try {
        return MixedGraph(d, std::move(directed), std::move(undirected));
    } catch (const invariant_error& e) {
        throw data_error(path.string() + ": " + e.what());
    }
}

DirectedGraph read_directed_graph(const std::filesystem::path& path) {
    MixedGraph g = read_edge_list(path);
    if (!g.undirected().empty()) {
        throw data_error(path.string() + ": undirected edges not allowed here");
    }
    try {
        return DirectedGraph(g.node_count(), g.directed());
    } catch (const invariant_error& e) {
        throw data_error(path.string() + ": " + e.what());
    }
}

AcyclicGraph read_acyclic_graph(const std::filesystem::path& path) {
    MixedGraph g = read_edge_list(path);
    if (!g.undirected().empty()) {
        throw data_error(path.string() + ": undirected edges not allowed here");
    }
    try {
        return AcyclicGraph(g.node_count(), g.directed());
    } catch (const invariant_error& e) {
        throw data_error(path.string() + ": " + e.what());
    }
}

VariableMatrix read_data_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    std::vector<std::string> names;
    std::vector<double> values;
    int d = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        const std::vector<std::string> parts = split(line, ',');
        if (d < 0) {
            // First non-empty line: header if any cell is non-numeric.
            double probe = 0.0;
            const bool numeric = std::all_of(parts.begin(), parts.end(), [&](const std::string& s) {
                return parse_double(s, &probe);
            });
            d = static_cast<int>(parts.size());
            if (!numeric) {
                names = parts;
                continue;
            }
        }
        if (static_cast<int>(parts.size()) != d) {
            throw data_error(path.string() + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(d) + " columns, got " + std::to_string(parts.size()));
        }
        for (int c = 0; c < d; ++c) {
            double v = 0.0;
            if (!parse_double(parts[c], &v)) {
                throw data_error(path.string() + ":" + std::to_string(lineno) + ": column " +
                                 std::to_string(c + 1) + ": cannot parse '" + parts[c] + "'");
            }
            values.push_back(v);
        }
    }
    if (d < 0) throw data_error(path.string() + ": empty data file");
    const int n = static_cast<int>(values.size()) / d;
    try {
        return VariableMatrix(n, d, std::move(values), std::move(names));
    } catch (const invariant_error& e) {
        throw data_error(path.string() + ": " + e.what());
    }
}

void write_data_csv(const std::filesystem::path& path, const VariableMatrix& x) {
    std::ofstream out = open_for_write(path);
    for (int c = 0; c < x.d; ++c) {
        out << (c ? "," : "") << (x.column_names.empty() ? "x" + std::to_string(c)
                                                         : x.column_names[c]);
    }
    out << '\n';
    for (int r = 0; r < x.n; ++r) {
        for (int c = 0; c < x.d; ++c) out << (c ? "," : "") << fmt(x.at(r, c));
        out << '\n';
    }
    if (!out) throw data_error("write failed: " + path.string());
}

WeightedAdjacency read_adjacency_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    std::vector<double> values;
    int d = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        const std::vector<std::string> parts = split(line, ',');
        if (d < 0) d = static_cast<int>(parts.size());
        if (static_cast<int>(parts.size()) != d) {
            throw data_error(path.string() + ":" + std::to_string(lineno) + ": ragged row");
        }
        for (const std::string& s : parts) {
            double v = 0.0;
            if (!parse_double(s, &v)) {
                throw data_error(path.string() + ":" + std::to_string(lineno) +
                                 ": cannot parse '" + s + "'");
            }
            values.push_back(v);
        }
    }
    if (d < 0) throw data_error(path.string() + ": empty adjacency file");
    if (values.size() != static_cast<std::size_t>(d) * d) {
        throw data_error(path.string() + ": expected a " + std::to_string(d) + "x" +
                         std::to_string(d) + " matrix");
    }
    try {
        return WeightedAdjacency(d, std::move(values));
    } catch (const invariant_error& e) {
        throw data_error(path.string() + ": " + e.what());
    }
}

void write_adjacency_csv(const std::filesystem::path& path, const WeightedAdjacency& a) {
    std::ofstream out = open_for_write(path);
    const int d = a.node_count();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) out << (j ? "," : "") << fmt(a.at(i, j));
        out << '\n';
    }
    if (!out) throw data_error("write failed: " + path.string());
}

void write_feature_matrix_csv(const std::filesystem::path& path, const VariableMatrix& x) {
    std::ofstream out = open_for_write(path);
    out << "i,j";
    for (const std::string& name : FeatureVector::names()) out << ',' << name;
    out << '\n';
    for (int i = 0; i < x.d; ++i) {
        for (int j = i + 1; j < x.d; ++j) {
            const FeatureVector f = extract_features(x.column(i), x.column(j));
            out << i << ',' << j;
            for (double v : f.values) out << ',' << fmt(v);
            out << '\n';
        }
    }
    if (!out) throw data_error("write failed: " + path.string());
}

std::vector<LabeledPairSample> read_training_pairs(const std::filesystem::path& pairs_dir,
                                                   const std::filesystem::path& labels_csv) {
    std::ifstream in = open_for_read(labels_csv);
    std::string line;
    int lineno = 0;
    std::vector<LabeledPairSample> samples;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        const std::vector<std::string> parts = split(line, ',');
        const std::string where = labels_csv.string() + ":" + std::to_string(lineno);
        if (parts.size() != 2) throw data_error(where + ": expected 'pair_id,label'");
        int label = 0;
        if (!parse_int(parts[1], &label)) {
            if (lineno == 1) continue;  // header row
            throw data_error(where + ": cannot parse label '" + parts[1] + "'");
        }
        if (label < -1 || label > 1) {
            throw data_error(where + ": label must be -1, 0, or 1");
        }
        const std::filesystem::path pair_path = pairs_dir / (parts[0] + ".csv");
        if (!std::filesystem::exists(pair_path)) {
            throw data_error(where + ": missing pair file " + pair_path.string());
        }
        const VariableMatrix pair = read_data_csv(pair_path);
        if (pair.d != 2) {
            throw data_error(pair_path.string() + ": pair file must have exactly 2 columns");
        }
        if (pair.n < 3) {
            throw data_error(pair_path.string() + ": pair needs at least 3 samples");
        }
        samples.push_back({pair.column(0), pair.column(1), label});
    }
    if (samples.empty()) throw data_error(labels_csv.string() + ": no labeled pairs");
    return samples;
}

std::string metric_record_to_json(const MetricRecord& record) {
    Json j;
    if (!record.config.empty()) j["config"] = record.config;
    if (!record.method.empty()) j["method"] = record.method;
    if (record.rep >= 0) j["rep"] = record.rep;
    for (const auto& [key, value] : record.values) j[key] = value;
    return j.dump();
}

namespace {

MetricRecord parse_metric_record(const std::string& line, const std::string& where) {
    Json j;
    try {
        j = Json::parse(line);
    } catch (const Json::exception& e) {
        throw data_error(where + ": " + e.what());
    }
    MetricRecord r;
    for (const auto& [key, value] : j.items()) {
        if (key == "config") {
            r.config = value.get<std::string>();
        } else if (key == "method") {
            r.method = value.get<std::string>();
        } else if (key == "rep") {
            r.rep = value.get<int>();
        } else if (value.is_number()) {
            r.values[key] = value.get<double>();
        } else {
            throw data_error(where + ": unexpected field '" + key + "'");
        }
    }
    return r;
}

void read_records_file(const std::filesystem::path& path, std::vector<MetricRecord>* out) {
    std::ifstream in = open_for_read(path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        out->push_back(parse_metric_record(line, path.string() + ":" + std::to_string(lineno)));
    }
}

}  // namespace

std::vector<MetricRecord> read_metric_records(const std::filesystem::path& file_or_dir) {
    std::vector<MetricRecord> records;
    if (std::filesystem::is_directory(file_or_dir)) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(file_or_dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) read_records_file(f, &records);
    } else {
        read_records_file(file_or_dir, &records);
    }
    if (records.empty()) throw data_error(file_or_dir.string() + ": no metric records found");
    return records;
}

void append_metric_record(const std::filesystem::path& path, const MetricRecord& record) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw data_error("cannot open " + path.string() + " for appending");
    out << metric_record_to_json(record) << '\n';
    if (!out) throw data_error("write failed: " + path.string());
}

}  // namespace pairgraph
