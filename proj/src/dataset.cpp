#include "swarmselect/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "swarmselect/errors.hpp"

namespace swarmselect {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

TabularDataset load_csv(const std::string& path, const std::string& label_column) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open '" + path + "'");

    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        header = split_line(trim(line));
        if (!header.empty()) break;
    }
    if (header.empty()) throw LoadError("'" + path + "' is empty");
    for (auto& h : header) h = trim(h);

    Eigen::Index label_idx = -1;
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == label_column) label_idx = static_cast<Eigen::Index>(i);
    if (label_idx < 0) {
        // fall back to a 0-based column index
        int idx = -1;
        auto [ptr, ec] = std::from_chars(label_column.data(),
                                         label_column.data() + label_column.size(), idx);
        if (ec == std::errc() && ptr == label_column.data() + label_column.size() && idx >= 0 &&
            idx < static_cast<int>(header.size()))
            label_idx = idx;
        else
            throw LoadError("label column '" + label_column + "' not found in header");
    }

    const auto n_cols = static_cast<Eigen::Index>(header.size());
    if (n_cols < 2) throw LoadError("need at least one feature column besides the label");

    std::vector<std::vector<double>> rows;
    std::vector<std::string> raw_labels;
    std::size_t line_no = 1;  // header was line 1
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        auto cells = split_line(stripped);
        if (static_cast<Eigen::Index>(cells.size()) != n_cols)
            throw LoadError("row " + std::to_string(line_no) + ": expected " +
                            std::to_string(n_cols) + " cells, got " +
                            std::to_string(cells.size()));
        std::vector<double> row;
        row.reserve(n_cols - 1);
        for (Eigen::Index c = 0; c < n_cols; ++c) {
            std::string cell = trim(cells[c]);
            if (c == label_idx) {
                raw_labels.push_back(cell);
                continue;
            }
            double v = 0.0;
            if (!parse_double(cell, v))
                throw LoadError("row " + std::to_string(line_no) + ", column '" + header[c] +
                                "': '" + cell + "' is not numeric");
            if (!std::isfinite(v))
                throw LoadError("row " + std::to_string(line_no) + ", column '" + header[c] +
                                "': non-finite value '" + cell + "'");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }

    if (rows.size() < 2) throw LoadError("'" + path + "' has fewer than 2 data rows");

    std::map<std::string, int> classes;  // sorted distinct label values
    for (const auto& l : raw_labels) classes.emplace(l, 0);
    if (classes.size() != 2)
        throw LoadError("label column '" + header[label_idx] + "' has " +
                        std::to_string(classes.size()) + " distinct values, expected 2");
    int next_id = 0;
    for (auto& [value, id] : classes) id = next_id++;

    TabularDataset ds;
    ds.features.resize(static_cast<Eigen::Index>(rows.size()), n_cols - 1);
    ds.labels.resize(static_cast<Eigen::Index>(rows.size()));
    for (Eigen::Index r = 0; r < ds.features.rows(); ++r) {
        for (Eigen::Index c = 0; c < n_cols - 1; ++c) ds.features(r, c) = rows[r][c];
        ds.labels(r) = classes.at(raw_labels[r]);
    }
    for (Eigen::Index c = 0; c < n_cols; ++c)
        if (c != label_idx) ds.feature_names.push_back(header[c]);
    ds.label_names.resize(2);
    for (const auto& [value, id] : classes) ds.label_names[id] = value;
    return ds;
}

void write_csv(const TabularDataset& ds, const std::string& path,
               const std::string& label_column) {
    std::ofstream out(path);
    if (!out) throw LoadError("cannot write '" + path + "'");
    for (Eigen::Index c = 0; c < ds.n_features(); ++c) {
        if (c < static_cast<Eigen::Index>(ds.feature_names.size()) &&
            !ds.feature_names[c].empty())
            out << ds.feature_names[c];
        else
            out << 'f' << (c + 1);
        out << ',';
    }
    out << label_column << '\n';
    for (Eigen::Index r = 0; r < ds.n_samples(); ++r) {
        for (Eigen::Index c = 0; c < ds.n_features(); ++c) out << format_double(ds.features(r, c)) << ',';
        const int id = ds.labels(r);
        if (id >= 0 && id < static_cast<int>(ds.label_names.size()) && !ds.label_names[id].empty())
            out << ds.label_names[id];
        else
            out << id;
        out << '\n';
    }
    if (!out) throw LoadError("failed writing '" + path + "'");
}

TabularDataset MinMaxScaler::apply(const TabularDataset& ds) const {
    if (ds.n_features() != col_min.size())
        throw std::invalid_argument("scaler: feature count mismatch");
    TabularDataset out = ds;
    for (Eigen::Index c = 0; c < ds.n_features(); ++c) {
        const double range = col_max(c) - col_min(c);
        if (range > 0.0)
            out.features.col(c) =
                ((ds.features.col(c).array() - col_min(c)) / range).cwiseMax(0.0).cwiseMin(1.0);
        else
            out.features.col(c).setZero();  // constant at fit time maps to 0
    }
    return out;
}

std::pair<TabularDataset, MinMaxScaler> minmax_scale(const TabularDataset& ds) {
    MinMaxScaler scaler;
    scaler.col_min = ds.features.colwise().minCoeff();
    scaler.col_max = ds.features.colwise().maxCoeff();
    return {scaler.apply(ds), scaler};
}

SplitPair stratified_split(const TabularDataset& ds, double train_fraction, RandomSource& rng) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw std::invalid_argument("stratified_split: train_fraction must be in (0, 1)");

    std::vector<std::vector<Eigen::Index>> by_class(2);
    for (Eigen::Index r = 0; r < ds.n_samples(); ++r) by_class.at(ds.labels(r)).push_back(r);
    for (std::size_t c = 0; c < by_class.size(); ++c)
        if (by_class[c].size() < 2)
            throw SplitError("class " + std::to_string(c) + " has " +
                             std::to_string(by_class[c].size()) + " samples, need at least 2");

    std::vector<Eigen::Index> train_rows;
    std::vector<Eigen::Index> test_rows;
    for (auto& rows : by_class) {
        // Fisher-Yates, then the first round(f*n) rows (both sides keep >= 1)
        for (std::size_t i = rows.size() - 1; i > 0; --i)
            std::swap(rows[i], rows[rng.next_index(i + 1)]);
        const auto n = static_cast<long>(rows.size());
        long n_train = std::lround(train_fraction * static_cast<double>(n));
        n_train = std::clamp(n_train, 1L, n - 1);
        for (long i = 0; i < n; ++i)
            (i < n_train ? train_rows : test_rows).push_back(rows[i]);
    }
    std::sort(train_rows.begin(), train_rows.end());
    std::sort(test_rows.begin(), test_rows.end());

    auto take = [&ds](const std::vector<Eigen::Index>& rows) {
        TabularDataset part;
        part.features = ds.features(rows, Eigen::all);
        part.labels.resize(static_cast<Eigen::Index>(rows.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) part.labels(static_cast<Eigen::Index>(i)) = ds.labels(rows[i]);
        part.feature_names = ds.feature_names;
        part.label_names = ds.label_names;
        return part;
    };
    SplitPair pair;
    pair.train = take(train_rows);
    pair.test = take(test_rows);
    pair.split_seed = rng.seed();
    return pair;
}

TabularDataset project(const TabularDataset& ds, const FeatureMask& mask) {
    if (mask.size() != ds.n_features())
        throw std::invalid_argument("project: mask length " + std::to_string(mask.size()) +
                                    " != feature count " + std::to_string(ds.n_features()));
    if (!mask.any()) throw ProjectionError("mask selects no features");

    std::vector<Eigen::Index> cols;
    cols.reserve(static_cast<std::size_t>(mask.count()));
    for (Eigen::Index c = 0; c < mask.size(); ++c)
        if (mask.bits(c)) cols.push_back(c);

    TabularDataset out;
    out.features = ds.features(Eigen::all, cols);
    out.labels = ds.labels;
    out.label_names = ds.label_names;
    for (Eigen::Index c : cols)
        if (c < static_cast<Eigen::Index>(ds.feature_names.size()))
            out.feature_names.push_back(ds.feature_names[c]);
    return out;
}

}  // namespace swarmselect
