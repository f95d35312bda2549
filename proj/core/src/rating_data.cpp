#include "ratingsde/rating_data.hpp"

#include "ratingsde/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ratingsde {

using nlohmann::json;

RatingScale::RatingScale(std::vector<std::string> labels) : labels_(std::move(labels))
{
    if (labels_.size() < 2) {
        throw argument_error("a rating scale needs at least two labels");
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty() || !seen.insert(l).second) {
            throw argument_error("rating labels must be unique and non-empty");
        }
    }
}

int RatingScale::index_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? 0 : static_cast<int>(it - labels_.begin()) + 1;
}

std::size_t RatingHistory::event_count() const
{
    std::size_t n = 0;
    for (const auto& e : entities) {
        n += e.dates.size();
    }
    return n;
}

std::size_t MatrixSeries::time_index(double t) const
{
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (std::abs(times[i] - t) <= 1e-9) {
            return i;
        }
    }
    throw argument_error("time " + std::to_string(t) + " is not an observation time of the series");
}

void MatrixSeries::validate() const
{
    double prev = 0.0;
    for (double t : times) {
        if (!(t > prev)) {
            throw invariant_error("series times must be positive and strictly increasing");
        }
        prev = t;
    }
    for (const auto& sample : samples) {
        if (sample.size() != times.size()) {
            throw invariant_error("every sample needs one matrix per observation time");
        }
        for (const auto& m : sample) {
            if (m.dim() != K()) {
                throw invariant_error("matrix dimension does not match the rating scale");
            }
            m.validate();
        }
    }
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line)
{
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

[[noreturn]] void row_error(std::size_t line_no, const std::string& what)
{
    throw io_error("history CSV line " + std::to_string(line_no) + ": " + what);
}

} // namespace

RatingHistory parse_history(std::istream& source, const RatingScale& scale)
{
    std::string line;
    if (!std::getline(source, line)) {
        throw io_error("history CSV is empty, expected header entity_id,date,rating");
    }
    if (!line.empty() && line.substr(0, 3) == "\xEF\xBB\xBF") {
        line = line.substr(3);
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != "entity_id,date,rating") {
        throw io_error("history CSV must start with header entity_id,date,rating");
    }

    RatingHistory history{scale, {}};
    std::unordered_map<std::string, std::size_t> slot;
    const int K = scale.K();

    std::size_t line_no = 1;
    while (std::getline(source, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        auto fields = split_csv_row(line);
        if (fields.size() != 3 || fields[0].empty()) {
            row_error(line_no, "expected entity_id,date,rating");
        }
        Date date;
        try {
            date = Date::from_string(fields[1]);
        } catch (const io_error& e) {
            row_error(line_no, e.what());
        }
        int rating = scale.index_of(fields[2]);
        if (rating == 0) {
            row_error(line_no, "unknown rating label '" + fields[2] + "'");
        }

        auto [it, inserted] = slot.try_emplace(fields[0], history.entities.size());
        if (inserted) {
            history.entities.push_back(EntityHistory{fields[0], {}, {}});
        }
        EntityHistory& entity = history.entities[it->second];
        if (!entity.dates.empty()) {
            if (!(entity.dates.back() < date)) {
                row_error(line_no, "dates for entity '" + fields[0] + "' must strictly increase");
            }
            if (entity.ratings.back() == K && rating != K) {
                row_error(line_no, "entity '" + fields[0] + "' has a rating after default");
            }
        }
        entity.dates.push_back(date);
        entity.ratings.push_back(rating);
    }
    return history;
}

RatingHistory load_history(const std::string& path, const RatingScale& scale)
{
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open history file '" + path + "'");
    }
    return parse_history(in, scale);
}

namespace {

constexpr double kRowSumTolerance = 0.01;
constexpr double kNegativeEntryFloor = -1e-9;
// Rows this close to stochastic are left untouched so parse(serialize(x)) == x.
constexpr double kRenormalizeThreshold = 1e-12;

TransitionMatrix matrix_from_json(const json& rows, int K, const std::string& where)
{
    if (!rows.is_array() || static_cast<int>(rows.size()) != K) {
        throw io_error(where + ": expected " + std::to_string(K) + " rows");
    }
    Eigen::MatrixXd P(K, K);
    for (int i = 0; i < K; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != K) {
            throw io_error(where + ": row " + std::to_string(i + 1) + " has wrong length");
        }
        for (int j = 0; j < K; ++j) {
            if (!row[j].is_number()) {
                throw io_error(where + ": non-numeric entry");
            }
            P(i, j) = row[j].get<double>();
        }
    }

    for (int i = 0; i < K; ++i) {
        double sum = P.row(i).sum();
        if (std::abs(sum - 1.0) > kRowSumTolerance) {
            throw io_error(where + ": row " + std::to_string(i + 1) + " sums to " +
                           std::to_string(sum) + ", outside 1 +- " +
                           std::to_string(kRowSumTolerance));
        }
        for (int j = 0; j < K; ++j) {
            if (P(i, j) < kNegativeEntryFloor) {
                throw io_error(where + ": negative entry " + std::to_string(P(i, j)) + " at (" +
                               std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
            if (P(i, j) < 0.0) {
                P(i, j) = 0.0;
            }
        }
    }

    // Absorbing last row: tolerate generator noise up to the row-sum
    // tolerance, then snap exactly.
    for (int j = 0; j + 1 < K; ++j) {
        if (P(K - 1, j) > kRowSumTolerance) {
            throw io_error(where + ": last row must be absorbing (entry " + std::to_string(j + 1) +
                           " is " + std::to_string(P(K - 1, j)) + ")");
        }
    }
    P.row(K - 1).setZero();
    P(K - 1, K - 1) = 1.0;

    for (int i = 0; i + 1 < K; ++i) {
        double sum = P.row(i).sum();
        if (std::abs(sum - 1.0) > kRenormalizeThreshold) {
            P.row(i) /= sum;
        }
    }
    return TransitionMatrix{std::move(P)};
}

} // namespace

MatrixSeries parse_matrix_series(std::istream& source)
{
    json doc;
    try {
        doc = json::parse(source);
    } catch (const json::exception& e) {
        throw io_error(std::string("matrix series JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("labels") || !doc.contains("times") ||
        !doc.contains("samples")) {
        throw io_error("matrix series JSON needs keys labels, times, samples");
    }

    std::vector<std::string> labels;
    for (const auto& l : doc["labels"]) {
        labels.push_back(l.get<std::string>());
    }
    std::vector<double> times;
    for (const auto& t : doc["times"]) {
        times.push_back(t.get<double>());
    }

    MatrixSeries series{RatingScale{labels}, times, {}};
    const int K = series.K();
    std::size_t s = 0;
    for (const auto& sample : doc["samples"]) {
        if (!sample.is_array() || sample.size() != times.size()) {
            throw io_error("sample " + std::to_string(s + 1) + " needs one matrix per time");
        }
        std::vector<TransitionMatrix> mats;
        mats.reserve(times.size());
        for (std::size_t t = 0; t < sample.size(); ++t) {
            mats.push_back(matrix_from_json(sample[t], K,
                                            "sample " + std::to_string(s + 1) + " time " +
                                                std::to_string(t + 1)));
        }
        series.samples.push_back(std::move(mats));
        ++s;
    }

    try {
        series.validate();
    } catch (const invariant_error& e) {
        throw io_error(std::string("matrix series JSON: ") + e.what());
    }
    return series;
}

MatrixSeries load_matrix_series(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open matrix series file '" + path + "'");
    }
    return parse_matrix_series(in);
}

void serialize_matrix_series(const MatrixSeries& series, std::ostream& out)
{
    json doc;
    doc["labels"] = series.scale.labels();
    doc["times"] = series.times;
    json samples = json::array();
    for (const auto& sample : series.samples) {
        json per_time = json::array();
        for (const auto& m : sample) {
            json rows = json::array();
            for (int i = 0; i < m.dim(); ++i) {
                json row = json::array();
                for (int j = 0; j < m.dim(); ++j) {
                    row.push_back(m.P(i, j));
                }
                rows.push_back(std::move(row));
            }
            per_time.push_back(std::move(rows));
        }
        samples.push_back(std::move(per_time));
    }
    doc["samples"] = std::move(samples);
    out << doc.dump() << '\n';
}

std::string serialize_matrix_series(const MatrixSeries& series)
{
    std::ostringstream out;
    serialize_matrix_series(series, out);
    return out.str();
}

void save_matrix_series(const MatrixSeries& series, const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write matrix series file '" + path + "'");
    }
    serialize_matrix_series(series, out);
}

} // namespace ratingsde
