#pragma once

#include "ratingsde/dates.hpp"
#include "ratingsde/transition_matrix.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ratingsde {

/// Ordered rating labels, best first; the last label is the absorbing
/// default state. Ratings are referred to by 1-based index throughout.
class RatingScale {
public:
    explicit RatingScale(std::vector<std::string> labels);

    int K() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int rating) const { return labels_.at(rating - 1); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// 1-based index of a label, or 0 if unknown.
    int index_of(const std::string& label) const;

    bool operator==(const RatingScale&) const = default;

private:
    std::vector<std::string> labels_;
};

struct RatingEvent {
    std::string entity_id;
    Date date;
    int rating = 0; // 1..K
};

/// Date-sorted events of one entity. The entity is considered under
/// observation from its first event to its last; a rating holds from its
/// event date (inclusive) until the next event.
struct EntityHistory {
    std::string id;
    std::vector<Date> dates;
    std::vector<int> ratings;

    Date first_date() const { return dates.front(); }
    Date last_date() const { return dates.back(); }
};

struct RatingHistory {
    RatingScale scale;
    std::vector<EntityHistory> entities; // in first-appearance order

    std::size_t event_count() const;
};

/// Time-indexed collections of transition matrices: `samples[s][t]` is the
/// matrix of sample s at `times[t]` (in years).
struct MatrixSeries {
    RatingScale scale;
    std::vector<double> times;
    std::vector<std::vector<TransitionMatrix>> samples;

    int K() const { return scale.K(); }
    std::size_t sample_count() const { return samples.size(); }

    /// Index of an observation time, matched within 1e-9. Throws
    /// argument_error when absent.
    std::size_t time_index(double t) const;

    void validate() const;
};

/// Parse rating events from CSV with header `entity_id,date,rating`.
/// Events are grouped per entity (file order) and must be strictly
/// date-increasing per entity; once an entity reaches the default rating it
/// may only re-confirm it. Errors carry 1-based line numbers.
RatingHistory parse_history(std::istream& source, const RatingScale& scale);
RatingHistory load_history(const std::string& path, const RatingScale& scale);

/// Parse the matrix-series JSON interchange format:
///   {"labels": [...], "times": [...], "samples": [[K x K, ...], ...]}.
/// Rows must sum to 1 within 0.01 and entries must not fall below -1e-9;
/// rows are then renormalized to sum exactly to 1 (rows already within
/// 1e-12 are left untouched so that serialize/parse is a fixpoint).
MatrixSeries parse_matrix_series(std::istream& source);
MatrixSeries load_matrix_series(const std::string& path);

void serialize_matrix_series(const MatrixSeries& series, std::ostream& out);
std::string serialize_matrix_series(const MatrixSeries& series);
void save_matrix_series(const MatrixSeries& series, const std::string& path);

} // namespace ratingsde
