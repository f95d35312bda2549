#pragma once

#include "ratingsde/rating_data.hpp"

#include <Eigen/Dense>

#include <vector>

namespace ratingsde::aj {

/// Estimated generator increment at one jump date: entry (i, j) is the
/// number of i -> j transitions divided by the entities rated i just before
/// the date, the diagonal balances the row to zero, and the last row is zero
/// (absorbing default). Rows whose risk set is empty are all zero.
struct JumpIncrement {
    Date time;
    Eigen::MatrixXd delta_A;
};

/// One estimator increment per distinct event date in (start, end].
/// An entity is in the risk set of a date when it has an earlier event
/// (its rating is known just before the date) and a later-or-equal one
/// (it has not yet left the data).
std::vector<JumpIncrement> count_transitions(const RatingHistory& history, const Date& start,
                                             const Date& end);

/// Product estimator over (start, end]: the chronological product of
/// (I + delta_A) over all increments. No jumps yields the identity.
TransitionMatrix estimate(const RatingHistory& history, const Date& start, const Date& end);

/// Pool of same-span window estimates. `series` has the single observation
/// time span_months / 12 and one sample per window.
struct SpanPool {
    int span_months = 0;
    std::vector<std::pair<Date, Date>> windows;
    MatrixSeries series;
};

/// Tile the data period into windows of each requested span (in months) and
/// estimate one matrix per window. With `disjoint` the windows of a span are
/// consecutive and non-overlapping; otherwise they roll forward one month at
/// a time. The data period ends the day after the last event. Throws
/// argument_error when a span does not fit at all.
std::vector<SpanPool> estimate_grid(const RatingHistory& history, const Date& start,
                                    const std::vector<int>& span_months, bool disjoint = true);

} // namespace ratingsde::aj
