#include "ratingsde/aalen_johansen.hpp"

#include "ratingsde/errors.hpp"

#include <algorithm>
#include <string>

namespace ratingsde::aj {

std::vector<JumpIncrement> count_transitions(const RatingHistory& history, const Date& start,
                                             const Date& end)
{
    if (!(start < end)) {
        throw argument_error("window start must precede window end");
    }
    const int K = history.scale.K();

    std::vector<Date> jump_dates;
    for (const auto& entity : history.entities) {
        for (const Date& d : entity.dates) {
            if (start < d && d <= end) {
                jump_dates.push_back(d);
            }
        }
    }
    std::sort(jump_dates.begin(), jump_dates.end());
    jump_dates.erase(std::unique(jump_dates.begin(), jump_dates.end()), jump_dates.end());

    // Per-entity cursor: index of the next event with date >= current jump
    // date, and the rating held just before it.
    struct Cursor {
        std::size_t next = 0;
        int rating = 0; // 0 while the entity has no event strictly before T
    };
    std::vector<Cursor> cursors(history.entities.size());

    std::vector<JumpIncrement> increments;
    increments.reserve(jump_dates.size());

    std::vector<long> risk(K + 1);
    Eigen::MatrixXi jumps(K + 1, K + 1);

    for (const Date& T : jump_dates) {
        std::fill(risk.begin(), risk.end(), 0);
        jumps.setZero();

        for (std::size_t e = 0; e < history.entities.size(); ++e) {
            const auto& entity = history.entities[e];
            Cursor& cur = cursors[e];
            while (cur.next < entity.dates.size() && entity.dates[cur.next] < T) {
                cur.rating = entity.ratings[cur.next];
                ++cur.next;
            }
            if (cur.rating == 0 || entity.last_date() < T) {
                continue; // not yet observed, or already left the data
            }
            ++risk[cur.rating];
            if (cur.next < entity.dates.size() && entity.dates[cur.next] == T) {
                int to = entity.ratings[cur.next];
                if (to != cur.rating) {
                    ++jumps(cur.rating, to);
                }
            }
        }

        Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(K, K);
        for (int i = 1; i < K; ++i) {
            if (risk[i] == 0) {
                continue;
            }
            long away = 0;
            for (int j = 1; j <= K; ++j) {
                if (j != i) {
                    away += jumps(i, j);
                }
            }
            if (away > risk[i]) {
                throw invariant_error("more transitions out of rating " + std::to_string(i) +
                                      " than entities at risk on " + T.to_string());
            }
            for (int j = 1; j <= K; ++j) {
                if (j != i) {
                    delta(i - 1, j - 1) = double(jumps(i, j)) / double(risk[i]);
                }
            }
            delta(i - 1, i - 1) = -double(away) / double(risk[i]);
        }
        increments.push_back(JumpIncrement{T, std::move(delta)});
    }
    return increments;
}

TransitionMatrix estimate(const RatingHistory& history, const Date& start, const Date& end)
{
    const int K = history.scale.K();
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(K, K);
    Eigen::MatrixXd factor(K, K);
    for (const auto& inc : count_transitions(history, start, end)) {
        factor = Eigen::MatrixXd::Identity(K, K) + inc.delta_A;
        P = P * factor;
    }
    TransitionMatrix R{std::move(P)};
    R.validate(1e-12);
    return R;
}

std::vector<SpanPool> estimate_grid(const RatingHistory& history, const Date& start,
                                    const std::vector<int>& span_months, bool disjoint)
{
    if (span_months.empty()) {
        throw argument_error("need at least one span");
    }
    Date last_event = start;
    bool any_event = false;
    for (const auto& entity : history.entities) {
        if (!entity.dates.empty()) {
            last_event = std::max(last_event, entity.last_date());
            any_event = true;
        }
    }
    if (!any_event) {
        throw argument_error("history has no events");
    }
    const Date data_end = last_event.next_day();

    std::vector<SpanPool> pools;
    pools.reserve(span_months.size());
    for (int span : span_months) {
        if (span < 1) {
            throw argument_error("window span must be at least one month");
        }
        SpanPool pool;
        pool.span_months = span;
        pool.series.scale = history.scale;
        pool.series.times = {double(span) / 12.0};

        const int stride = disjoint ? span : 1;
        for (int k = 0;; ++k) {
            Date ws = start.add_months(k * stride);
            Date we = ws.add_months(span);
            if (data_end < we) {
                break;
            }
            pool.windows.emplace_back(ws, we);
            pool.series.samples.push_back({estimate(history, ws, we)});
        }
        if (pool.windows.empty()) {
            throw argument_error("data period is shorter than one window of " +
                                 std::to_string(span) + " months");
        }
        pools.push_back(std::move(pool));
    }
    return pools;
}

} // namespace ratingsde::aj
