#pragma once

#include <Eigen/Dense>

namespace ratingsde {

/// Row-stochastic K x K matrix with an absorbing worst state: entries in
/// [0, 1], each row summing to one, and the last row equal to the last unit
/// vector. Entry (i, j) is the probability of migrating from rating i+1 to
/// rating j+1 over the matrix's time span.
struct TransitionMatrix {
    Eigen::MatrixXd P;

    TransitionMatrix() = default;
    explicit TransitionMatrix(Eigen::MatrixXd m) : P(std::move(m)) {}

    int dim() const { return static_cast<int>(P.rows()); }

    static TransitionMatrix identity(int K)
    {
        return TransitionMatrix{Eigen::MatrixXd::Identity(K, K)};
    }

    /// Throws invariant_error if the row-sum, range or absorbing-row
    /// invariants fail beyond `tol`.
    void validate(double tol = 1e-9) const;

    bool operator==(const TransitionMatrix& other) const { return P == other.P; }
};

} // namespace ratingsde
