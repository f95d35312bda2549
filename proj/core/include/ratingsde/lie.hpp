#pragma once

#include "ratingsde/transition_matrix.hpp"

#include <Eigen/Dense>

namespace ratingsde::lie {

/// One basis direction of the generator cone for K ratings. The basis matrix
/// is E_{from,to} - E_{from,from}: rate mass flows from `from` to `to`.
/// Ratings and the flat index are 1-based to match the From-To convention
/// used in parameter tables ((1,2) -> 1, (1,3) -> 2, ..., (K-1,K) -> (K-1)^2).
struct BasisIndex {
    int flat; // 1 .. (K-1)^2
    int from; // 1 .. K-1
    int to;   // 1 .. K, != from
};

/// Number of basis directions, (K-1)^2.
int basis_count(int K);

/// Flat index of direction (from, to). Throws argument_error when out of range.
BasisIndex basis_index(int K, int from, int to);

/// Inverse of basis_index. Throws argument_error when flat is out of range.
BasisIndex basis_from_flat(int K, int flat);

/// Element of the non-negative generator cone, stored by its coordinates over
/// the basis above. Realized matrices have non-negative off-diagonals, zero
/// row sums and a zero last row, so their exponentials are valid transition
/// matrices with absorbing default.
struct GeneratorElement {
    int K = 0;
    Eigen::VectorXd coords; // size (K-1)^2, non-negative

    GeneratorElement() = default;
    GeneratorElement(int dim, Eigen::VectorXd c);

    static GeneratorElement zero(int K);

    /// Coordinate for rating pair (from, to), 1-based.
    double& coord(int from, int to);
    double coord(int from, int to) const;

    /// Sum of coordinate basis matrices as a dense K x K matrix.
    Eigen::MatrixXd realize() const;
};

/// Matrix exponential by scaling and squaring with a truncated Taylor series
/// (the halved matrix is summed to machine precision, then squared back).
/// Works for any square matrix; used here on generator-cone elements.
Eigen::MatrixXd expm(const Eigen::MatrixXd& A);

/// exp of a cone element as a TransitionMatrix. Negative entries above
/// -1e-12 (roundoff) are clamped to zero and the affected rows renormalized;
/// anything more negative throws invariant_error.
TransitionMatrix exp(const GeneratorElement& g);

/// Truncated inverse-derivative series of exp at L applied to H:
///   sum_{k=0..order} ad_{-L}^k(H) / (k+1)!
/// with ad_L(H) = LH - HL iterated.
Eigen::MatrixXd dexp_inv(const Eigen::MatrixXd& L, const Eigen::MatrixXd& H, int order = 12);

/// Commutator LH - HL.
Eigen::MatrixXd ad(const Eigen::MatrixXd& L, const Eigen::MatrixXd& H);

} // namespace ratingsde::lie
