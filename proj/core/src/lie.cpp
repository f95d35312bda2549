#include "ratingsde/lie.hpp"

#include "ratingsde/errors.hpp"

#include <cmath>
#include <string>

namespace ratingsde {

void TransitionMatrix::validate(double tol) const
{
    const auto K = P.rows();
    if (K < 2 || P.cols() != K) {
        throw invariant_error("transition matrix must be square with K >= 2");
    }
    for (Eigen::Index i = 0; i < K; ++i) {
        double sum = P.row(i).sum();
        if (std::abs(sum - 1.0) > tol) {
            throw invariant_error("row " + std::to_string(i + 1) + " sums to " +
                                  std::to_string(sum) + ", not 1");
        }
        for (Eigen::Index j = 0; j < K; ++j) {
            double v = P(i, j);
            if (!(v >= -tol && v <= 1.0 + tol)) {
                throw invariant_error("entry (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ") = " + std::to_string(v) +
                                      " outside [0,1]");
            }
        }
    }
    for (Eigen::Index j = 0; j < K; ++j) {
        double want = (j == K - 1) ? 1.0 : 0.0;
        if (P(K - 1, j) != want) {
            throw invariant_error("last row is not the last unit vector (default not absorbing)");
        }
    }
}

namespace lie {

int basis_count(int K)
{
    return (K - 1) * (K - 1);
}

BasisIndex basis_index(int K, int from, int to)
{
    if (K < 2 || from < 1 || from > K - 1 || to < 1 || to > K || to == from) {
        throw argument_error("basis index (" + std::to_string(from) + "," + std::to_string(to) +
                             ") out of range for K=" + std::to_string(K));
    }
    int col = (to < from) ? to - 1 : to - 2; // skip the diagonal slot
    return BasisIndex{(from - 1) * (K - 1) + col + 1, from, to};
}

BasisIndex basis_from_flat(int K, int flat)
{
    if (K < 2 || flat < 1 || flat > basis_count(K)) {
        throw argument_error("flat basis index " + std::to_string(flat) +
                             " out of range for K=" + std::to_string(K));
    }
    int z = flat - 1;
    int from = z / (K - 1) + 1;
    int col = z % (K - 1);
    int to = (col + 1 < from) ? col + 1 : col + 2;
    return BasisIndex{flat, from, to};
}

GeneratorElement::GeneratorElement(int dim, Eigen::VectorXd c) : K(dim), coords(std::move(c))
{
    if (K < 2 || coords.size() != basis_count(K)) {
        throw argument_error("generator element needs (K-1)^2 coordinates");
    }
    if ((coords.array() < 0.0).any()) {
        throw argument_error("generator coordinates must be non-negative");
    }
}

GeneratorElement GeneratorElement::zero(int K)
{
    return GeneratorElement(K, Eigen::VectorXd::Zero(basis_count(K)));
}

double& GeneratorElement::coord(int from, int to)
{
    return coords[basis_index(K, from, to).flat - 1];
}

double GeneratorElement::coord(int from, int to) const
{
    return coords[basis_index(K, from, to).flat - 1];
}

Eigen::MatrixXd GeneratorElement::realize() const
{
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(K, K);
    for (int f = 1; f <= basis_count(K); ++f) {
        double c = coords[f - 1];
        if (c == 0.0) {
            continue;
        }
        auto b = basis_from_flat(K, f);
        L(b.from - 1, b.to - 1) += c;
        L(b.from - 1, b.from - 1) -= c;
    }
    return L;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& A)
{
    const auto K = A.rows();
    double norm = A.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    Eigen::MatrixXd B = A / std::exp2(squarings);

    Eigen::MatrixXd X = Eigen::MatrixXd::Identity(K, K) + B;
    Eigen::MatrixXd term = B;
    Eigen::MatrixXd next(K, K);
    for (int k = 2; k <= 40; ++k) {
        next.noalias() = term * B;
        term = next / double(k);
        X += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18 * X.cwiseAbs().maxCoeff()) {
            break;
        }
    }
    for (int s = 0; s < squarings; ++s) {
        next.noalias() = X * X;
        X = next;
    }
    return X;
}

TransitionMatrix exp(const GeneratorElement& g)
{
    Eigen::MatrixXd X = expm(g.realize());
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        bool clamped = false;
        for (Eigen::Index j = 0; j < X.cols(); ++j) {
            if (X(i, j) < 0.0) {
                if (X(i, j) < -1e-12) {
                    throw invariant_error("exp produced entry " + std::to_string(X(i, j)) +
                                          " below -1e-12; generator outside the cone?");
                }
                X(i, j) = 0.0;
                clamped = true;
            }
        }
        if (clamped) {
            X.row(i) /= X.row(i).sum();
        }
    }
    TransitionMatrix R{std::move(X)};
    R.validate();
    return R;
}

Eigen::MatrixXd ad(const Eigen::MatrixXd& L, const Eigen::MatrixXd& H)
{
    return L * H - H * L;
}

Eigen::MatrixXd dexp_inv(const Eigen::MatrixXd& L, const Eigen::MatrixXd& H, int order)
{
    if (order < 0) {
        throw argument_error("dexp_inv truncation order must be >= 0");
    }
    Eigen::MatrixXd acc = H;
    Eigen::MatrixXd term = H;
    double factorial = 1.0; // (k+1)! running value
    for (int k = 1; k <= order; ++k) {
        term = ad(-L, term);
        factorial *= double(k + 1);
        acc += term / factorial;
    }
    return acc;
}

} // namespace lie
} // namespace ratingsde
