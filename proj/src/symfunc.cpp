#include "hypcurv/symfunc.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace hypcurv {

namespace {

void check_order(int n, int j) {
    if (j < 1 || j > n)
        throw std::invalid_argument("symmetric function order out of range 1..n");
}

}  // namespace

Eigen::VectorXd sigma_all(const Eigen::VectorXd& lambda) {
    const int n = static_cast<int>(lambda.size());
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n + 1);
    e[0] = 1.0;
    for (int m = 0; m < n; ++m) {
        for (int j = std::min(m + 1, n); j >= 1; --j)
            e[j] += lambda[m] * e[j - 1];
    }
    return e;
}

double sigma(const Eigen::VectorXd& lambda, int j) {
    check_order(static_cast<int>(lambda.size()), j);
    return sigma_all(lambda)[j];
}

Eigen::VectorXd sigma_grad(const Eigen::VectorXd& lambda, int k) {
    const int n = static_cast<int>(lambda.size());
    check_order(n, k);
    Eigen::VectorXd g(n);
    Eigen::VectorXd reduced(n - 1);
    for (int i = 0; i < n; ++i) {
        int m = 0;
        for (int p = 0; p < n; ++p)
            if (p != i) reduced[m++] = lambda[p];
        g[i] = (k == 1) ? 1.0 : sigma_all(reduced)[k - 1];
    }
    return g;
}

bool in_garding_cone(const Eigen::VectorXd& lambda, int k) {
    return garding_cone_margin(lambda, k) > 0.0;
}

double garding_cone_margin(const Eigen::VectorXd& lambda, int k) {
    check_order(static_cast<int>(lambda.size()), k);
    const Eigen::VectorXd e = sigma_all(lambda);
    double margin = e[1];
    for (int j = 2; j <= k; ++j) margin = std::min(margin, e[j]);
    return margin;
}

CurvatureFunctionEval f_eval(const Eigen::VectorXd& lambda, int k) {
    const int n = static_cast<int>(lambda.size());
    check_order(n, k);
    CurvatureFunctionEval out;
    out.cone_ok = in_garding_cone(lambda, k);
    const double sk = sigma(lambda, k);
    if (sk <= 0.0) {
        // Outside (or on the boundary of) Gamma_k the power 1/k is not usable;
        // report finite placeholders and let the caller act on cone_ok.
        out.f = 0.0;
        out.grad = Eigen::VectorXd::Zero(n);
        return out;
    }
    out.f = std::pow(sk, 1.0 / k);
    out.grad = (out.f / (k * sk)) * sigma_grad(lambda, k);
    return out;
}

Eigen::MatrixXd f_matrix_derivative(const Eigen::MatrixXd& a, int k) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n) throw std::invalid_argument("curvature matrix must be square");
    if (!a.isApprox(a.transpose(), 1e-12))
        throw std::invalid_argument("curvature matrix must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (a + a.transpose()));
    const CurvatureFunctionEval fe = f_eval(es.eigenvalues(), k);
    return es.eigenvectors() * fe.grad.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace hypcurv
