#pragma once

#include <Eigen/Core>

namespace hypcurv {

/// Evaluation of the curvature function f = sigma_k^{1/k} at a tuple of
/// principal curvatures. `cone_ok` reports membership in the Garding cone
/// Gamma_k; when it is false the numeric fields are finite but carry no
/// geometric meaning (callers are expected to back off instead of throwing,
/// since a continuation path may probe the cone boundary).
struct CurvatureFunctionEval {
    double f = 0.0;
    Eigen::VectorXd grad;
    bool cone_ok = false;
};

/// j-th elementary symmetric function of lambda, 1 <= j <= n.
/// Computed by the Pascal-style recurrence
///   e_j(l_1..l_m) = e_j(l_1..l_{m-1}) + l_m e_{j-1}(l_1..l_{m-1})
/// which involves no cancellation-prone division.
double sigma(const Eigen::VectorXd& lambda, int j);

/// All elementary symmetric functions e_0..e_n in one sweep.
Eigen::VectorXd sigma_all(const Eigen::VectorXd& lambda);

/// Gradient of sigma_k: d sigma_k / d lambda_i = sigma_{k-1}(lambda with i removed).
Eigen::VectorXd sigma_grad(const Eigen::VectorXd& lambda, int k);

/// Gamma_k membership: sigma_j(lambda) > 0 for all j = 1..k.
bool in_garding_cone(const Eigen::VectorXd& lambda, int k);

/// Smallest of sigma_1..sigma_k; positive iff lambda is in Gamma_k.
double garding_cone_margin(const Eigen::VectorXd& lambda, int k);

/// f = sigma_k^{1/k} with first derivatives f_i = (1/k) sigma_k^{1/k-1} d sigma_k/d lambda_i.
/// Never throws on cone violations; see CurvatureFunctionEval.
CurvatureFunctionEval f_eval(const Eigen::VectorXd& lambda, int k);

/// Derivative matrix F^{ij} = dF/da_ij of F(A) = f(lambda(A)) for symmetric A,
/// via the spectral decomposition A = Q diag(lambda) Q^T:
///   F^{ij} = sum_p f_p(lambda) Q_ip Q_jp.
/// Equal f_p within a repeated eigenvalue group makes the sum independent of
/// the eigenbasis choice, so no divided-difference special case is needed for
/// this first derivative.
Eigen::MatrixXd f_matrix_derivative(const Eigen::MatrixXd& a, int k);

}  // namespace hypcurv
