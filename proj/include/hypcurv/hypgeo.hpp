#pragma once

#include <Eigen/Core>

namespace hypcurv {

/// Second-order data of a height function u at one point of the ideal
/// boundary: the graph (x, u(x)) lives in the half-space model, so u > 0.
struct GraphJet {
    double u = 1.0;
    Eigen::VectorXd du;
    Eigen::MatrixXd d2u;

    int dim() const { return static_cast<int>(du.size()); }
};

/// Pointwise geometric state of the vertical graph:
///   w        = sqrt(1 + |Du|^2)
///   nu       = upward Euclidean unit normal, nu_vert = nu^{n+1} = 1/w
///   gamma_up = delta_ik - u_i u_k / (w (1 + w)),   gamma_down = its inverse
///   a        = (1/w) (delta + u * gamma_up D2u gamma_up)   (hyperbolic shape matrix)
///   kappa    = eigenvalues of a, ascending (hyperbolic principal curvatures)
///   kappa_euc= eigenvalues of (1/w) gamma_up D2u gamma_up, ascending.
/// a and the Euclidean shape matrix share eigenvectors, so ascending order
/// pairs kappa with kappa_euc and kappa_i = u * kappa_euc_i + nu_vert holds
/// entrywise.
struct CurvatureFrame {
    double w = 1.0;
    Eigen::VectorXd nu;
    double nu_vert = 1.0;
    Eigen::MatrixXd gamma_up;
    Eigen::MatrixXd gamma_down;
    Eigen::MatrixXd a;
    Eigen::VectorXd kappa;
    Eigen::VectorXd kappa_euc;
};

/// Residuals of the local frame identities used as cross-checks:
///   gtilde_grad : |gtilde^{kl} u_k u_l - (1 - nu_vert^2)|
///   h_split     : max |h_ij - ( htilde_ij / u + nu_vert gtilde_ij / u^2 )|
///   gamma_inv   : max |gamma_up gamma_down - I|
///   gamma_sq    : max |gamma_down gamma_down - gtilde|
struct IdentityReport {
    double gtilde_grad = 0.0;
    double h_split = 0.0;
    double gamma_inv = 0.0;
    double gamma_sq = 0.0;

    double max_residual() const;
};

/// Full curvature frame from a jet. Throws std::domain_error for u <= 0 and
/// std::invalid_argument for a non-symmetric Hessian.
CurvatureFrame curvature_frame(const GraphJet& jet);

/// Strict local convexity test: margin = smallest eigenvalue of
/// delta_ij + u_i u_j + u u_ij, convex iff margin > 0.
std::pair<bool, double> is_strictly_convex(const GraphJet& jet);

IdentityReport check_identities(const GraphJet& jet, const CurvatureFrame& frame);

}  // namespace hypcurv
