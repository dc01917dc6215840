#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "ctrlchain/net.hpp"

namespace ctrlchain {

/// Continuous-time linear system x' = A x + B u with unit input columns:
/// B has one column per input node, holding a single 1 at that node's row.
class ControlSystem {
public:
    ControlSystem(Eigen::MatrixXd a, std::vector<int> inputs, double t_f = 1.0);

    int order() const { return static_cast<int>(a_.rows()); }
    const Eigen::MatrixXd& a() const { return a_; }
    const std::vector<int>& inputs() const { return inputs_; }
    double horizon() const { return t_f_; }
    Eigen::MatrixXd input_matrix() const;

private:
    Eigen::MatrixXd a_;
    std::vector<int> inputs_;
    double t_f_;
};

/// Builds the system from a network: a(j,i) = 1 for every link i->j.
ControlSystem control_system(const StructuralNetwork& g, const std::vector<int>& inputs,
                             double t_f = 1.0);

enum class ConditionFlag { well_conditioned, near_singular };

struct GramianResult {
    Eigen::MatrixXd w;  // symmetric positive semidefinite up to roundoff
    double trace = 0.0;
    double lambda_min = 0.0;
    std::optional<double> trace_inverse;
    ConditionFlag condition_flag = ConditionFlag::well_conditioned;
    int order() const { return static_cast<int>(w.rows()); }
};

/// Largest eigenvalue magnitude.
double spectral_radius(const Eigen::MatrixXd& m);

/// Scaling-and-squaring Pade exponential. Throws OverflowError when the
/// spectral radius exceeds the double exponent range (e^709).
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m);

/// Controllability Gramian over [0, t_f] by the block-exponential method:
/// exponentiate [[-A, BB^T], [0, A^T]] * t_f and read W off the blocks.
/// Systems with spectral_radius(A) * t_f > 350 are rejected as overflow.
GramianResult gramian(const ControlSystem& sys, bool with_trace_inverse = false);

/// Gauss-Legendre quadrature of the Gramian integral; an independent route
/// used to validate the block method. nodes >= 16.
Eigen::MatrixXd gramian_quadrature(const ControlSystem& sys, int nodes);

/// True iff lambda_min clears the relative floor tol * max(1, trace/N).
bool controllability_check(const GramianResult& res, double tol = 1e-12);

/// Gauss-Legendre nodes and weights on [0, length].
void gauss_legendre(int nodes, double length, std::vector<double>& points,
                    std::vector<double>& weights);

}  // namespace ctrlchain
