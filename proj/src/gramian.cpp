#include "ctrlchain/gramian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "ctrlchain/errors.hpp"

namespace ctrlchain {

namespace {

// Spectral radius * t_f beyond this would push exp past the double range.
constexpr double kExpArgLimit = 709.0;
// Gramian growth goes like e^{2 rho t_f}; keep headroom below e^709.
constexpr double kGramianRhoLimit = 350.0;
constexpr double kNearSingularRatio = 1e-13;

bool is_symmetric(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
            if (m(i, j) != m(j, i)) return false;
        }
    }
    return true;
}

}  // namespace

ControlSystem::ControlSystem(Eigen::MatrixXd a, std::vector<int> inputs, double t_f)
    : a_(std::move(a)), inputs_(std::move(inputs)), t_f_(t_f) {
    if (a_.rows() != a_.cols()) {
        throw NonSquareError(static_cast<int>(a_.rows()), static_cast<int>(a_.cols()));
    }
    if (!a_.allFinite()) throw InvalidArgumentError("system matrix has non-finite entries");
    if (inputs_.empty()) throw InvalidArgumentError("input set must be nonempty");
    std::sort(inputs_.begin(), inputs_.end());
    if (std::adjacent_find(inputs_.begin(), inputs_.end()) != inputs_.end()) {
        throw InvalidArgumentError("input set has duplicate nodes");
    }
    if (inputs_.front() < 0 || inputs_.back() >= order()) {
        throw InvalidArgumentError("input node out of range");
    }
    if (!(t_f_ > 0.0)) throw InvalidArgumentError("horizon t_f must be positive");
}

Eigen::MatrixXd ControlSystem::input_matrix() const {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(order(), static_cast<int>(inputs_.size()));
    for (size_t k = 0; k < inputs_.size(); ++k) b(inputs_[k], static_cast<int>(k)) = 1.0;
    return b;
}

ControlSystem control_system(const StructuralNetwork& g, const std::vector<int>& inputs,
                             double t_f) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.size(), g.size());
    for (const auto& [from, to] : g.links()) a(to, from) = 1.0;
    return ControlSystem(std::move(a), inputs, t_f);
}

double spectral_radius(const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return 0.0;
    if (is_symmetric(m)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

namespace {

Eigen::MatrixXd exp_unchecked(const Eigen::MatrixXd& m) {
    return m.exp();
}

}  // namespace

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) {
        throw NonSquareError(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    }
    if (!m.allFinite()) throw InvalidArgumentError("matrix has non-finite entries");
    const double rho = spectral_radius(m);
    if (rho > kExpArgLimit) throw OverflowError(rho);
    return exp_unchecked(m);
}

GramianResult gramian(const ControlSystem& sys, bool with_trace_inverse) {
    const int n = sys.order();
    const double rho = spectral_radius(sys.a());
    if (rho * sys.horizon() > kGramianRhoLimit) {
        throw OverflowError("gramian would overflow double range: spectral radius " +
                                std::to_string(rho) + " times horizon " +
                                std::to_string(sys.horizon()) + " exceeds " +
                                std::to_string(kGramianRhoLimit),
                            rho);
    }

    const Eigen::MatrixXd b = sys.input_matrix();
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    block.topLeftCorner(n, n) = -sys.a();
    block.topRightCorner(n, n) = b * b.transpose();
    block.bottomRightCorner(n, n) = sys.a().transpose();
    block *= sys.horizon();

    const Eigen::MatrixXd e = exp_unchecked(block);
    const Eigen::MatrixXd f2 = e.bottomRightCorner(n, n);
    const Eigen::MatrixXd g1 = e.topRightCorner(n, n);
    Eigen::MatrixXd w = f2.transpose() * g1;
    w = ((w + w.transpose()) / 2.0).eval();

    GramianResult result;
    result.trace = w.trace();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd eigs = es.eigenvalues();
    result.lambda_min = eigs(0);
    result.condition_flag = (result.trace <= 0.0 ||
                             result.lambda_min / result.trace < kNearSingularRatio)
                                ? ConditionFlag::near_singular
                                : ConditionFlag::well_conditioned;
    if (with_trace_inverse) {
        if (result.lambda_min > 0.0) {
            result.trace_inverse = eigs.cwiseInverse().sum();
        }
        // singular W has no finite trace inverse; the flag tells the caller why
    }
    result.w = std::move(w);
    return result;
}

void gauss_legendre(int nodes, double length, std::vector<double>& points,
                    std::vector<double>& weights) {
    points.resize(nodes);
    weights.resize(nodes);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < nodes; ++i) {
        // Newton iteration on the Legendre polynomial, Chebyshev initial guess
        double x = std::cos(pi * (i + 0.75) / (nodes + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= nodes; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = nodes * (x * p1 - p0) / (x * x - 1.0);
            double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        points[i] = (1.0 - x) * length / 2.0;
        weights[i] = length / ((1.0 - x * x) * dp * dp);
    }
    std::reverse(points.begin(), points.end());
    std::reverse(weights.begin(), weights.end());
}

Eigen::MatrixXd gramian_quadrature(const ControlSystem& sys, int nodes) {
    if (nodes < 16) throw InvalidArgumentError("quadrature needs at least 16 nodes");
    const int n = sys.order();
    const Eigen::MatrixXd b = sys.input_matrix();
    std::vector<double> points, weights;
    gauss_legendre(nodes, sys.horizon(), points, weights);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < nodes; ++k) {
        const Eigen::MatrixXd eb = matrix_exponential(sys.a() * points[k]) * b;
        w.noalias() += weights[k] * (eb * eb.transpose());
    }
    return w;
}

bool controllability_check(const GramianResult& res, double tol) {
    if (tol < 0.0) throw InvalidArgumentError("tolerance must be nonnegative");
    const int n = res.order();
    const double floor = tol * std::max(1.0, res.trace / std::max(1, n));
    return res.lambda_min > floor;
}

}  // namespace ctrlchain
