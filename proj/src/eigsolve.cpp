#include "szegoq/eigsolve.hpp"

#include <Eigen/Eigenvalues>

namespace szegoq {

EigenResult eigen_full(const OperatorMatrix& m) {
    int n = m.dim();
    if (n < 1) throw DomainError("empty matrix");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.mat, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw NoConvergence("eigensolver failed on a " + std::to_string(n) + "x" +
                            std::to_string(n) + " matrix");
    EigenResult out;
    out.values.resize(static_cast<std::size_t>(n));
    out.first_components.resize(static_cast<std::size_t>(n));
    out.residuals.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXcd v = solver.eigenvectors().col(j);
        v.normalize();
        Complex lambda = solver.eigenvalues()(j);
        out.values[static_cast<std::size_t>(j)] = lambda;
        out.first_components[static_cast<std::size_t>(j)] = v(0);
        out.residuals[static_cast<std::size_t>(j)] = (m.mat * v - lambda * v).norm();
    }
    return out;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs) {
    if (coeffs.size() < 2) throw DomainError("need degree >= 1");
    Complex lead = coeffs.back();
    if (lead == Complex(0.0, 0.0)) throw DomainError("leading coefficient is zero");
    int d = static_cast<int>(coeffs.size()) - 1;
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) c(i, i - 1) = Complex(1.0, 0.0);
    for (int i = 0; i < d; ++i)
        c(i, d - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NoConvergence("companion eigensolve failed");
    std::vector<Complex> roots(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return roots;
}

} // namespace szegoq
