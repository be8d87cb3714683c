#include "qchan/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qchan {

namespace {
constexpr double kNormTol = 1e-10;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw std::invalid_argument("StateVector: empty amplitude list");
    for (const Complex& z : amplitudes_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("StateVector: non-finite amplitude");
        }
    }
    const double n = norm();
    if (std::abs(n - 1.0) > kNormTol) {
        throw std::invalid_argument("StateVector: not normalized (norm " + std::to_string(n) + ")");
    }
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
    double s = 0.0;
    for (const Complex& z : amplitudes) s += std::norm(z);
    if (s <= 0.0) throw std::invalid_argument("StateVector::normalized: zero vector");
    const double inv = 1.0 / std::sqrt(s);
    for (Complex& z : amplitudes) z *= inv;
    return StateVector(std::move(amplitudes));
}

StateVector StateVector::basis(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim) {
        throw std::invalid_argument("StateVector::basis: index out of range");
    }
    std::vector<Complex> amps(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
    amps[static_cast<std::size_t>(index)] = 1.0;
    return StateVector(std::move(amps));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const Complex& z : amplitudes_) s += std::norm(z);
    return std::sqrt(s);
}

Complex StateVector::inner(const StateVector& other) const {
    if (dim() != other.dim()) throw std::invalid_argument("inner: dimension mismatch");
    Complex acc{0.0, 0.0};
    for (int i = 0; i < dim(); ++i) acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    return acc;
}

DensityOperator::DensityOperator(ComplexMatrix mat) : mat_(std::move(mat)) {
    if (!mat_.is_square()) throw std::invalid_argument("DensityOperator: matrix must be square");
    const double herm = mat_.hermiticity_defect();
    if (herm > kDensityTol) {
        throw std::invalid_argument("DensityOperator: not Hermitian (defect " + std::to_string(herm) +
                                    ")");
    }
    const Complex tr = mat_.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > kDensityTol) {
        throw std::invalid_argument("DensityOperator: trace " + std::to_string(tr.real()) +
                                    " is not 1");
    }
    const std::vector<double> eigs = hermitian_eigenvalues(mat_);
    if (eigs.front() < -kDensityTol) {
        throw std::invalid_argument("DensityOperator: negative eigenvalue " +
                                    std::to_string(eigs.front()));
    }
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
    if (dim < 1) throw std::invalid_argument("maximally_mixed: dimension must be positive");
    return DensityOperator(Complex{1.0 / dim, 0.0} * ComplexMatrix::identity(dim));
}

DensityOperator pure(const StateVector& psi) {
    const int d = psi.dim();
    ComplexMatrix m(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            m(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return DensityOperator(std::move(m));
}

StateVector bell(BellKind kind) {
    std::vector<Complex> amps(4, Complex{0.0, 0.0});
    switch (kind) {
        case BellKind::PsiPlus:
            amps[1] = kInvSqrt2;
            amps[2] = kInvSqrt2;
            break;
        case BellKind::PsiMinus:
            amps[1] = kInvSqrt2;
            amps[2] = -kInvSqrt2;
            break;
        case BellKind::PhiPlus:
            amps[0] = kInvSqrt2;
            amps[3] = kInvSqrt2;
            break;
        case BellKind::PhiMinus:
            amps[0] = kInvSqrt2;
            amps[3] = -kInvSqrt2;
            break;
    }
    return StateVector(std::move(amps));
}

std::array<StateVector, 6> pauli_eigenstates() {
    return {
        StateVector({1.0, 0.0}),
        StateVector({0.0, 1.0}),
        StateVector({kInvSqrt2, kInvSqrt2}),
        StateVector({kInvSqrt2, -kInvSqrt2}),
        StateVector({kInvSqrt2, Complex{0.0, kInvSqrt2}}),
        StateVector({kInvSqrt2, Complex{0.0, -kInvSqrt2}}),
    };
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    const std::vector<double> eigs = hermitian_eigenvalues(rho - sigma);
    double sum = 0.0;
    for (double v : eigs) sum += std::abs(v);
    return 0.5 * sum;
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
    return trace_distance(rho.mat(), sigma.mat());
}

StateVector random_pure(int dim, Rng& rng) {
    if (dim < 1) throw std::invalid_argument("random_pure: dimension must be positive");
    std::vector<Complex> amps(static_cast<std::size_t>(dim));
    for (Complex& z : amps) {
        double re, im;
        rng.gaussian_pair(re, im);
        z = Complex{re, im};
    }
    return StateVector::normalized(std::move(amps));
}

StateVector random_pure(int dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_pure(dim, rng);
}

DensityOperator random_density(int dim, Rng& rng) {
    std::vector<double> weights(static_cast<std::size_t>(dim));
    double total = 0.0;
    for (double& w : weights) {
        w = rng.uniform() + 1e-12;
        total += w;
    }
    ComplexMatrix m(dim, dim);
    for (int k = 0; k < dim; ++k) {
        const StateVector psi = random_pure(dim, rng);
        const double w = weights[static_cast<std::size_t>(k)] / total;
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                m(r, c) += w * psi[r] * std::conj(psi[c]);
            }
        }
    }
    return DensityOperator(std::move(m));
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep,
                              const SystemLayout& layout) {
    return DensityOperator(partial_trace(rho.mat(), keep, layout));
}

}  // namespace qchan
