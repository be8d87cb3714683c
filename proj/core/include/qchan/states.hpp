#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qchan/layout.hpp"
#include "qchan/matrix.hpp"
#include "qchan/rng.hpp"

namespace qchan {

class Rng;

// Two states are considered equal when their trace distance is at most this.
inline constexpr double kStateEqTol = 1e-9;
// Density-operator admission: trace and hermiticity within 1e-10, spectrum
// above -1e-10.
inline constexpr double kDensityTol = 1e-10;

// Unit vector in a finite-dimensional Hilbert space. Normalization is part
// of the type: construction rejects vectors with ||psi| - 1| > 1e-10.
class StateVector {
public:
    explicit StateVector(std::vector<Complex> amplitudes);

    // Rescales the given amplitudes to unit norm.
    static StateVector normalized(std::vector<Complex> amplitudes);
    static StateVector basis(int dim, int index);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    const Complex& operator[](int i) const { return amplitudes_[static_cast<std::size_t>(i)]; }

    double norm() const;
    Complex inner(const StateVector& other) const;

private:
    std::vector<Complex> amplitudes_;
};

// Hermitian, positive-semidefinite, unit-trace operator. All three
// invariants are checked at construction; every code path that produces a
// DensityOperator goes through this check.
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix mat);

    static DensityOperator maximally_mixed(int dim);

    int dim() const { return mat_.rows(); }
    const ComplexMatrix& mat() const { return mat_; }

private:
    ComplexMatrix mat_;
};

// Rank-1 projector |psi><psi|.
DensityOperator pure(const StateVector& psi);

enum class BellKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

// The four maximally entangled two-qubit states, standard amplitude
// convention: Psi+- = (|01> +- |10>)/sqrt2, Phi+- = (|00> +- |11>)/sqrt2.
StateVector bell(BellKind kind);

// The six single-qubit Pauli eigenstates: |0>, |1>, |+>, |->, |+i>, |-i>.
std::array<StateVector, 6> pauli_eigenstates();

// Half the sum of absolute eigenvalues of rho - sigma. A metric on states,
// in [0, 1], zero exactly when the operators coincide.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

// Haar-uniform pure state: complex standard-normal amplitudes, normalized.
StateVector random_pure(int dim, Rng& rng);
StateVector random_pure(int dim, std::uint64_t seed);

// Mixture of `dim` Haar-random pure states with uniform random weights.
DensityOperator random_density(int dim, Rng& rng);

// Validated marginal of a state on the kept subsystems.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep,
                              const SystemLayout& layout);

}  // namespace qchan
