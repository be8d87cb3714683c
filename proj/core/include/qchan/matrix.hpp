#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace qchan {

using Complex = std::complex<double>;

// Max entrywise deviation |a - a^dagger| accepted as Hermitian.
inline constexpr double kHermitianTol = 1e-10;
// Jacobi sweep terminates once the off-diagonal Frobenius norm drops below this.
inline constexpr double kJacobiOffdiagTol = 1e-12;

// Dense row-major complex matrix. Everything in this project lives at
// dimension <= 64 (Choi matrices of 3-qubit channels), so there is no
// sparse or blocked storage; operations are naive O(n^3) kernels.
//
// Entries are validated finite at construction: NaN/Inf never enter a matrix.
class ComplexMatrix {
public:
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(int rows, int cols, std::vector<Complex> entries);

    static ComplexMatrix identity(int n);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Complex& operator()(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }
    Complex& operator()(int r, int c) {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    // Max entrywise |a - a^dagger|; 0 for exactly Hermitian input.
    double hermiticity_defect() const;
    bool is_hermitian(double tol = kHermitianTol) const;

    const std::vector<Complex>& entries() const { return entries_; }

private:
    int rows_;
    int cols_;
    std::vector<Complex> entries_;

    void check_finite() const;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, Complex s);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi rotations;
// rejects inputs whose hermiticity defect exceeds kHermitianTol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

}  // namespace qchan
