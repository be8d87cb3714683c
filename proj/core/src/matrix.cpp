#include "qchan/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qchan {

namespace {

void check_dims(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dims(rows, cols);
    entries_.assign(static_cast<std::size_t>(rows) * cols, Complex{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_dims(rows, cols);
    if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
        throw std::invalid_argument("ComplexMatrix: entry count " + std::to_string(entries_.size()) +
                                    " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    check_finite();
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const int r = static_cast<int>(rows.size());
    if (r == 0) throw std::invalid_argument("ComplexMatrix::from_rows: empty row list");
    const int c = static_cast<int>(rows.begin()->size());
    std::vector<Complex> entries;
    entries.reserve(static_cast<std::size_t>(r) * c);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) {
            throw std::invalid_argument("ComplexMatrix::from_rows: ragged rows");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(r, c, std::move(entries));
}

void ComplexMatrix::check_finite() const {
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("ComplexMatrix: non-finite entry");
        }
    }
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix must be square");
    Complex t{0.0, 0.0};
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) throw std::invalid_argument("hermiticity_defect: matrix must be square");
    double m = 0.0;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return is_square() && hermiticity_defect() <= tol;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: dimension mismatch, " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{0.0, 0.0}) continue;
            for (int c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ra = 0; ra < a.rows(); ++ra) {
        for (int ca = 0; ca < a.cols(); ++ca) {
            const Complex f = a(ra, ca);
            if (f == Complex{0.0, 0.0}) continue;
            for (int rb = 0; rb < b.rows(); ++rb) {
                for (int cb = 0; cb < b.cols(); ++cb) {
                    out(ra * b.rows() + rb, ca * b.cols() + cb) = f * b(rb, cb);
                }
            }
        }
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out(r, c) = s * a(r, c);
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, Complex s) { return s * a; }

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("operator+: dimension mismatch");
    }
    ComplexMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("operator-: dimension mismatch");
    }
    ComplexMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
    const double defect = a.hermiticity_defect();
    if (defect > kHermitianTol) {
        throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian (defect " +
                                    std::to_string(defect) + ")");
    }

    const int n = a.rows();
    // Work on the exactly Hermitian part; kills the admissible <= 1e-10 asymmetry.
    ComplexMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            m(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
        }
    }

    constexpr int kMaxSweeps = 200;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        double off2 = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) off2 += 2.0 * std::norm(m(p, q));
        }
        if (std::sqrt(off2) < kJacobiOffdiagTol) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = m(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                const Complex phase = apq / r;  // e^{i arg(apq)}
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                // Real Jacobi angle for the phase-stripped 2x2 block [[app, r], [r, aqq]].
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex sp = s * phase;
                const Complex spc = s * std::conj(phase);
                // m <- V^dagger m V with V = I except V(p,p)=c, V(p,q)=s, V(q,p)=-s*conj(phase),
                // V(q,q)=c*conj(phase).
                for (int k = 0; k < n; ++k) {
                    const Complex mkp = m(k, p);
                    const Complex mkq = m(k, q);
                    m(k, p) = c * mkp - spc * mkq;
                    m(k, q) = s * mkp + c * std::conj(phase) * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex mpk = m(p, k);
                    const Complex mqk = m(q, k);
                    m(p, k) = c * mpk - sp * mqk;
                    m(q, k) = s * mpk + c * phase * mqk;
                }
                // The rotation annihilates the pivot exactly; pin it to keep m Hermitian.
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                m(p, p) = m(p, p).real();
                m(q, q) = m(q, q).real();
            }
        }
    }
    if (!converged) {
        throw std::runtime_error("hermitian_eigenvalues: Jacobi iteration did not converge");
    }

    std::vector<double> eigs(n);
    for (int i = 0; i < n; ++i) eigs[i] = m(i, i).real();
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

}  // namespace qchan
