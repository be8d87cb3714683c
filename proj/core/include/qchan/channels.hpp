#pragma once

#include <vector>

#include "qchan/matrix.hpp"
#include "qchan/states.hpp"

namespace qchan {

// Residual tolerances for channel admission and certification.
inline constexpr double kPartitionTol = 1e-10;    // || sum P_i - I ||_max
inline constexpr double kFactorTol = 1e-10;       // unitarity / projector defects
inline constexpr double kTracePresTol = 1e-10;    // || sum V_i^dag V_i - I ||_max
inline constexpr double kChoiPsdSlack = -1e-10;   // admissible Choi eigenvalue floor

enum class KrausSide {
    UnitaryFirst,    // V = U P
    ProjectorFirst,  // V = P U
};

// One structured Kraus factor pair: a unitary times a projector, in either
// order. The factored form is the construction contract; recovering such a
// factorization from a raw operator is not attempted anywhere.
struct StructuredKraus {
    ComplexMatrix unitary;
    ComplexMatrix projector;
    KrausSide side;

    ComplexMatrix op() const;  // the Kraus operator V
};

// Completely positive map in operator-sum form. Structured channels carry
// (U_i, P_i) factor pairs whose projectors form a partition of identity;
// that partition is validated at construction together with the factor
// properties. A raw escape hatch accepts arbitrary Kraus lists for tests
// and file-based certification; raw channels skip the partition checks and
// are flagged unstructured.
class KrausChannel {
public:
    static KrausChannel structured(std::vector<StructuredKraus> terms);
    static KrausChannel from_raw(std::vector<ComplexMatrix> kraus);

    int dim() const { return dim_; }
    bool is_structured() const { return structured_; }
    int term_count() const { return static_cast<int>(kraus_.size()); }
    const std::vector<StructuredKraus>& terms() const;  // throws for raw channels
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

private:
    KrausChannel(int dim, bool structured, std::vector<StructuredKraus> terms,
                 std::vector<ComplexMatrix> kraus);

    int dim_;
    bool structured_;
    std::vector<StructuredKraus> terms_;
    std::vector<ComplexMatrix> kraus_;
};

// Validated structured construction; rejects partition or factor violations
// naming the offending residual.
KrausChannel make_channel(std::vector<StructuredKraus> terms);

// The Kraus sum  sum_i V_i rho V_i^dag. No renormalization, ever: for a
// trace-decreasing channel the caller sees the subnormalized output.
ComplexMatrix apply(const KrausChannel& channel, const ComplexMatrix& rho);
// Validated overload for trace-preserving channels.
DensityOperator apply(const KrausChannel& channel, const DensityOperator& rho);

// Choi matrix  sum_jk |j><k| (x) T(|j><k|), dimension dim^2. Hermitian, and
// positive semidefinite exactly when the map is completely positive.
ComplexMatrix choi(const KrausChannel& channel);

struct TracePreservation {
    bool preserving;
    double residual;  // || sum V_i^dag V_i - I ||_max
};

TracePreservation is_trace_preserving(const KrausChannel& channel);

}  // namespace qchan
