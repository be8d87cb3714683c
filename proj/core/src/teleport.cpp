#include "qchan/teleport.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qchan {

namespace {

const std::array<std::string, 4> kPauliNames = {"I", "X", "Y", "Z"};

const std::array<BellKind, 4> kOutcomeOrder = {BellKind::PsiPlus, BellKind::PsiMinus,
                                               BellKind::PhiPlus, BellKind::PhiMinus};

// Bell projectors embedded on (A, C) of the full C x B x A space.
std::array<ComplexMatrix, 4> outcome_projectors() {
    const SystemLayout& layout = teleport_layout();
    std::array<ComplexMatrix, 4> out = {ComplexMatrix(8, 8), ComplexMatrix(8, 8),
                                        ComplexMatrix(8, 8), ComplexMatrix(8, 8)};
    for (int i = 0; i < 4; ++i) {
        out[i] = embed(pure(bell(kOutcomeOrder[i])).mat(), {"A", "C"}, layout);
    }
    return out;
}

KrausChannel build_channel(const std::array<int, 4>& correction_idx) {
    const SystemLayout& layout = teleport_layout();
    const std::array<ComplexMatrix, 4> projectors = outcome_projectors();
    std::vector<StructuredKraus> terms;
    terms.reserve(4);
    for (int i = 0; i < 4; ++i) {
        terms.push_back({embed(pauli_matrices()[correction_idx[i]], {"B"}, layout), projectors[i],
                         KrausSide::UnitaryFirst});
    }
    return make_channel(std::move(terms));
}

// rho_C x (singlet on A,B) as an operator on the full space, via commuting
// embeddings.
ComplexMatrix full_input(const ComplexMatrix& rho_c) {
    const SystemLayout& layout = teleport_layout();
    static const ComplexMatrix resource = pure(bell(BellKind::PsiMinus)).mat();
    return matmul(embed(rho_c, {"C"}, layout), embed(resource, {"A", "B"}, layout));
}

struct SearchResult {
    std::array<int, 4> indices;
    std::array<std::string, 4> labels;
};

const SearchResult& correction_search() {
    static const SearchResult result = [] {
        const SystemLayout& layout = teleport_layout();
        const std::array<StateVector, 6> eigen = pauli_eigenstates();
        // |0>, |1>, |+>, |+i>: tomographically complete for a qubit.
        const std::array<ComplexMatrix, 4> probes = {pure(eigen[0]).mat(), pure(eigen[1]).mat(),
                                                     pure(eigen[2]).mat(), pure(eigen[4]).mat()};
        for (int i0 = 0; i0 < 4; ++i0) {
            for (int i1 = 0; i1 < 4; ++i1) {
                for (int i2 = 0; i2 < 4; ++i2) {
                    for (int i3 = 0; i3 < 4; ++i3) {
                        const std::array<int, 4> idx = {i0, i1, i2, i3};
                        const KrausChannel candidate = build_channel(idx);
                        bool ok = true;
                        for (const ComplexMatrix& probe : probes) {
                            const ComplexMatrix out = apply(candidate, full_input(probe));
                            const ComplexMatrix b = partial_trace(out, {"B"}, layout);
                            if (trace_distance(b, probe) > kStateEqTol) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok) {
                            return SearchResult{idx,
                                                {kPauliNames[idx[0]], kPauliNames[idx[1]],
                                                 kPauliNames[idx[2]], kPauliNames[idx[3]]}};
                        }
                    }
                }
            }
        }
        throw std::runtime_error(
            "derive_corrections: no Pauli correction set teleports the probe set; "
            "convention bug in Bell states or layout");
    }();
    return result;
}

}  // namespace

const SystemLayout& teleport_layout() {
    static const SystemLayout layout = SystemLayout::qubit_cba();
    return layout;
}

const std::array<ComplexMatrix, 4>& pauli_matrices() {
    static const std::array<ComplexMatrix, 4> paulis = {
        ComplexMatrix::identity(2),
        ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}),
        ComplexMatrix::from_rows({{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}),
        ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}),
    };
    return paulis;
}

const std::array<ComplexMatrix, 4>& derive_corrections() {
    static const std::array<ComplexMatrix, 4> unitaries = [] {
        const std::array<int, 4>& idx = correction_search().indices;
        return std::array<ComplexMatrix, 4>{pauli_matrices()[idx[0]], pauli_matrices()[idx[1]],
                                            pauli_matrices()[idx[2]], pauli_matrices()[idx[3]]};
    }();
    return unitaries;
}

const std::array<std::string, 4>& correction_labels() { return correction_search().labels; }

const KrausChannel& teleport_channel() {
    static const KrausChannel channel = build_channel(correction_search().indices);
    return channel;
}

TeleportReport run_teleport(const DensityOperator& rho_c) {
    if (rho_c.dim() != 2) {
        throw std::invalid_argument("run_teleport: input must be a qubit state, got dimension " +
                                    std::to_string(rho_c.dim()));
    }
    const SystemLayout& layout = teleport_layout();
    const ComplexMatrix out = apply(teleport_channel(), full_input(rho_c.mat()));
    DensityOperator b_marginal(partial_trace(out, {"B"}, layout));
    DensityOperator c_marginal(partial_trace(out, {"C"}, layout));
    const double dist_b = trace_distance(b_marginal, rho_c);
    const double dist_c = trace_distance(c_marginal, rho_c);
    return TeleportReport{rho_c,
                          std::move(b_marginal),
                          std::move(c_marginal),
                          dist_b,
                          dist_c,
                          dist_b <= kStateEqTol,
                          dist_c <= kStateEqTol};
}

TheoremSummary verify_theorem(int n_probes, std::uint64_t seed) {
    if (n_probes < 1) throw std::invalid_argument("verify_theorem: need at least one probe");
    Rng rng(seed);
    double max_b = 0.0;
    double min_c = 1.0;
    for (int i = 0; i < n_probes; ++i) {
        const TeleportReport report = run_teleport(pure(random_pure(2, rng)));
        max_b = std::max(max_b, report.dist_b);
        min_c = std::min(min_c, report.dist_c);
    }
    return TheoremSummary{n_probes, seed, max_b, min_c, max_b <= kStateEqTol};
}

}  // namespace qchan
