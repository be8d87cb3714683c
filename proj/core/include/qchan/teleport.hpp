#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qchan/channels.hpp"
#include "qchan/layout.hpp"
#include "qchan/states.hpp"

namespace qchan {

// Outcome of one teleportation run on the C x B x A system. The channel
// moves the C-system state onto B; the report carries both post-channel
// marginals and their distances to the input.
struct TeleportReport {
    DensityOperator input_state;  // rho_C
    DensityOperator b_marginal;   // B marginal after the channel
    DensityOperator c_marginal;   // C marginal after the channel
    double dist_b;                // trace_distance(b_marginal, input_state)
    double dist_c;                // trace_distance(c_marginal, input_state)
    bool b_matches_input;         // dist_b <= kStateEqTol
    bool c_matches_input;         // dist_c <= kStateEqTol; the would-be clone condition
};

struct TheoremSummary {
    int n_probes;
    std::uint64_t seed;
    double max_dist_b;
    double min_dist_c;
    bool theorem_holds;  // max_dist_b <= kStateEqTol
};

// The canonical C x B x A qubit layout used by the teleportation channel.
const SystemLayout& teleport_layout();

// The four single-qubit Pauli matrices {I, X, Y, Z}, in that order.
const std::array<ComplexMatrix, 4>& pauli_matrices();

// The outcome-conditioned correction unitaries, one per Bell outcome in the
// order (Psi+, Psi-, Phi+, Phi-). Found by exhaustive search over Pauli
// 4-tuples (256 candidates, lexicographic over {I,X,Y,Z}): a candidate is
// accepted when the resulting channel returns every state of the
// tomographically complete probe set {|0>, |1>, |+>, |+i>} on B. The search
// doubles as an oracle for the Bell amplitude conventions; failure to find
// any candidate would mean a convention bug and throws.
const std::array<ComplexMatrix, 4>& derive_corrections();

// Pauli names of the derived corrections, same order.
const std::array<std::string, 4>& correction_labels();

// The 4-term teleportation channel on the 8-dimensional C x B x A space:
// each term is (correction on B) x (Bell projector on A,C), assembled in
// unitary-first form (the factors commute, acting on disjoint subsystems).
const KrausChannel& teleport_channel();

// Builds rho_C x (singlet resource on A,B), applies the teleportation
// channel and reports both marginals. Accepts any qubit density operator.
TeleportReport run_teleport(const DensityOperator& rho_c);

// Runs run_teleport over n seeded Haar-random pure probes and returns the
// extremal distances.
TheoremSummary verify_theorem(int n_probes, std::uint64_t seed);

}  // namespace qchan
