#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qchan/channels.hpp"
#include "qchan/layout.hpp"
#include "qchan/states.hpp"

namespace qchan {

// Witness defects above this certify a cloning failure; far above numerical
// noise (<= 1e-10) and far below the defect scale seen in practice (>= 0.1).
inline constexpr double kCloneDefectThreshold = 1e-6;

// A probe state on C together with how badly the channel fails to clone it:
// the marginal distances of (T rho)_B and (T rho)_C from rho_C, and their max.
struct CloneWitness {
    DensityOperator witness_state;
    double defect_b;
    double defect_c;
    double defect;  // max(defect_b, defect_c)
};

// Evaluates every probe rho_C against the channel: builds rho_C x rho_BA on
// the given C x B x A layout, applies T, measures both marginal defects, and
// returns the probe with the largest defect (ties broken by probe order).
// rho_ba lives on the (B, A) block in canonical layout order.
CloneWitness clone_witness(const KrausChannel& channel, const DensityOperator& rho_ba,
                           const std::vector<DensityOperator>& probes, const SystemLayout& layout);

// The six Pauli eigenstates as projectors, followed by n_random Haar-random
// pure states drawn from the seeded stream.
std::vector<DensityOperator> default_probes(std::uint64_t seed, int n_random);

// Haar-distributed random unitary: QR of a complex Gaussian matrix by
// modified Gram-Schmidt (run twice for orthogonality at machine precision);
// the positive-diagonal R convention makes Q Haar-uniform.
ComplexMatrix haar_unitary(int dim, Rng& rng);

// A random structured channel on the layout -- Haar unitaries against a
// random orthogonal projector partition with n_terms blocks, unitary-first
// form -- plus a random mixed resource state on the (B, A) block.
std::pair<KrausChannel, DensityOperator> random_instance(const SystemLayout& layout, int n_terms,
                                                         std::uint64_t seed);

}  // namespace qchan
