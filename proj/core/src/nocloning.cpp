#include "qchan/nocloning.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qchan {

CloneWitness clone_witness(const KrausChannel& channel, const DensityOperator& rho_ba,
                           const std::vector<DensityOperator>& probes, const SystemLayout& layout) {
    if (probes.empty()) throw std::invalid_argument("clone_witness: no probes");
    for (const char* label : {"C", "B", "A"}) {
        if (!layout.has_label(label)) {
            throw std::invalid_argument("clone_witness: layout lacks subsystem '" +
                                        std::string(label) + "'");
        }
    }
    if (channel.dim() != layout.total_dim()) {
        throw std::invalid_argument("clone_witness: channel dimension does not match layout");
    }
    const int d_c = layout.dim_of("C");
    const int d_ba = layout.dim_of("B") * layout.dim_of("A");
    if (rho_ba.dim() != d_ba) {
        throw std::invalid_argument("clone_witness: resource dimension " +
                                    std::to_string(rho_ba.dim()) + " does not match B x A block " +
                                    std::to_string(d_ba));
    }

    const ComplexMatrix resource_full = embed(rho_ba.mat(), {"B", "A"}, layout);
    bool have_best = false;
    CloneWitness best{probes.front(), 0.0, 0.0, -1.0};
    for (const DensityOperator& probe : probes) {
        if (probe.dim() != d_c) {
            throw std::invalid_argument("clone_witness: probe dimension " +
                                        std::to_string(probe.dim()) + " does not match C (" +
                                        std::to_string(d_c) + ")");
        }
        const ComplexMatrix rho_full = matmul(embed(probe.mat(), {"C"}, layout), resource_full);
        const ComplexMatrix out = apply(channel, rho_full);
        const double db = trace_distance(partial_trace(out, {"B"}, layout), probe.mat());
        const double dc = trace_distance(partial_trace(out, {"C"}, layout), probe.mat());
        const double defect = std::max(db, dc);
        if (!have_best || defect > best.defect) {
            have_best = true;
            best = CloneWitness{probe, db, dc, defect};
        }
    }
    return best;
}

std::vector<DensityOperator> default_probes(std::uint64_t seed, int n_random) {
    if (n_random < 0) throw std::invalid_argument("default_probes: negative count");
    std::vector<DensityOperator> probes;
    probes.reserve(6 + static_cast<std::size_t>(n_random));
    for (const StateVector& psi : pauli_eigenstates()) probes.push_back(pure(psi));
    Rng rng(seed);
    for (int i = 0; i < n_random; ++i) probes.push_back(pure(random_pure(2, rng)));
    return probes;
}

ComplexMatrix haar_unitary(int dim, Rng& rng) {
    if (dim < 1) throw std::invalid_argument("haar_unitary: dimension must be positive");
    ComplexMatrix a(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            double re, im;
            rng.gaussian_pair(re, im);
            a(r, c) = Complex{re, im};
        }
    }
    // Modified Gram-Schmidt, two passes; second pass restores orthogonality
    // lost to rounding without disturbing the distribution.
    for (int pass = 0; pass < 2; ++pass) {
        for (int c = 0; c < dim; ++c) {
            for (int prev = 0; prev < c; ++prev) {
                Complex proj{0.0, 0.0};
                for (int r = 0; r < dim; ++r) proj += std::conj(a(r, prev)) * a(r, c);
                for (int r = 0; r < dim; ++r) a(r, c) -= proj * a(r, prev);
            }
            double nrm = 0.0;
            for (int r = 0; r < dim; ++r) nrm += std::norm(a(r, c));
            nrm = std::sqrt(nrm);
            if (nrm == 0.0) throw std::runtime_error("haar_unitary: degenerate Gaussian draw");
            for (int r = 0; r < dim; ++r) a(r, c) /= nrm;
        }
    }
    return a;
}

std::pair<KrausChannel, DensityOperator> random_instance(const SystemLayout& layout, int n_terms,
                                                         std::uint64_t seed) {
    const int dim = layout.total_dim();
    if (n_terms < 1 || n_terms > dim) {
        throw std::invalid_argument("random_instance: n_terms must be in [1, " + std::to_string(dim) +
                                    "]");
    }
    for (const char* label : {"C", "B", "A"}) {
        if (!layout.has_label(label)) {
            throw std::invalid_argument("random_instance: layout lacks subsystem '" +
                                        std::string(label) + "'");
        }
    }
    Rng rng(seed);

    // Random orthogonal partition: group the columns of a Haar unitary.
    const ComplexMatrix basis = haar_unitary(dim, rng);
    std::vector<int> sizes(static_cast<std::size_t>(n_terms), 1);
    for (int extra = 0; extra < dim - n_terms; ++extra) {
        sizes[static_cast<std::size_t>(rng.uniform_int(static_cast<std::uint64_t>(n_terms)))] += 1;
    }

    std::vector<StructuredKraus> terms;
    terms.reserve(static_cast<std::size_t>(n_terms));
    int col = 0;
    for (int i = 0; i < n_terms; ++i) {
        ComplexMatrix projector(dim, dim);
        for (int k = 0; k < sizes[static_cast<std::size_t>(i)]; ++k, ++col) {
            for (int r = 0; r < dim; ++r) {
                for (int c = 0; c < dim; ++c) {
                    projector(r, c) += basis(r, col) * std::conj(basis(c, col));
                }
            }
        }
        terms.push_back({haar_unitary(dim, rng), std::move(projector), KrausSide::UnitaryFirst});
    }

    DensityOperator rho_ba = random_density(layout.dim_of("B") * layout.dim_of("A"), rng);
    return {make_channel(std::move(terms)), std::move(rho_ba)};
}

}  // namespace qchan
