#include "qchan/channels.hpp"

#include <stdexcept>
#include <string>

namespace qchan {

ComplexMatrix StructuredKraus::op() const {
    return side == KrausSide::UnitaryFirst ? matmul(unitary, projector) : matmul(projector, unitary);
}

KrausChannel::KrausChannel(int dim, bool structured, std::vector<StructuredKraus> terms,
                           std::vector<ComplexMatrix> kraus)
    : dim_(dim), structured_(structured), terms_(std::move(terms)), kraus_(std::move(kraus)) {}

const std::vector<StructuredKraus>& KrausChannel::terms() const {
    if (!structured_) throw std::logic_error("KrausChannel: raw channel has no structured terms");
    return terms_;
}

KrausChannel KrausChannel::structured(std::vector<StructuredKraus> terms) {
    if (terms.empty()) throw std::invalid_argument("make_channel: no terms");
    const int dim = terms.front().unitary.rows();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const StructuredKraus& t = terms[i];
        const std::string where = "make_channel: term " + std::to_string(i);
        if (!t.unitary.is_square() || !t.projector.is_square() || t.unitary.rows() != dim ||
            t.projector.rows() != dim) {
            throw std::invalid_argument(where + ": factors must be square of equal dimension");
        }
        const double udef = max_abs_diff(matmul(t.unitary.adjoint(), t.unitary),
                                         ComplexMatrix::identity(dim));
        if (udef > kFactorTol) {
            throw std::invalid_argument(where + ": factor not unitary (residual " +
                                        std::to_string(udef) + ")");
        }
        const double pherm = t.projector.hermiticity_defect();
        const double pidem = max_abs_diff(matmul(t.projector, t.projector), t.projector);
        if (pherm > kFactorTol || pidem > kFactorTol) {
            throw std::invalid_argument(where + ": factor not a projector (hermiticity " +
                                        std::to_string(pherm) + ", idempotency " +
                                        std::to_string(pidem) + ")");
        }
    }

    ComplexMatrix psum(dim, dim);
    for (const StructuredKraus& t : terms) psum = psum + t.projector;
    const double partition = max_abs_diff(psum, ComplexMatrix::identity(dim));
    if (partition > kPartitionTol) {
        throw std::invalid_argument("make_channel: projectors do not sum to identity (residual " +
                                    std::to_string(partition) + ")");
    }
    // Pairwise orthogonality follows from the partition in finite dimension;
    // asserting it catches construction bugs early.
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            const double cross = matmul(terms[i].projector, terms[j].projector).max_abs();
            if (cross > kFactorTol) {
                throw std::invalid_argument("make_channel: projectors " + std::to_string(i) + " and " +
                                            std::to_string(j) + " not orthogonal (residual " +
                                            std::to_string(cross) + ")");
            }
        }
    }

    std::vector<ComplexMatrix> kraus;
    kraus.reserve(terms.size());
    bool all_unitary_first = true;
    for (const StructuredKraus& t : terms) {
        kraus.push_back(t.op());
        if (t.side != KrausSide::UnitaryFirst) all_unitary_first = false;
    }

    KrausChannel channel(dim, true, std::move(terms), std::move(kraus));
    if (all_unitary_first) {
        // With V = U P and the projectors a partition, V^dag V = P, so the
        // channel is trace preserving; asserted rather than assumed.
        const TracePreservation tp = is_trace_preserving(channel);
        if (!tp.preserving) {
            throw std::invalid_argument(
                "make_channel: unitary-first partition failed trace preservation (residual " +
                std::to_string(tp.residual) + ")");
        }
    }
    return channel;
}

KrausChannel KrausChannel::from_raw(std::vector<ComplexMatrix> kraus) {
    if (kraus.empty()) throw std::invalid_argument("KrausChannel: empty Kraus list");
    const int dim = kraus.front().rows();
    for (const ComplexMatrix& v : kraus) {
        if (!v.is_square() || v.rows() != dim) {
            throw std::invalid_argument("KrausChannel: Kraus operators must be square of equal dimension");
        }
    }
    return KrausChannel(dim, false, {}, std::move(kraus));
}

KrausChannel make_channel(std::vector<StructuredKraus> terms) {
    return KrausChannel::structured(std::move(terms));
}

ComplexMatrix apply(const KrausChannel& channel, const ComplexMatrix& rho) {
    if (!rho.is_square() || rho.rows() != channel.dim()) {
        throw std::invalid_argument("apply: state dimension " + std::to_string(rho.rows()) +
                                    " does not match channel dimension " +
                                    std::to_string(channel.dim()));
    }
    ComplexMatrix out(channel.dim(), channel.dim());
    for (const ComplexMatrix& v : channel.kraus()) {
        out = out + matmul(matmul(v, rho), v.adjoint());
    }
    return out;
}

DensityOperator apply(const KrausChannel& channel, const DensityOperator& rho) {
    return DensityOperator(apply(channel, rho.mat()));
}

ComplexMatrix choi(const KrausChannel& channel) {
    const int d = channel.dim();
    ComplexMatrix out(d * d, d * d);
    // T(|j><k|)_{ab} = sum_i V_{aj} conj(V_{bk}); block (j,k) of the Choi matrix.
    for (const ComplexMatrix& v : channel.kraus()) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                for (int a = 0; a < d; ++a) {
                    for (int b = 0; b < d; ++b) {
                        out(j * d + a, k * d + b) += v(a, j) * std::conj(v(b, k));
                    }
                }
            }
        }
    }
    return out;
}

TracePreservation is_trace_preserving(const KrausChannel& channel) {
    const int d = channel.dim();
    ComplexMatrix acc(d, d);
    for (const ComplexMatrix& v : channel.kraus()) {
        acc = acc + matmul(v.adjoint(), v);
    }
    const double residual = max_abs_diff(acc, ComplexMatrix::identity(d));
    return {residual <= kTracePresTol, residual};
}

}  // namespace qchan
