#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "qchan/nocloning.hpp"
#include "qchan/teleport.hpp"
#include "test_helpers.hpp"

using namespace qchan;

TEST_CASE("default probes") {
    const auto six = default_probes(3, 0);
    CHECK(six.size() == 6);
    ComplexMatrix mean(2, 2);
    for (const DensityOperator& rho : six) mean = mean + rho.mat();
    mean = Complex{1.0 / 6.0, 0.0} * mean;
    CHECK(max_abs_diff(mean, DensityOperator::maximally_mixed(2).mat()) < 1e-12);

    const auto nine = default_probes(3, 3);
    CHECK(nine.size() == 9);
    const auto nine_again = default_probes(3, 3);
    for (std::size_t i = 0; i < nine.size(); ++i) {
        CHECK(max_abs_diff(nine[i].mat(), nine_again[i].mat()) == 0.0);
    }
    CHECK_THROWS_AS(default_probes(3, -1), std::invalid_argument);
}

TEST_CASE("haar_unitary is unitary and seed-deterministic") {
    for (int dim : {2, 4, 8}) {
        Rng rng(1234);
        const ComplexMatrix u = haar_unitary(dim, rng);
        CHECK(max_abs_diff(matmul(u.adjoint(), u), ComplexMatrix::identity(dim)) < 1e-12);
        CHECK(max_abs_diff(matmul(u, u.adjoint()), ComplexMatrix::identity(dim)) < 1e-12);
        Rng rng2(1234);
        const ComplexMatrix v = haar_unitary(dim, rng2);
        CHECK(max_abs_diff(u, v) == 0.0);
    }
}

TEST_CASE("random_instance builds valid trace-preserving channels") {
    const SystemLayout layout = SystemLayout::qubit_cba();
    for (int terms = 1; terms <= 4; ++terms) {
        const auto [channel, rho_ba] = random_instance(layout, terms, 100 + terms);
        CHECK(channel.term_count() == terms);
        CHECK(is_trace_preserving(channel).preserving);
        CHECK(rho_ba.dim() == 4);

        ComplexMatrix psum(8, 8);
        for (const StructuredKraus& t : channel.terms()) psum = psum + t.projector;
        CHECK(max_abs_diff(psum, ComplexMatrix::identity(8)) <= 1e-10);
    }
    // same seed, same instance
    const auto [c1, r1] = random_instance(layout, 3, 42);
    const auto [c2, r2] = random_instance(layout, 3, 42);
    for (int i = 0; i < 3; ++i) CHECK(max_abs_diff(c1.kraus()[i], c2.kraus()[i]) == 0.0);
    CHECK(max_abs_diff(r1.mat(), r2.mat()) == 0.0);

    CHECK_THROWS_AS(random_instance(layout, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_instance(layout, 9, 1), std::invalid_argument);
}

TEST_CASE("teleportation fails to clone entirely on the C side") {
    const CloneWitness w = clone_witness(teleport_channel(), pure(bell(BellKind::PsiMinus)),
                                         {pure(StateVector::basis(2, 0))}, teleport_layout());
    CHECK(w.defect_b <= 1e-12);
    CHECK(w.defect_c == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w.defect == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w.defect == std::max(w.defect_b, w.defect_c));
}

TEST_CASE("the identity channel fails to clone on the B side") {
    // Nothing moves, so B keeps the resource marginal I/2 instead of |0>.
    const KrausChannel id = make_channel(
        {{ComplexMatrix::identity(8), ComplexMatrix::identity(8), KrausSide::UnitaryFirst}});
    const CloneWitness w = clone_witness(id, pure(bell(BellKind::PsiMinus)),
                                         {pure(StateVector::basis(2, 0))}, teleport_layout());
    CHECK(w.defect_b == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w.defect_c <= 1e-12);
}

TEST_CASE("a degenerate probe set fails to witness against teleportation") {
    const CloneWitness w = clone_witness(teleport_channel(), pure(bell(BellKind::PsiMinus)),
                                         {DensityOperator::maximally_mixed(2)}, teleport_layout());
    CHECK(w.defect <= 1e-12);
}

TEST_CASE("witness ties break toward the first probe") {
    const std::vector<DensityOperator> probes = {pure(StateVector::basis(2, 0)),
                                                 pure(StateVector::basis(2, 1))};
    const CloneWitness w =
        clone_witness(teleport_channel(), pure(bell(BellKind::PsiMinus)), probes, teleport_layout());
    // both pure probes give defect 1/2; the first must be reported
    CHECK(max_abs_diff(w.witness_state.mat(), probes[0].mat()) == 0.0);
}

TEST_CASE("clone_witness validates dimensions") {
    CHECK_THROWS_AS(clone_witness(teleport_channel(), DensityOperator::maximally_mixed(2),
                                  {pure(StateVector::basis(2, 0))}, teleport_layout()),
                    std::invalid_argument);
    CHECK_THROWS_AS(clone_witness(teleport_channel(), pure(bell(BellKind::PsiMinus)),
                                  {DensityOperator::maximally_mixed(4)}, teleport_layout()),
                    std::invalid_argument);
    CHECK_THROWS_AS(clone_witness(teleport_channel(), pure(bell(BellKind::PsiMinus)), {},
                                  teleport_layout()),
                    std::invalid_argument);
}

TEST_CASE("no channel clones: sampled instances always yield a witness") {
    const SystemLayout layout = SystemLayout::qubit_cba();
    for (int k = 0; k < 25; ++k) {
        const std::uint64_t seed = 9000 + static_cast<std::uint64_t>(k);
        const int n_terms = 1 + k % 4;
        const auto [channel, rho_ba] = random_instance(layout, n_terms, seed);
        const CloneWitness w = clone_witness(channel, rho_ba, default_probes(seed, 16), layout);
        CHECK(w.defect >= kCloneDefectThreshold);
    }
}

TEST_CASE("teleportation is not a counterexample: defect is entirely on C") {
    const CloneWitness w = clone_witness(teleport_channel(), pure(bell(BellKind::PsiMinus)),
                                         default_probes(31337, 16), teleport_layout());
    CHECK(w.defect_b <= 1e-9);
    CHECK(w.defect_c >= 0.49);
    CHECK(w.defect >= kCloneDefectThreshold);
}
