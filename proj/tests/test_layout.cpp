#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "qchan/layout.hpp"
#include "qchan/states.hpp"
#include "test_helpers.hpp"

using namespace qchan;
using qchan::testing::random_matrix;

namespace {

const ComplexMatrix kPauliX = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});

// Independent construction of an operator on (A, C, B) order permuted into
// the canonical (C, B, A) order, using explicit bit bookkeeping. Used as the
// oracle for embed().
ComplexMatrix permute_acb_to_cba(const ComplexMatrix& op_acb) {
    ComplexMatrix out(8, 8);
    for (int r = 0; r < 8; ++r) {
        const int rc = (r >> 2) & 1, rb = (r >> 1) & 1, ra = r & 1;
        const int r_acb = (ra << 2) | (rc << 1) | rb;
        for (int c = 0; c < 8; ++c) {
            const int cc = (c >> 2) & 1, cb = (c >> 1) & 1, ca = c & 1;
            const int c_acb = (ca << 2) | (cc << 1) | cb;
            out(r, c) = op_acb(r_acb, c_acb);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("layout validation") {
    CHECK_THROWS_AS(SystemLayout({{"C", 2}, {"C", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SystemLayout({{"C", 2}, {"B", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SystemLayout({{"C", 2}, {"B", 3}, {"A", 2}}), std::invalid_argument);
    const SystemLayout cba = SystemLayout::qubit_cba();
    CHECK(cba.total_dim() == 8);
    CHECK(cba.index_of("B") == 1);
    CHECK_THROWS_AS(cba.index_of("Q"), std::invalid_argument);
}

TEST_CASE("embed single site") {
    const SystemLayout layout = SystemLayout::qubit_cba();
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix expected = kron(kron(i2, kPauliX), i2);
    CHECK(max_abs_diff(embed(kPauliX, {"B"}, layout), expected) == 0.0);
}

TEST_CASE("embed identity is identity") {
    const SystemLayout layout = SystemLayout::qubit_cba();
    CHECK(max_abs_diff(embed(ComplexMatrix::identity(4), {"A", "C"}, layout),
                       ComplexMatrix::identity(8)) == 0.0);
}

TEST_CASE("embed permutes a Bell projector onto A,C") {
    const SystemLayout layout = SystemLayout::qubit_cba();
    const ComplexMatrix p_bell = pure(bell(BellKind::PsiMinus)).mat();
    const ComplexMatrix embedded = embed(p_bell, {"A", "C"}, layout);
    // Oracle: P (x) I on (A, C, B) order, permuted explicitly.
    const ComplexMatrix expected = permute_acb_to_cba(kron(p_bell, ComplexMatrix::identity(2)));
    CHECK(max_abs_diff(embedded, expected) < 1e-15);
}

TEST_CASE("embed input validation") {
    const SystemLayout layout = SystemLayout::qubit_cba();
    CHECK_THROWS_AS(embed(kPauliX, {"Q"}, layout), std::invalid_argument);
    CHECK_THROWS_AS(embed(kPauliX, {"A", "C"}, layout), std::invalid_argument);
    CHECK_THROWS_AS(embed(ComplexMatrix::identity(4), {"A", "A"}, layout), std::invalid_argument);
}

TEST_CASE("embed respects operator products") {
    const SystemLayout layout = SystemLayout::qubit_cba();
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix op1 = random_matrix(4, 4, rng);
        const ComplexMatrix op2 = random_matrix(4, 4, rng);
        const ComplexMatrix lhs = embed(matmul(op1, op2), {"A", "C"}, layout);
        const ComplexMatrix rhs = matmul(embed(op1, {"A", "C"}, layout), embed(op2, {"A", "C"}, layout));
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("partial trace of a product state") {
    const SystemLayout ab = SystemLayout({{"A", 2}, {"B", 2}});
    Rng rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix rho_a = random_density(2, rng).mat();
        const ComplexMatrix rho_b = random_density(2, rng).mat();
        CHECK(max_abs_diff(partial_trace(kron(rho_a, rho_b), {"A"}, ab), rho_a) < 1e-12);
        CHECK(max_abs_diff(partial_trace(kron(rho_a, rho_b), {"B"}, ab), rho_b) < 1e-12);
    }
}

TEST_CASE("partial trace of a maximally entangled state is maximally mixed") {
    const SystemLayout ab = SystemLayout({{"A", 2}, {"B", 2}});
    const ComplexMatrix p_bell = pure(bell(BellKind::PsiMinus)).mat();
    const ComplexMatrix half = Complex{0.5, 0.0} * ComplexMatrix::identity(2);
    CHECK(max_abs_diff(partial_trace(p_bell, {"A"}, ab), half) < 1e-15);
}

TEST_CASE("partial trace of the teleportation input recovers rho_C") {
    const SystemLayout layout = SystemLayout::qubit_cba();
    Rng rng(29);
    const ComplexMatrix rho_c = random_density(2, rng).mat();
    const ComplexMatrix resource = pure(bell(BellKind::PsiMinus)).mat();
    const ComplexMatrix rho_full =
        matmul(embed(rho_c, {"C"}, layout), embed(resource, {"A", "B"}, layout));
    CHECK(max_abs_diff(partial_trace(rho_full, {"C"}, layout), rho_c) < 1e-12);
    // the resource marginals on B and A are maximally mixed
    const ComplexMatrix half = Complex{0.5, 0.0} * ComplexMatrix::identity(2);
    CHECK(max_abs_diff(partial_trace(rho_full, {"B"}, layout), half) < 1e-12);
}

TEST_CASE("partial trace composes, preserves trace, and is linear") {
    const SystemLayout layout = SystemLayout::qubit_cba();
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix rho = random_density(8, rng).mat();
        const ComplexMatrix sigma = random_density(8, rng).mat();

        const ComplexMatrix two_step =
            partial_trace(partial_trace(rho, {"C", "A"}, layout), {"A"},
                          SystemLayout({{"C", 2}, {"A", 2}}));
        CHECK(max_abs_diff(two_step, partial_trace(rho, {"A"}, layout)) < 1e-12);

        CHECK(std::abs(partial_trace(rho, {"B"}, layout).trace() - rho.trace()) < 1e-12);

        const Complex alpha{0.3, 0.0}, beta{0.7, 0.0};
        const ComplexMatrix mixed = alpha * rho + beta * sigma;
        const ComplexMatrix lhs = partial_trace(mixed, {"C"}, layout);
        const ComplexMatrix rhs =
            alpha * partial_trace(rho, {"C"}, layout) + beta * partial_trace(sigma, {"C"}, layout);
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("partial trace input validation") {
    const SystemLayout layout = SystemLayout::qubit_cba();
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(8), {"Q"}, layout), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), {"C"}, layout), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(8), {}, layout), std::invalid_argument);
}
