// Acceptance suite: one line per criterion, PASS/FAIL with the measured
// quantity and its bound, plus the wall-clock budget. Exit code is the
// number of failed criteria. argv[1] must point at the qchan CLI binary
// (used by the reproducibility criterion).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qchan/frames.hpp"
#include "qchan/nocloning.hpp"
#include "qchan/teleport.hpp"

using namespace qchan;

namespace {

std::string g_cli_path;
int g_failures = 0;

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

void report(int number, const std::string& name, const Outcome& outcome, double elapsed_s,
            double budget_s) {
    const bool in_budget = elapsed_s < budget_s;
    const bool pass = outcome.pass && in_budget;
    if (!pass) ++g_failures;
    std::printf("[%d] %s  %s: %s [%.2f s < %.0f s]\n", number, pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str(), elapsed_s, budget_s);
}

template <typename F>
void criterion(int number, const std::string& name, double budget_s, F&& eval) {
    const auto start = Clock::now();
    Outcome outcome{false, "exception"};
    try {
        outcome = eval();
    } catch (const std::exception& e) {
        outcome = Outcome{false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    report(number, name, outcome, elapsed, budget_s);
}

// The deterministic probe family shared by criteria 1 and 2:
// 1000 seeded random pure states, the 6 Pauli eigenstates, 100 random mixed.
struct ProbeSet {
    std::vector<DensityOperator> pure_probes;
    std::vector<DensityOperator> mixed_probes;
};

ProbeSet build_probes() {
    ProbeSet set;
    Rng pure_rng(20260808);
    for (int i = 0; i < 1000; ++i) set.pure_probes.push_back(pure(random_pure(2, pure_rng)));
    for (const StateVector& psi : pauli_eigenstates()) set.pure_probes.push_back(pure(psi));
    Rng mixed_rng(80802026);
    for (int i = 0; i < 100; ++i) set.mixed_probes.push_back(random_density(2, mixed_rng));
    return set;
}

std::string run_command(const std::string& args) {
    const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string output;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    pclose(pipe);
    return output;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    // Criterion 5 must time the exhaustive search itself, so it runs first
    // (later criteria reuse the cached channel); reported in order below.
    const auto search_start = Clock::now();
    const std::array<std::string, 4>& labels = correction_labels();
    const double search_elapsed =
        std::chrono::duration<double>(Clock::now() - search_start).count();

    const ProbeSet probes = build_probes();

    criterion(1, "teleportation theorem, (T rho)_B = rho_C", 5.0, [&] {
        double max_b = 0.0;
        int count = 0;
        for (const auto& list : {&probes.pure_probes, &probes.mixed_probes}) {
            for (const DensityOperator& rho : *list) {
                max_b = std::max(max_b, run_teleport(rho).dist_b);
                ++count;
            }
        }
        return Outcome{max_b <= 1e-9, "max dist_b = " + fmt(max_b) + " over " +
                                          std::to_string(count) + " inputs (tol 1e-9)"};
    });

    criterion(2, "no-cloning corollary, (T rho)_C != rho_C", 5.0, [&] {
        double max_c_dev = 0.0;      // |dist_c - 1/2| over pure probes
        double max_mixed_dev = 0.0;  // ||c_marginal - I/2||_max over all probes
        const ComplexMatrix half = Complex{0.5, 0.0} * ComplexMatrix::identity(2);
        for (const DensityOperator& rho : probes.pure_probes) {
            const TeleportReport rep = run_teleport(rho);
            max_c_dev = std::max(max_c_dev, std::abs(rep.dist_c - 0.5));
            max_mixed_dev = std::max(max_mixed_dev, max_abs_diff(rep.c_marginal.mat(), half));
        }
        for (const DensityOperator& rho : probes.mixed_probes) {
            const TeleportReport rep = run_teleport(rho);
            max_mixed_dev = std::max(max_mixed_dev, max_abs_diff(rep.c_marginal.mat(), half));
        }
        const bool pass = max_c_dev <= 1e-9 && max_mixed_dev <= 1e-9;
        return Outcome{pass, "max |dist_c - 1/2| = " + fmt(max_c_dev) +
                                 " (pure), max ||(T rho)_C - I/2|| = " + fmt(max_mixed_dev) +
                                 " (all inputs, tol 1e-9)"};
    });

    criterion(3, "channel legality: partition, trace preservation, positivity", 30.0, [&] {
        const KrausChannel& channel = teleport_channel();
        ComplexMatrix psum(channel.dim(), channel.dim());
        for (const StructuredKraus& term : channel.terms()) psum = psum + term.projector;
        const double partition = max_abs_diff(psum, ComplexMatrix::identity(channel.dim()));
        const double tp = is_trace_preserving(channel).residual;
        const double choi_min = hermitian_eigenvalues(choi(channel)).front();
        const bool pass = partition <= 1e-10 && tp <= 1e-10 && choi_min >= -1e-10;
        return Outcome{pass, "partition residual = " + fmt(partition) + ", tp residual = " + fmt(tp) +
                                 ", choi min eigenvalue = " + fmt(choi_min)};
    });

    criterion(4, "no-cloning statement over random structured channels", 30.0, [&] {
        const SystemLayout layout = SystemLayout::qubit_cba();
        int witnessed = 0;
        double min_defect = 1.0;
        for (int k = 0; k < 100; ++k) {
            const std::uint64_t seed = 1 + static_cast<std::uint64_t>(k);
            const int n_terms = 1 + k % 4;
            const auto [channel, rho_ba] = random_instance(layout, n_terms, seed);
            const CloneWitness w = clone_witness(channel, rho_ba, default_probes(seed, 16), layout);
            if (w.defect >= kCloneDefectThreshold) ++witnessed;
            min_defect = std::min(min_defect, w.defect);
        }
        return Outcome{witnessed == 100, std::to_string(witnessed) +
                                             "/100 instances witnessed, min defect = " +
                                             fmt(min_defect) + " (threshold 1e-6)"};
    });

    {
        // criterion 5, timed above
        Outcome outcome{false, ""};
        const std::string found = labels[0] + labels[1] + labels[2] + labels[3];
        bool teleports = true;
        const std::array<StateVector, 6> eigen = pauli_eigenstates();
        for (const StateVector* psi : {&eigen[0], &eigen[1], &eigen[2], &eigen[4]}) {
            if (run_teleport(pure(*psi)).dist_b > 1e-9) teleports = false;
        }
        const bool stable = found == "ZIYX";  // frozen expected result of the deterministic search
        outcome.pass = teleports && stable;
        outcome.detail = "search found corrections (" + labels[0] + ", " + labels[1] + ", " +
                         labels[2] + ", " + labels[3] + "), teleports the tomographic probe set: " +
                         (teleports ? "yes" : "no");
        report(5, "correction-unitary derivation by exhaustive search", outcome, search_elapsed, 2.0);
    }

    criterion(6, "frame audit on the default spacelike pair", 1.0, [&] {
        const auto [e_i, e_ii] = default_events();
        const auto frame = find_reordering_boost(e_i, e_ii);
        if (!frame.has_value()) return Outcome{false, "no reordering boost found"};
        const bool reversed = boost(e_ii, *frame).t < boost(e_i, *frame).t;
        int clean = 0;
        for (const StateVector& psi : pauli_eigenstates()) {
            const ScenarioReport rep = audit(pure(psi), e_i, e_ii);
            if (rep.asserted_clone_pattern && rep.verdict == Verdict::NoContradiction) ++clean;
        }
        return Outcome{reversed && clean == 6,
                       "beta = " + fmt(frame->beta) + " reverses ordering: " +
                           (reversed ? "yes" : "no") + "; " + std::to_string(clean) +
                           "/6 eigenstate audits report the pattern with no contradiction"};
    });

    criterion(7, "kinematic soundness of boosts", 30.0, [&] {
        Rng rng(424242);
        int pairs = 0;
        double max_interval_dev = 0.0;
        bool order_stable = true;
        while (pairs < 100) {
            const double t1 = (rng.uniform() - 0.5) * 4.0;
            const double x1 = (rng.uniform() - 0.5) * 4.0;
            const double dx = (rng.uniform() - 0.5) * 2.0;
            double dt = std::abs(dx) + 0.1 + rng.uniform() * 3.0;
            if (rng.uniform() < 0.5) dt = -dt;
            const Event a{EventLabel::EventI, t1, x1};
            const Event b{EventLabel::EventII, t1 + dt, x1 + dx};
            if (classify_interval(a, b) != IntervalType::Timelike) continue;
            ++pairs;
            for (int k = 0; k < 100; ++k) {
                const double beta = (rng.uniform() - 0.5) * 1.98;
                const Event ba = boost(a, FrameBoost{beta});
                const Event bb = boost(b, FrameBoost{beta});
                if ((bb.t - ba.t) * dt <= 0.0) order_stable = false;
                const double dev =
                    std::abs((ba.t * ba.t - ba.x * ba.x) - (a.t * a.t - a.x * a.x));
                max_interval_dev = std::max(max_interval_dev, dev);
            }
        }
        return Outcome{order_stable && max_interval_dev <= 1e-12,
                       "100 timelike pairs x 100 boosts: ordering stable = " +
                           std::string(order_stable ? "yes" : "no") +
                           ", max interval deviation = " + fmt(max_interval_dev) + " (tol 1e-12)"};
    });

    criterion(8, "CLI reproducibility: byte-identical JSON", 30.0, [&] {
        if (g_cli_path.empty()) return Outcome{false, "no CLI path given on the command line"};
        const std::array<std::string, 4> invocations = {
            "teleport --state zero --format json",
            "teleport --state plus --format json",
            "noclone --instances 5 --seed 1 --format json",
            "audit --state plus_i --format json",
        };
        int identical = 0;
        for (const std::string& args : invocations) {
            const std::string first = run_command(args);
            const std::string second = run_command(args);
            if (!first.empty() && first == second) ++identical;
        }
        return Outcome{identical == static_cast<int>(invocations.size()),
                       std::to_string(identical) + "/" + std::to_string(invocations.size()) +
                           " command invocations byte-identical across two runs"};
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    }
    return g_failures;
}
