#include "qchan/frames.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qchan {

namespace {

constexpr double kLightlikeTol = 1e-12;

EventOrder order_of(double t_i, double t_ii) {
    if (t_i < t_ii) return EventOrder::IBeforeII;
    if (t_ii < t_i) return EventOrder::IIBeforeI;
    return EventOrder::Simultaneous;
}

}  // namespace

Event boost(const Event& e, const FrameBoost& frame) {
    if (!(std::abs(frame.beta) < 1.0)) {
        throw std::invalid_argument("boost: |beta| must be < 1, got " + std::to_string(frame.beta));
    }
    const double gamma = 1.0 / std::sqrt(1.0 - frame.beta * frame.beta);
    return Event{e.label, gamma * (e.t - frame.beta * e.x), gamma * (e.x - frame.beta * e.t)};
}

IntervalType classify_interval(const Event& a, const Event& b) {
    const double dt = b.t - a.t;
    const double dx = b.x - a.x;
    const double interval = dt * dt - dx * dx;
    if (std::abs(interval) <= kLightlikeTol) return IntervalType::Lightlike;
    return interval > 0.0 ? IntervalType::Timelike : IntervalType::Spacelike;
}

std::optional<FrameBoost> find_reordering_boost(const Event& event_i, const Event& event_ii) {
    if (event_i.t == event_ii.t && event_i.x == event_ii.x) {
        throw std::invalid_argument("find_reordering_boost: events must be distinct");
    }
    if (classify_interval(event_i, event_ii) != IntervalType::Spacelike) return std::nullopt;
    const double dt = event_ii.t - event_i.t;
    const double dx = event_ii.x - event_i.x;  // nonzero: spacelike implies |dx| > |dt|
    // t'_II - t'_I = gamma (dt - beta dx) flips sign once beta passes dt/dx
    // on the side of sign(dx); take the midpoint to the light cone.
    const double beta = 0.5 * (dt / dx + (dx > 0.0 ? 1.0 : -1.0));
    return FrameBoost{beta};
}

std::pair<Event, Event> default_events() {
    return {Event{EventLabel::EventI, 1.0, 0.0}, Event{EventLabel::EventII, 1.2, 5.0}};
}

ScenarioReport audit(const DensityOperator& rho_c, const Event& event_i, const Event& event_ii) {
    if (event_i.label != EventLabel::EventI || event_ii.label != EventLabel::EventII) {
        throw std::invalid_argument("audit: events passed in the wrong order");
    }

    const TeleportReport tele = run_teleport(rho_c);

    const IntervalType interval = classify_interval(event_i, event_ii);
    const std::optional<FrameBoost> reorder = find_reordering_boost(event_i, event_ii);
    const FrameBoost frame = reorder.value_or(FrameBoost{0.0});
    const Event boosted_i = boost(event_i, frame);
    const Event boosted_ii = boost(event_ii, frame);

    std::optional<std::pair<double, double>> window;
    if (boosted_ii.t < boosted_i.t) window = std::make_pair(boosted_ii.t, boosted_i.t);

    // The audited argument asserts: within the window, B already holds the
    // teleported state and C still holds the input. The first is the
    // computed B marginal; the second is an assertion, not a computation.
    const DensityOperator& asserted_b = tele.b_marginal;
    const DensityOperator& asserted_c = rho_c;
    const bool pattern = trace_distance(asserted_b, rho_c) <= kStateEqTol &&
                         trace_distance(asserted_c, rho_c) <= kStateEqTol;

    // The clone condition on C fails for every input except the maximally
    // mixed fixed point, so the asserted simultaneous pair is never the pair
    // of post-channel marginals the cloning pattern would require.
    const Verdict verdict =
        tele.dist_c > kStateEqTol ? Verdict::NoContradiction : Verdict::ForbiddenPattern;

    std::array<SignalEntry, 4> signal;
    const std::array<std::string, 4>& labels = correction_labels();
    const std::array<std::string, 4> bits = {"00", "01", "10", "11"};
    for (int i = 0; i < 4; ++i) signal[i] = SignalEntry{bits[i], labels[i]};

    std::vector<std::string> notes;
    notes.emplace_back("window convention: times t with t_II < t < t_I (correction before measurement)");
    notes.emplace_back("event I = Bell measurement on A,C; event II = correction on B (modeling choice)");
    if (verdict == Verdict::ForbiddenPattern) {
        notes.emplace_back(
            "boundary case: the maximally mixed input is the fixed point of the C-marginal map");
    }

    return ScenarioReport{order_of(event_i.t, event_ii.t),
                          order_of(boosted_i.t, boosted_ii.t),
                          interval,
                          reorder ? std::optional<double>(frame.beta) : std::nullopt,
                          window,
                          rho_c,
                          asserted_b,
                          asserted_c,
                          pattern,
                          tele.c_marginal,
                          tele.dist_c,
                          verdict,
                          verdict == Verdict::ForbiddenPattern,
                          signal,
                          std::move(notes)};
}

}  // namespace qchan
