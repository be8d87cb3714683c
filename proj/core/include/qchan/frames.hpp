#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qchan/states.hpp"
#include "qchan/teleport.hpp"

namespace qchan {

// 1+1-dimensional spacetime events in natural units (c = 1). Event I is the
// joint Bell measurement on A and C; event II is the conditional correction
// on B. That assignment is a modeling choice and is echoed in report notes.
enum class EventLabel { EventI, EventII };

struct Event {
    EventLabel label;
    double t;
    double x;
};

// Velocity of a frame as a fraction of c; |beta| < 1.
struct FrameBoost {
    double beta;
};

enum class IntervalType { Spacelike, Timelike, Lightlike };
enum class EventOrder { IBeforeII, IIBeforeI, Simultaneous };
enum class Verdict { NoContradiction, ForbiddenPattern };

// Standard Lorentz transform t' = gamma (t - beta x), x' = gamma (x - beta t).
Event boost(const Event& e, const FrameBoost& frame);

IntervalType classify_interval(const Event& a, const Event& b);

// For a spacelike pair, a frame in which event II precedes event I: beta is
// the midpoint between the minimal reordering velocity dt/dx and the light
// cone, deterministically. Timelike and lightlike pairs have frame-invariant
// ordering, so none exists.
std::optional<FrameBoost> find_reordering_boost(const Event& event_i, const Event& event_ii);

// One classical signal entry: which Bell outcome occurred (2 bits) and which
// correction it selects on B. The signal's only function is to coordinate
// the two sets; no dynamics attaches to it.
struct SignalEntry {
    std::string outcome_bits;  // "00".."11"
    std::string correction;    // Pauli name
};

// Full record of the frame-ordering audit for one input state: kinematics
// of the event pair, the marginal assertions made by the argument under
// audit, the actually computed post-channel C marginal, and the verdict.
struct ScenarioReport {
    EventOrder rest_order;
    EventOrder boosted_order;
    IntervalType interval_type;
    std::optional<double> boost_beta;           // reordering frame, when one exists
    std::optional<std::pair<double, double>> window;  // (t_lo, t_hi) with II before I
    DensityOperator input_state;                // rho_C
    DensityOperator asserted_b_marginal;        // the argument's in-window B state
    DensityOperator asserted_c_marginal;        // the argument's in-window C state (rho_C by fiat)
    bool asserted_clone_pattern;                // both asserted marginals equal rho_C
    DensityOperator actual_c_after;             // computed post-channel C marginal
    double dist_actual_c;                       // trace_distance(actual_c_after, rho_C)
    Verdict verdict;
    bool boundary_case;                         // maximally mixed input fixed point
    std::array<SignalEntry, 4> signal;
    std::vector<std::string> notes;
};

// Runs the teleportation channel on rho_c and confronts the frame-ordering
// argument with it: the asserted in-window pair is (B marginal, rho_C by
// fiat), while the computed post-channel C marginal differs from rho_C for
// every input except the maximally mixed fixed point. The verdict therefore
// never turns on the kinematics.
ScenarioReport audit(const DensityOperator& rho_c, const Event& event_i, const Event& event_ii);

// Default demonstration pair: spacelike separated, correction after
// measurement in the rest frame, so a reordering frame exists.
std::pair<Event, Event> default_events();

}  // namespace qchan
