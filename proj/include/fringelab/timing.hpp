#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "fringelab/constants.hpp"
#include "fringelab/interference.hpp"

namespace fringelab {

struct RunSchedule {
    double t_on_s = 0.0;
    double t_off_s = 0.0;
    double t0_s = 0.0;  // source-to-splitter lead time
    PathConfig paths;
};

inline void validate(const RunSchedule& s) {
    validate(s.paths);
    if (!(s.t_on_s >= 0.0)) throw std::invalid_argument("t_on must be >= 0");
    if (!(s.t_off_s > s.t_on_s)) throw std::invalid_argument("t_off must exceed t_on");
    if (!(s.t0_s >= 0.0)) throw std::invalid_argument("t0 must be >= 0");
}

struct PropagationDelays {
    double t1_s = 0.0;
    double t2_s = 0.0;
    double delta_t_s = 0.0;
};

inline PropagationDelays propagation_delays(const PathConfig& p) {
    validate(p);
    PropagationDelays d;
    d.t1_s = p.refractive_index * p.p1_m / speed_of_light;
    d.t2_s = p.refractive_index * p.p2_m / speed_of_light;
    d.delta_t_s = p.refractive_index * (p.p2_m - p.p1_m) / speed_of_light;
    return d;
}

// One state change of the detector pair; the state holds from t_s until the
// next event. D1 sits at a bright-fringe position, D2 at a dark-fringe one.
struct LogicEvent {
    double t_s = 0.0;
    bool d1 = false;
    bool d2 = false;
    bool and_out = false;
    bool xor_out = false;
};

struct LogicTrace {
    std::vector<LogicEvent> events;  // strictly increasing timestamps
    double t1_s = 0.0;
    double t2_s = 0.0;
    double delta_t_s = 0.0;
    bool degenerate_overlap = false;  // beams never coexist on the screen
    bool interference = false;        // what the overlap predicate decided
};

// Predicate deciding whether fringes are present during the two-beam
// interval; called once with that interval's bounds.
using InterferencePredicate = std::function<bool(double t_begin_s, double t_end_s)>;

// Exact-time run of the switch/detector protocol. Screen phases, in order:
// dark until the short-path beam arrives, uniformly bright single-beam for
// delta_t, the two-beam interval (fringes pin D1 bright / D2 dark when
// interference is active, otherwise the screen stays uniform), single-beam
// again for delta_t after the short path goes dark, then dark. When the
// switch-on time is shorter than delta_t the beams never meet: the trace is
// flagged degenerate and shows two single-beam flashes separated by a gap.
inline LogicTrace simulate_run(const RunSchedule& schedule,
                               const InterferencePredicate& interference_active) {
    validate(schedule);
    const PropagationDelays d = propagation_delays(schedule.paths);
    const double on_time = schedule.t_off_s - schedule.t_on_s;

    LogicTrace trace;
    trace.t1_s = d.t1_s;
    trace.t2_s = d.t2_s;
    trace.delta_t_s = d.delta_t_s;
    trace.degenerate_overlap = d.delta_t_s > 0.0 && on_time <= d.delta_t_s;

    const double arrive1 = schedule.t_on_s + schedule.t0_s + d.t1_s;  // beam 1 reaches screen

    std::vector<LogicEvent> events;
    const auto push_state = [&events](double t, bool d1, bool d2) {
        const auto same_as_back = [&events](bool a, bool b) {
            return !events.empty() && events.back().d1 == a && events.back().d2 == b;
        };
        if (same_as_back(d1, d2)) return;  // merge equal states
        if (!events.empty() && !(t > events.back().t_s)) {
            events.pop_back();  // zero-length segment, drop it
            if (same_as_back(d1, d2)) return;
        }
        events.push_back(LogicEvent{t, d1, d2, d1 && d2, d1 != d2});
    };

    // Leading dark state. When the first beam hits the screen at the switch
    // instant itself there is no physical lead-in; pre-roll one run length so
    // the trace still opens all-zero.
    const double lead_in = schedule.t0_s + d.t1_s > 0.0
                               ? schedule.t_on_s
                               : schedule.t_on_s - (on_time + d.delta_t_s + 1.0);
    push_state(lead_in, false, false);

    if (trace.degenerate_overlap) {
        // Beam 1 alone, gap, beam 2 alone. Each flash lasts the on time.
        push_state(arrive1, true, true);
        push_state(arrive1 + on_time, false, false);
        push_state(arrive1 + d.delta_t_s, true, true);
        push_state(arrive1 + d.delta_t_s + on_time, false, false);
    } else {
        const double two_beam_begin = arrive1 + d.delta_t_s;
        const double two_beam_end = arrive1 + on_time;
        trace.interference =
            interference_active && interference_active(two_beam_begin, two_beam_end);
        push_state(arrive1, true, true);
        push_state(two_beam_begin, true, !trace.interference);
        push_state(two_beam_end, true, true);
        push_state(two_beam_end + d.delta_t_s, false, false);
    }
    trace.events = std::move(events);
    return trace;
}

inline LogicTrace simulate_run(const RunSchedule& schedule, bool interference_active) {
    return simulate_run(schedule, InterferencePredicate([interference_active](double, double) {
                            return interference_active;
                        }));
}

// Durations of the maximal and_out = 1 stretches, in trace order. Two
// stretches of length delta_t for a standard interfering run.
inline std::vector<double> measure_delta_t(const LogicTrace& trace) {
    std::vector<double> durations;
    double begin = 0.0;
    bool open = false;
    for (const auto& e : trace.events) {
        if (e.and_out && !open) {
            begin = e.t_s;
            open = true;
        } else if (!e.and_out && open) {
            durations.push_back(e.t_s - begin);
            open = false;
        }
    }
    return durations;
}

// Total time the xor gate reads 1: the fringe-bearing two-beam time.
inline double measure_interference_duration(const LogicTrace& trace) {
    double total = 0.0;
    double begin = 0.0;
    bool open = false;
    for (const auto& e : trace.events) {
        if (e.xor_out && !open) {
            begin = e.t_s;
            open = true;
        } else if (!e.xor_out && open) {
            total += e.t_s - begin;
            open = false;
        }
    }
    return total;
}

}  // namespace fringelab
