#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "digicover/maps.hpp"

namespace digicover {

// A lift request: all paths f~ in E with f~(0) = start and p o f~ = base_path.
struct LiftQuery {
    DigitalMap map;      // p : E -> B
    PathSeq base_path;   // in B; stationary steps allowed
    Point start;         // in E, with p(start) == base_path.front()
    std::size_t max_lifts = 1'000'000;
};

struct LiftOverflow : std::runtime_error {
    explicit LiftOverflow(std::size_t cap)
        : std::runtime_error("lift enumeration exceeded the cap of " + std::to_string(cap) +
                             " lifts") {}
};

// The complete list of lifts, found by stepwise branching over
// N(current) /\ p^-1(next base point). Deterministic order (branch targets
// ascending). Throws on precondition violations and on cap overflow.
std::vector<PathSeq> lift_paths(const LiftQuery& q);

struct UplFailure {
    Point point;          // e upstairs
    Point base_neighbor;  // y' in N(p(e))
    int lift_count = 0;   // 0 or >= 2 lifts of the one-step path (p(e), y')
};

struct UplVerdict {
    bool holds = true;
    std::optional<UplFailure> failure;
};

// One-step characterization: p restricted to N(e) is a bijection onto
// N(p(e)) for every e. Requires a continuous surjection.
UplVerdict upl_onestep(const DigitalMap& p);

// Bounded oracle: every base path of at most max_steps steps, from every
// start point in E, has exactly one lift. Exhaustive over base paths,
// tracking the set of partial lifts prefix by prefix. Requires a continuous
// surjection and max_steps >= 1.
UplVerdict upl_bounded(const DigitalMap& p, int max_steps);

// The default bound used by the CLI: |E| + 1.
int default_upl_steps(const DigitalMap& p);

namespace detail {
UplVerdict upl_onestep_core(const DigitalImage& E, const DigitalImage& B,
                            const std::vector<int>& val);
UplVerdict upl_bounded_core(const DigitalImage& E, const DigitalImage& B,
                            const std::vector<int>& val, int max_steps);
}  // namespace detail

}  // namespace digicover
