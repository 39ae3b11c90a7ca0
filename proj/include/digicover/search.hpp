#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "digicover/predicates.hpp"

namespace digicover {

// Bounds for the exhaustive sweeps: all point subsets of the box
// [0,box[0]) x ... with at most max_points points, deduplicated up to
// lattice translation, paired with each requested adjacency.
struct EnumBounds {
    std::vector<int> box;
    int max_points = 5;
    std::vector<Adjacency> adjacencies;
    bool require_connected = true;
    bool require_surjective = true;
    bool require_continuous = true;
    long long map_candidate_cap = 10'000'000;
};

// Defaults used by the CLI and the theorem sweep: 3x3 box, <= 5 points,
// {c1, c2}, connected images.
EnumBounds default_bounds();

struct EnumerationOverflow : std::runtime_error {
    explicit EnumerationOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Streams images in deterministic order: subset size, then lexicographic
// point order, then requested-adjacency order. Returning false from the
// visitor stops the stream early. Returns false when stopped early.
bool enumerate_images(const EnumBounds& b, const std::function<bool(const DigitalImage&)>& yield);
std::vector<DigitalImage> list_images(const EnumBounds& b);

// Streams the total maps X -> Y matching the bounds filters as value-index
// vectors, in lexicographic order. Throws EnumerationOverflow when
// |Y|^|X| exceeds the candidate cap.
bool enumerate_map_values(const DigitalImage& X, const DigitalImage& Y, const EnumBounds& b,
                          const std::function<bool(const std::vector<int>&)>& yield);
bool enumerate_maps(const DigitalImage& X, const DigitalImage& Y, const EnumBounds& b,
                    const std::function<bool(const DigitalMap&)>& yield);

struct EquivalenceViolation {
    DigitalMap map;
    std::string property;  // which claim broke
    std::string detail;    // evaluated predicate values
};

struct EquivalenceReport {
    long long images = 0;
    long long pairs = 0;
    long long instances_checked = 0;  // continuous surjections evaluated
    // disagreements among {covering, local-iso, Han pseudo-covering,
    // WL-iso and UPL}; empty iff the four classes coincided everywhere
    std::vector<EquivalenceViolation> violations;
    // broken one-directional claims: local=>pl, covering=>pak, covering=>upl
    std::vector<EquivalenceViolation> one_directional_violations;
    // optional probe over discontinuous surjections: how many of them
    // satisfy the Han pseudo-covering clauses (the definition does not
    // state continuity)
    bool probed_han_continuity = false;
    long long discontinuous_surjections_probed = 0;
    long long discontinuous_han_pseudocoverings = 0;
    std::chrono::milliseconds elapsed{0};
};

// Machine check of the four-way equivalence and the one-directional
// theorems over every continuous surjection between images in bounds.
// workers = 0 resolves DIGICOVER_WORKERS, then hardware concurrency.
EquivalenceReport verify_cover_equivalences(const EnumBounds& b, int workers = 0,
                                            bool probe_han_continuity = false);

// Tri-state constraints over the predicate vector; unset means "any".
struct PredicateWant {
    std::optional<bool> continuous;
    std::optional<bool> wl;
    std::optional<bool> pl;
    std::optional<bool> local;
    std::optional<bool> covering;
    std::optional<bool> han;
    std::optional<bool> pak;
    std::optional<bool> upl;
};

PredicateWant parse_want(std::string_view spec);  // "wl=true,pl=false"
std::string to_string(const PredicateWant& w);

struct CounterexampleQuery {
    PredicateWant want;
    EnumBounds source;
    EnumBounds target;                        // ignored when fixed_target is set
    std::optional<DigitalImage> fixed_target;
};

// First corpus instance (source images x target images x maps, in
// enumeration order) whose evaluated predicates match the constraints; a
// constrained predicate whose preconditions fail never matches. The match
// is re-evaluated from scratch before being returned.
std::optional<DigitalMap> find_counterexample(const CounterexampleQuery& q, int workers = 0);

// Some injection S1 -> S2 is an isomorphism onto its image. Both inputs
// must certify as simple closed curves.
bool scc_embeds(const SccCurve& s1, const SccCurve& s2);

// requested > 0 wins; else DIGICOVER_WORKERS; else hardware concurrency.
int resolve_workers(int requested);

}  // namespace digicover
