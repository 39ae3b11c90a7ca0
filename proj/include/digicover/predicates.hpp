#pragma once

#include <optional>
#include <string>
#include <vector>

#include "digicover/lifting.hpp"
#include "digicover/maps.hpp"

namespace digicover {

enum class Verdict { Holds, Fails, NotApplicable };

std::string to_string(Verdict v);

// A sheet decomposition of p^-1(N(b)) (or a sub-family of it, for the
// pseudo-covering variants): the chosen fiber points e_i and their closed
// neighborhoods.
struct SheetDecomposition {
    Point base_point;
    std::vector<Point> sheet_centers;
    std::vector<std::vector<Point>> sheets;
};

// Outcome of one predicate check. Every failure carries a concrete
// counterwitness; a covering-style success carries one decomposition per
// base point. NotApplicable records which precondition was unmet.
struct CheckResult {
    Verdict verdict = Verdict::NotApplicable;
    std::string reason;
    std::optional<Point> witness_point;                  // failing x or base point
    std::optional<std::pair<Point, Point>> witness_pair; // continuity violation
    std::optional<UplFailure> upl_failure;
    std::vector<SheetDecomposition> decompositions;

    bool holds() const { return verdict == Verdict::Holds; }
    bool fails() const { return verdict == Verdict::Fails; }
    bool applicable() const { return verdict != Verdict::NotApplicable; }
};

CheckResult continuity_result(const DigitalMap& f);
CheckResult isomorphism_result(const DigitalMap& f);

// Covering map: continuous surjection such that every base neighborhood
// pulls back to a disjoint union of sheets, each mapped isomorphically onto
// it. The index set is searched over all nonempty fiber subsets.
// NotApplicable when p is not a continuous surjection.
CheckResult is_covering(const DigitalMap& p);

// Local isomorphism: h restricted to N(x), corestricted to N(h(x)), is an
// isomorphism for every x. NotApplicable when h is not continuous.
CheckResult is_local_isomorphism(const DigitalMap& h);

// PL-isomorphism: h(N(x)) is abstractly isomorphic to N(h(x)) as sub-images
// of the target. NotApplicable when h is not continuous.
CheckResult is_pl_isomorphism(const DigitalMap& h);

// WL-isomorphism: h restricted to N(x) is an isomorphism onto its own image
// for every x. NotApplicable when h is not continuous.
CheckResult is_wl_isomorphism(const DigitalMap& h);

// Han pseudo-covering: surjection (continuity not assumed) such that every
// base neighborhood pulls back to a disjoint union of closed neighborhoods
// of fiber points, with each sheet restriction a WL-isomorphism into N(b).
// NotApplicable when p is not surjective.
CheckResult is_han_pseudocovering(const DigitalMap& p);

// Pakdaman pseudo-covering: surjection with, for every b, a nonempty fiber
// subset whose closed neighborhoods are pairwise disjoint, contained in
// p^-1(N(b)), and each mapped isomorphically onto its own image.
// NotApplicable when p is not surjective.
CheckResult is_pak_pseudocovering(const DigitalMap& p);

// Unique path lifting via the one-step characterization. NotApplicable when
// p is not a continuous surjection.
CheckResult upl_result(const DigitalMap& p);

// Bounded-oracle variant of the same check.
CheckResult upl_bounded_result(const DigitalMap& p, int max_steps);

struct ClassificationReport {
    CheckResult continuous;
    CheckResult isomorphism;
    CheckResult covering;
    CheckResult local_iso;
    CheckResult pl_iso;
    CheckResult wl_iso;
    CheckResult han_pseudo;
    CheckResult pak_pseudo;
    CheckResult upl;
};

// Evaluates every predicate whose preconditions hold and marks the rest
// not-applicable. upl uses the one-step characterization.
ClassificationReport classify(const DigitalMap& p);

// CLI-facing names: continuous, isomorphism, covering, local-iso, pl-iso,
// wl-iso, han-pseudo, pak-pseudo, upl.
const std::vector<std::string>& predicate_names();
CheckResult run_predicate(const DigitalMap& p, std::string_view name, int upl_steps = -1);

namespace detail {

// Precondition-free cores used by the exhaustive sweeps. covering / local /
// pl / wl assume a continuous map; han / pak assume a surjection.
bool covering_holds(const DigitalImage& E, const DigitalImage& B, const std::vector<int>& val);
bool local_iso_holds(const DigitalImage& X, const DigitalImage& Y, const std::vector<int>& val);
bool pl_iso_holds(const DigitalImage& X, const DigitalImage& Y, const std::vector<int>& val);
bool wl_iso_holds(const DigitalImage& X, const DigitalImage& Y, const std::vector<int>& val);
bool han_holds(const DigitalImage& E, const DigitalImage& B, const std::vector<int>& val);
bool pak_holds(const DigitalImage& E, const DigitalImage& B, const std::vector<int>& val);

}  // namespace detail

}  // namespace digicover
