#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "digicover/lattice.hpp"

namespace digicover {

// A total function between the point sets of two digital images, stored
// extensionally. Source and target may live in different ambient
// dimensions; only the two adjacencies matter. Immutable.
class DigitalMap {
public:
    DigitalMap(DigitalImage source, DigitalImage target,
               const std::vector<std::pair<Point, Point>>& pairs);

    // values[i] is the target point index of source point i.
    static DigitalMap from_values(DigitalImage source, DigitalImage target,
                                  std::vector<int> values);

    const DigitalImage& source() const { return src_; }
    const DigitalImage& target() const { return dst_; }
    const std::vector<int>& values() const { return val_; }
    int value_index(int src_idx) const { return val_[src_idx]; }

    const Point& apply(const Point& x) const;
    std::vector<std::pair<Point, Point>> pairs() const;  // sorted by source point

    bool operator==(const DigitalMap& other) const;

private:
    DigitalMap() = default;

    DigitalImage src_;
    DigitalImage dst_;
    std::vector<int> val_;
};

struct ContinuityCheck {
    bool continuous = true;
    // first violating adjacent source pair, in lexicographic pair order
    std::optional<std::pair<Point, Point>> violating_pair;
};

// Adjacency criterion: x <-> x' implies f(x) = f(x') or f(x) <-> f(x').
ContinuityCheck check_continuity(const DigitalMap& f);
bool is_continuous(const DigitalMap& f);

// Definition-level oracle: every connected subset of the source has a
// connected image. Exponential in |source|; intended as a cross-check on
// small maps (throws beyond 20 source points).
bool is_continuous_by_connectedness(const DigitalMap& f);

bool is_surjective(const DigitalMap& f);
bool is_injective(const DigitalMap& f);

// Continuous bijection with continuous inverse.
bool is_isomorphism(const DigitalMap& f);

DigitalMap inverse(const DigitalMap& f);               // requires a bijection
DigitalMap compose(const DigitalMap& g, const DigitalMap& f);  // g after f

// f with its source cut down to `subset` (inherited adjacency); the target
// is unchanged.
DigitalMap restrict_to(const DigitalMap& f, const std::vector<Point>& subset);

// f with its target cut down to the image f(source).
DigitalMap corestrict_to_image(const DigitalMap& f);

// The same point sets and table under different adjacencies.
DigitalMap with_adjacencies(const DigitalMap& f, std::optional<Adjacency> src,
                            std::optional<Adjacency> dst);

struct SubimageIso {
    bool isomorphic = false;
    std::vector<std::pair<Point, Point>> bijection;  // witness when isomorphic
};

// Abstract isomorphism of the induced graphs, decided by exhaustive search
// over bijections with a degree-sequence prune. The two images may use
// unrelated adjacencies.
SubimageIso subimages_isomorphic(const DigitalImage& a, const DigitalImage& b);

namespace detail {

// First violating adjacent source pair (i < j) under the adjacency
// criterion, or nullopt when continuous. Raw-value form shared by the
// search sweeps.
std::optional<std::pair<int, int>> continuity_violation(const DigitalImage& src,
                                                        const DigitalImage& dst,
                                                        const std::vector<int>& val);

bool surjective(const DigitalImage& dst, const std::vector<int>& val);

// Is the restriction of the map to `dom` an isomorphism onto `cod`?
// dom: sorted source indices; cod: sorted target indices.
bool restriction_is_iso(const DigitalImage& src, const DigitalImage& dst,
                        const std::vector<int>& val, const std::vector<int>& dom,
                        const std::vector<int>& cod);

// Is the restriction to `dom` an isomorphism onto its own image?
bool restriction_is_iso_onto_image(const DigitalImage& src, const DigitalImage& dst,
                                   const std::vector<int>& val, const std::vector<int>& dom);

std::vector<int> image_of(const std::vector<int>& val, const std::vector<int>& dom);

// Induced-subgraph isomorphism of two index sets inside one image.
bool induced_isomorphic(const DigitalImage& img, const std::vector<int>& a,
                        const std::vector<int>& b);

}  // namespace detail

}  // namespace digicover
