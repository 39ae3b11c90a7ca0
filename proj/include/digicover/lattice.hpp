#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace digicover {

// A lattice point: an n-tuple of integer coordinates, n >= 1.
// Points compare lexicographically (std::vector order), which fixes the
// deterministic enumeration and witness order used throughout.
using Point = std::vector<int>;

std::string to_string(const Point& p);

// c_u adjacency on Z^n: two distinct points are adjacent when at most u
// coordinates differ, each differing coordinate by exactly one.
// Numeric aliases name the same relations in low dimension:
// 2 (Z^1); 4, 8 (Z^2); 6, 18, 26 (Z^3).
struct Adjacency {
    int u = 1;
    int n = 1;

    static Adjacency cu(int u, int n);

    // Accepts the canonical "c1", "c2", ... form (ambient dimension taken
    // from `dim`) or a numeric alias, which fixes both u and n. A nonzero
    // `dim` that contradicts an alias is an error.
    static Adjacency from_name(std::string_view name, int dim = 0);

    std::string name() const;  // canonical "c<u>"

    bool operator==(const Adjacency&) const = default;
};

// True iff x != y, at most adj.u coordinates differ, and every differing
// coordinate differs by exactly 1. Throws on dimension mismatch.
bool adjacent(const Adjacency& adj, const Point& x, const Point& y);

// A finite set of lattice points of common dimension plus an adjacency
// relation; semantically a graph. Immutable after construction: points are
// stored sorted and the punctured neighbor lists are precomputed.
class DigitalImage {
public:
    DigitalImage();  // the empty image in Z^1 under c1
    DigitalImage(int dim, Adjacency adj, std::vector<Point> points);

    int dim() const { return dim_; }
    const Adjacency& adjacency() const { return adj_; }
    const std::vector<Point>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }

    int index_of(const Point& p) const;  // -1 when absent
    bool contains(const Point& p) const { return index_of(p) >= 0; }
    const Point& point(int idx) const { return pts_[idx]; }

    // Punctured neighborhood of pts_[idx], as sorted point indices.
    const std::vector<int>& neighbor_indices(int idx) const { return nbrs_[idx]; }
    bool adjacent_indices(int i, int j) const;

    // Bit-mask views of neighborhoods; available while size() <= 64.
    bool has_masks() const { return pts_.size() <= 64; }
    std::uint64_t neighbor_mask(int idx) const { return nbr_masks_[idx]; }
    std::uint64_t closed_neighbor_mask(int idx) const {
        return nbr_masks_[idx] | (std::uint64_t{1} << idx);
    }

    bool operator==(const DigitalImage& other) const;

private:
    int dim_ = 1;
    Adjacency adj_{};
    std::vector<Point> pts_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::uint64_t> nbr_masks_;
};

// A path: consecutive entries are equal or adjacent. Stationary steps are
// legal; length m is the number of steps (entries minus one).
using PathSeq = std::vector<Point>;

// N(X,x) with x excluded (punctured) or included. Throws when x is not in X.
std::vector<Point> neighborhood(const DigitalImage& X, const Point& x, bool punctured);

// Every pair of points joined by a path in X. The empty image counts as
// connected (vacuously; the definition never treats the empty case).
bool is_connected(const DigitalImage& X);

// All entries lie in X and consecutive entries are equal or adjacent.
bool is_path(const DigitalImage& X, const PathSeq& S);

enum class CurveClass { NotClosed, ClosedCurve, SimpleClosedCurve };

std::string to_string(CurveClass c);

// Classifies a traversal S = s_0..s_m inside X. Closed: s_0 = s_m and
// s_i != s_j for 0 < |i-j| < m, with at least 3 distinct points (a
// two-step back-and-forth is degenerate, not a closed curve). Simple:
// additionally m >= 4 and each s_i has punctured neighborhood within the
// trace exactly {s_(i-1 mod m), s_(i+1 mod m)}.
// Throws when S is empty, has a single entry, leaves X, or is not a path.
CurveClass classify_curve(const DigitalImage& X, const PathSeq& S);

// A digital image certified as a simple closed curve, together with one
// cyclic traversal (closing repeat included: traversal.front() == back()).
struct SccCurve {
    DigitalImage image;
    PathSeq traversal;

    int length() const { return static_cast<int>(traversal.size()) - 1; }
};

// Constructs a c1 (4-adjacency) simple closed curve in Z^2 with exactly
// `length` points: the unit square for 4, an axis-aligned rectangle
// perimeter with nonempty interior for even lengths >= 8. Lengths that
// admit no such curve (odd, < 4, or 6) raise std::invalid_argument; no
// 6-point set in Z^2 has every point with exactly two 4-neighbors in it.
SccCurve make_scc(const Adjacency& adj, int length);

// The sub-image on `pts`, inheriting X's adjacency. Throws when pts is not
// a subset of X.
DigitalImage subimage(const DigitalImage& X, const std::vector<Point>& pts);
DigitalImage subimage_by_indices(const DigitalImage& X, const std::vector<int>& idxs);

}  // namespace digicover
