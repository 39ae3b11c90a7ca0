#include "digicover/lifting.hpp"

#include <algorithm>

namespace digicover {

namespace {

// closed-neighborhood index walk: e itself plus its neighbors, ascending
template <typename Fn>
void for_closed(const DigitalImage& img, int idx, Fn&& fn) {
    const auto& nb = img.neighbor_indices(idx);
    std::size_t k = 0;
    bool self_done = false;
    while (k < nb.size() || !self_done) {
        if (!self_done && (k == nb.size() || idx < nb[k])) {
            fn(idx);
            self_done = true;
        } else {
            fn(nb[k++]);
        }
    }
}

void require_continuous_surjection(const DigitalMap& p, const char* who) {
    if (!is_continuous(p))
        throw std::invalid_argument(std::string(who) + ": map is not continuous");
    if (!is_surjective(p))
        throw std::invalid_argument(std::string(who) + ": map is not surjective");
}

}  // namespace

std::vector<PathSeq> lift_paths(const LiftQuery& q) {
    const DigitalImage& E = q.map.source();
    const DigitalImage& B = q.map.target();
    const auto& val = q.map.values();

    if (!is_continuous(q.map)) throw std::invalid_argument("lift_paths: map is not continuous");
    if (q.base_path.empty()) throw std::invalid_argument("lift_paths: empty base path");
    if (!is_path(B, q.base_path))
        throw std::invalid_argument("lift_paths: base path is not a path in the target image");
    int start = E.index_of(q.start);
    if (start < 0)
        throw std::invalid_argument("lift_paths: start point is not in the total space");
    std::vector<int> base(q.base_path.size());
    for (std::size_t i = 0; i < base.size(); ++i) base[i] = B.index_of(q.base_path[i]);
    if (val[start] != base[0])
        throw std::invalid_argument("lift_paths: start point does not lie over the base start");

    std::vector<PathSeq> lifts;
    std::vector<int> cur{start};
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos + 1 == base.size()) {
            if (lifts.size() >= q.max_lifts) throw LiftOverflow(q.max_lifts);
            PathSeq lift;
            lift.reserve(cur.size());
            for (int i : cur) lift.push_back(E.point(i));
            lifts.push_back(std::move(lift));
            return;
        }
        int next_b = base[pos + 1];
        for_closed(E, cur.back(), [&](int e) {
            if (val[e] != next_b) return;
            cur.push_back(e);
            self(self, pos + 1);
            cur.pop_back();
        });
    };
    rec(rec, 0);
    return lifts;
}

namespace detail {

UplVerdict upl_onestep_core(const DigitalImage& E, const DigitalImage& B,
                            const std::vector<int>& val) {
    const int n = static_cast<int>(E.size());
    for (int e = 0; e < n; ++e) {
        UplVerdict bad;
        for_closed(B, val[e], [&](int y) {
            if (!bad.holds) return;
            int count = 0;
            for_closed(E, e, [&](int e2) { count += val[e2] == y; });
            if (count != 1) {
                bad.holds = false;
                bad.failure = UplFailure{E.point(e), B.point(y), count};
            }
        });
        if (!bad.holds) return bad;
    }
    return {};
}

UplVerdict upl_bounded_core(const DigitalImage& E, const DigitalImage& B,
                            const std::vector<int>& val, int max_steps) {
    // DFS over all base paths; the partial-lift list starts as the single
    // path (e0) and every prefix must keep exactly one lift, so the list
    // stays a single endpoint until a violation is met.
    UplVerdict bad;
    auto walk = [&](auto&& self, int lift_end, int depth) -> bool {
        if (depth == max_steps) return true;
        bool ok = true;
        for_closed(B, val[lift_end], [&](int y) {
            if (!ok) return;
            int count = 0;
            int next = -1;
            for_closed(E, lift_end, [&](int e2) {
                if (val[e2] == y) {
                    ++count;
                    if (next < 0) next = e2;
                }
            });
            if (count != 1) {
                bad.holds = false;
                bad.failure = UplFailure{E.point(lift_end), B.point(y), count};
                ok = false;
                return;
            }
            if (!self(self, next, depth + 1)) ok = false;
        });
        return ok;
    };
    for (int e0 = 0; e0 < static_cast<int>(E.size()); ++e0)
        if (!walk(walk, e0, 0)) return bad;
    return {};
}

}  // namespace detail

UplVerdict upl_onestep(const DigitalMap& p) {
    require_continuous_surjection(p, "upl_onestep");
    return detail::upl_onestep_core(p.source(), p.target(), p.values());
}

UplVerdict upl_bounded(const DigitalMap& p, int max_steps) {
    require_continuous_surjection(p, "upl_bounded");
    if (max_steps < 1) throw std::invalid_argument("upl_bounded: max_steps must be >= 1");
    return detail::upl_bounded_core(p.source(), p.target(), p.values(), max_steps);
}

int default_upl_steps(const DigitalMap& p) { return static_cast<int>(p.source().size()) + 1; }

}  // namespace digicover
