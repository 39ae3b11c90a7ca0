#include "digicover/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace digicover {

EnumBounds default_bounds() {
    EnumBounds b;
    b.box = {3, 3};
    b.max_points = 5;
    b.adjacencies = {Adjacency::cu(1, 2), Adjacency::cu(2, 2)};
    b.require_connected = true;
    return b;
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DIGICOVER_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

void validate_bounds(const EnumBounds& b) {
    if (b.box.empty() || b.box.size() > 3)
        throw std::invalid_argument("bounds: box must have 1 to 3 axes");
    for (int e : b.box)
        if (e < 1) throw std::invalid_argument("bounds: box extents must be >= 1");
    if (b.max_points < 1) throw std::invalid_argument("bounds: max_points must be >= 1");
    if (b.adjacencies.empty()) throw std::invalid_argument("bounds: no adjacencies requested");
    for (const auto& a : b.adjacencies)
        if (a.n != static_cast<int>(b.box.size()))
            throw std::invalid_argument("bounds: adjacency " + a.name() + " is for Z^" +
                                        std::to_string(a.n) + " but the box has " +
                                        std::to_string(b.box.size()) + " axes");
    long long cells = 1;
    for (int e : b.box) cells *= e;
    if (cells > 62) throw std::invalid_argument("bounds: box has too many cells (max 62)");
}

std::vector<Point> box_cells(const std::vector<int>& box) {
    std::vector<Point> cells;
    Point cur(box.size(), 0);
    while (true) {
        cells.push_back(cur);
        int axis = static_cast<int>(box.size()) - 1;
        while (axis >= 0) {
            if (++cur[axis] < box[axis]) break;
            cur[axis] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

bool translation_normalized(const std::vector<Point>& pts) {
    const std::size_t dim = pts.front().size();
    for (std::size_t axis = 0; axis < dim; ++axis) {
        int mn = pts.front()[axis];
        for (const Point& p : pts) mn = std::min(mn, p[axis]);
        if (mn != 0) return false;
    }
    return true;
}

bool subset_connected(const std::vector<Point>& pts, const Adjacency& adj) {
    const int k = static_cast<int>(pts.size());
    std::vector<char> seen(k, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < k; ++j)
            if (!seen[j] && adjacent(adj, pts[i], pts[j])) {
                seen[j] = 1;
                ++visited;
                stack.push_back(j);
            }
    }
    return visited == k;
}

}  // namespace

bool enumerate_images(const EnumBounds& b, const std::function<bool(const DigitalImage&)>& yield) {
    validate_bounds(b);
    const std::vector<Point> cells = box_cells(b.box);
    const int n = static_cast<int>(cells.size());
    const int dim = static_cast<int>(b.box.size());

    for (int k = 1; k <= std::min(b.max_points, n); ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            std::vector<Point> pts;
            pts.reserve(k);
            for (int i : comb) pts.push_back(cells[i]);
            if (translation_normalized(pts)) {
                for (const Adjacency& adj : b.adjacencies) {
                    if (b.require_connected && !subset_connected(pts, adj)) continue;
                    if (!yield(DigitalImage(dim, adj, pts))) return false;
                }
            }
            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return true;
}

std::vector<DigitalImage> list_images(const EnumBounds& b) {
    std::vector<DigitalImage> out;
    enumerate_images(b, [&](const DigitalImage& img) {
        out.push_back(img);
        return true;
    });
    return out;
}

bool enumerate_map_values(const DigitalImage& X, const DigitalImage& Y, const EnumBounds& b,
                          const std::function<bool(const std::vector<int>&)>& yield) {
    const int n = static_cast<int>(X.size());
    const int m = static_cast<int>(Y.size());
    if (n == 0 || m == 0) return true;

    long long candidates = 1;
    for (int i = 0; i < n; ++i) {
        candidates *= m;
        if (candidates > b.map_candidate_cap)
            throw EnumerationOverflow("map enumeration: " + std::to_string(X.size()) +
                                      " -> " + std::to_string(Y.size()) +
                                      " points exceeds the cap of " +
                                      std::to_string(b.map_candidate_cap) + " candidates");
    }

    std::vector<int> val(n, -1);
    std::vector<int> hits(m, 0);
    int missing = m;

    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) {
            if (b.require_surjective && missing > 0) return true;
            return yield(val);
        }
        if (b.require_surjective && missing > n - i) return true;  // cannot cover the rest
        for (int v = 0; v < m; ++v) {
            if (b.require_continuous) {
                bool ok = true;
                for (int j : X.neighbor_indices(i)) {
                    if (j >= i) break;  // neighbor list is sorted
                    if (val[j] != v && !Y.adjacent_indices(val[j], v)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
            }
            val[i] = v;
            if (hits[v]++ == 0) --missing;
            bool keep_going = self(self, i + 1);
            if (--hits[v] == 0) ++missing;
            val[i] = -1;
            if (!keep_going) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

bool enumerate_maps(const DigitalImage& X, const DigitalImage& Y, const EnumBounds& b,
                    const std::function<bool(const DigitalMap&)>& yield) {
    return enumerate_map_values(X, Y, b, [&](const std::vector<int>& val) {
        return yield(DigitalMap::from_values(X, Y, val));
    });
}

namespace {

std::string predicate_vector_string(bool cov, bool loc, bool han, bool wl, bool upl, bool pl,
                                    bool pak) {
    std::string s;
    auto tf = [](bool v) { return v ? "T" : "F"; };
    s += "covering=";
    s += tf(cov);
    s += " local=";
    s += tf(loc);
    s += " han=";
    s += tf(han);
    s += " wl=";
    s += tf(wl);
    s += " upl=";
    s += tf(upl);
    s += " pl=";
    s += tf(pl);
    s += " pak=";
    s += tf(pak);
    return s;
}

bool violation_less(const EquivalenceViolation& a, const EquivalenceViolation& b) {
    auto key = [](const EquivalenceViolation& v) {
        return std::make_tuple(v.map.source().points(), v.map.source().adjacency().u,
                               v.map.target().points(), v.map.target().adjacency().u,
                               v.map.values(), v.property);
    };
    return key(a) < key(b);
}

}  // namespace

EquivalenceReport verify_cover_equivalences(const EnumBounds& b, int workers,
                                            bool probe_han_continuity) {
    const auto t0 = std::chrono::steady_clock::now();
    EquivalenceReport report;
    report.probed_han_continuity = probe_han_continuity;

    const std::vector<DigitalImage> imgs = list_images(b);
    report.images = static_cast<long long>(imgs.size());
    const long long npairs = report.images * report.images;
    report.pairs = npairs;

    const int nworkers =
        static_cast<int>(std::max<long long>(1, std::min<long long>(resolve_workers(workers), npairs)));

    std::atomic<long long> next_pair{0};
    std::atomic<long long> instances{0};
    std::atomic<long long> probed{0};
    std::atomic<long long> probe_hits{0};
    std::mutex merge_mutex;
    std::vector<EquivalenceViolation> violations;
    std::vector<EquivalenceViolation> oneway;

    EnumBounds map_bounds = b;
    map_bounds.require_surjective = true;
    map_bounds.require_continuous = !probe_han_continuity;

    auto work = [&]() {
        std::vector<EquivalenceViolation> local_viol, local_oneway;
        long long local_instances = 0, local_probed = 0, local_hits = 0;
        for (;;) {
            long long pair = next_pair.fetch_add(1);
            if (pair >= npairs) break;
            const DigitalImage& X = imgs[pair / report.images];
            const DigitalImage& Y = imgs[pair % report.images];
            if (X.size() < Y.size()) continue;  // no surjection
            enumerate_map_values(X, Y, map_bounds, [&](const std::vector<int>& val) {
                const bool cont = !detail::continuity_violation(X, Y, val).has_value();
                if (!cont) {
                    // open probe: does the Han pseudo-covering definition
                    // force continuity on its own?
                    ++local_probed;
                    if (detail::han_holds(X, Y, val)) ++local_hits;
                    return true;
                }
                ++local_instances;
                const bool cov = detail::covering_holds(X, Y, val);
                const bool loc = detail::local_iso_holds(X, Y, val);
                const bool han = detail::han_holds(X, Y, val);
                const bool wl = detail::wl_iso_holds(X, Y, val);
                const bool upl = detail::upl_onestep_core(X, Y, val).holds;
                const bool wl_upl = wl && upl;
                const bool pl = detail::pl_iso_holds(X, Y, val);
                const bool pak = detail::pak_holds(X, Y, val);

                if (!(cov == loc && loc == han && han == wl_upl))
                    local_viol.push_back({DigitalMap::from_values(X, Y, val),
                                          "four-class-equivalence",
                                          predicate_vector_string(cov, loc, han, wl, upl, pl, pak)});
                if (loc && !pl)
                    local_oneway.push_back({DigitalMap::from_values(X, Y, val), "local=>pl",
                                            predicate_vector_string(cov, loc, han, wl, upl, pl, pak)});
                if (cov && !pak)
                    local_oneway.push_back({DigitalMap::from_values(X, Y, val), "covering=>pak",
                                            predicate_vector_string(cov, loc, han, wl, upl, pl, pak)});
                if (cov && !upl)
                    local_oneway.push_back({DigitalMap::from_values(X, Y, val), "covering=>upl",
                                            predicate_vector_string(cov, loc, han, wl, upl, pl, pak)});
                return true;
            });
        }
        instances += local_instances;
        probed += local_probed;
        probe_hits += local_hits;
        std::lock_guard<std::mutex> lock(merge_mutex);
        violations.insert(violations.end(), local_viol.begin(), local_viol.end());
        oneway.insert(oneway.end(), local_oneway.begin(), local_oneway.end());
    };

    if (nworkers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (int i = 0; i < nworkers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    report.instances_checked = instances.load();
    report.discontinuous_surjections_probed = probed.load();
    report.discontinuous_han_pseudocoverings = probe_hits.load();
    std::sort(violations.begin(), violations.end(), violation_less);
    std::sort(oneway.begin(), oneway.end(), violation_less);
    report.violations = std::move(violations);
    report.one_directional_violations = std::move(oneway);
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return report;
}

namespace {

bool want_matches(const PredicateWant& w, const DigitalImage& X, const DigitalImage& Y,
                  const std::vector<int>& val) {
    const bool cont = !detail::continuity_violation(X, Y, val).has_value();
    if (w.continuous && *w.continuous != cont) return false;
    const bool surj = detail::surjective(Y, val);

    // a constrained predicate with an unmet precondition never matches
    auto gated = [](const std::optional<bool>& want, bool pre, auto&& eval) {
        if (!want) return true;
        if (!pre) return false;
        return *want == eval();
    };
    if (!gated(w.wl, cont, [&] { return detail::wl_iso_holds(X, Y, val); })) return false;
    if (!gated(w.pl, cont, [&] { return detail::pl_iso_holds(X, Y, val); })) return false;
    if (!gated(w.local, cont, [&] { return detail::local_iso_holds(X, Y, val); })) return false;
    if (!gated(w.covering, cont && surj, [&] { return detail::covering_holds(X, Y, val); }))
        return false;
    if (!gated(w.han, surj, [&] { return detail::han_holds(X, Y, val); })) return false;
    if (!gated(w.pak, surj, [&] { return detail::pak_holds(X, Y, val); })) return false;
    if (!gated(w.upl, cont && surj, [&] { return detail::upl_onestep_core(X, Y, val).holds; }))
        return false;
    return true;
}

}  // namespace

PredicateWant parse_want(std::string_view spec) {
    PredicateWant w;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string_view::npos) comma = spec.size();
        std::string_view item = spec.substr(pos, comma - pos);
        pos = comma + 1;
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("want: expected key=value, got \"" + std::string(item) +
                                        "\"");
        std::string_view key = item.substr(0, eq);
        std::string_view value = item.substr(eq + 1);
        bool v;
        if (value == "true" || value == "1")
            v = true;
        else if (value == "false" || value == "0")
            v = false;
        else
            throw std::invalid_argument("want: value for \"" + std::string(key) +
                                        "\" must be true or false");
        if (key == "continuous")
            w.continuous = v;
        else if (key == "wl")
            w.wl = v;
        else if (key == "pl")
            w.pl = v;
        else if (key == "local")
            w.local = v;
        else if (key == "covering")
            w.covering = v;
        else if (key == "han")
            w.han = v;
        else if (key == "pak")
            w.pak = v;
        else if (key == "upl")
            w.upl = v;
        else
            throw std::invalid_argument("want: unknown predicate \"" + std::string(key) + "\"");
    }
    return w;
}

std::string to_string(const PredicateWant& w) {
    std::string out;
    auto add = [&](const char* name, const std::optional<bool>& v) {
        if (!v) return;
        if (!out.empty()) out += ',';
        out += name;
        out += '=';
        out += *v ? "true" : "false";
    };
    add("continuous", w.continuous);
    add("wl", w.wl);
    add("pl", w.pl);
    add("local", w.local);
    add("covering", w.covering);
    add("han", w.han);
    add("pak", w.pak);
    add("upl", w.upl);
    return out;
}

std::optional<DigitalMap> find_counterexample(const CounterexampleQuery& q, int workers) {
    const PredicateWant& w = q.want;
    const std::vector<DigitalImage> sources = list_images(q.source);
    const std::vector<DigitalImage> targets =
        q.fixed_target ? std::vector<DigitalImage>{*q.fixed_target} : list_images(q.target);
    if (sources.empty() || targets.empty()) return std::nullopt;

    // enumeration-level filters implied by the constraints
    EnumBounds map_bounds = q.source;
    map_bounds.require_continuous = (w.continuous && *w.continuous) || w.wl.has_value() ||
                                    w.pl.has_value() || w.local.has_value() ||
                                    w.covering.has_value() || w.upl.has_value();
    map_bounds.require_surjective = w.covering.has_value() || w.han.has_value() ||
                                    w.pak.has_value() || w.upl.has_value();

    const long long npairs =
        static_cast<long long>(sources.size()) * static_cast<long long>(targets.size());
    const int nworkers =
        static_cast<int>(std::max<long long>(1, std::min<long long>(resolve_workers(workers), npairs)));

    std::atomic<long long> next_pair{0};
    std::atomic<long long> best_pair{npairs};
    std::mutex best_mutex;
    std::optional<std::pair<long long, std::vector<int>>> best;  // pair index, values

    auto work = [&]() {
        for (;;) {
            long long pair = next_pair.fetch_add(1);
            if (pair >= npairs) break;
            if (pair > best_pair.load()) continue;  // a strictly earlier match exists
            const DigitalImage& X = sources[pair / targets.size()];
            const DigitalImage& Y = targets[pair % targets.size()];
            if (map_bounds.require_surjective && X.size() < Y.size()) continue;
            enumerate_map_values(X, Y, map_bounds, [&](const std::vector<int>& val) {
                if (!want_matches(w, X, Y, val)) return true;
                std::lock_guard<std::mutex> lock(best_mutex);
                if (!best || pair < best->first) {
                    best = {pair, val};
                    long long prev = best_pair.load();
                    while (pair < prev && !best_pair.compare_exchange_weak(prev, pair)) {
                    }
                }
                return false;  // first match within this pair is enough
            });
        }
    };

    if (nworkers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (int i = 0; i < nworkers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    if (!best) return std::nullopt;
    const DigitalImage& X = sources[best->first / targets.size()];
    const DigitalImage& Y = targets[best->first % targets.size()];
    // trust nothing the scan did: re-certify the instance from scratch
    if (!want_matches(w, X, Y, best->second))
        throw std::logic_error("find_counterexample: candidate failed re-certification");
    return DigitalMap::from_values(X, Y, best->second);
}

bool scc_embeds(const SccCurve& s1, const SccCurve& s2) {
    if (classify_curve(s1.image, s1.traversal) != CurveClass::SimpleClosedCurve)
        throw std::invalid_argument("scc_embeds: first input is not a simple closed curve");
    if (classify_curve(s2.image, s2.traversal) != CurveClass::SimpleClosedCurve)
        throw std::invalid_argument("scc_embeds: second input is not a simple closed curve");

    const DigitalImage& A = s1.image;
    const DigitalImage& B = s2.image;
    const int k = static_cast<int>(A.size());
    if (k > static_cast<int>(B.size())) return false;

    // assign images along the traversal; adjacency must match both ways
    // against everything already assigned, so a completed assignment is an
    // isomorphism onto its image
    std::vector<int> order;
    order.reserve(k);
    for (int i = 0; i < k; ++i) order.push_back(A.index_of(s1.traversal[i]));

    std::vector<int> img(k, -1);  // by position in `order`
    std::vector<char> used(B.size(), 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int cand = 0; cand < static_cast<int>(B.size()); ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (int prev = 0; prev < i; ++prev)
                if (A.adjacent_indices(order[i], order[prev]) !=
                    B.adjacent_indices(cand, img[prev])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            img[i] = cand;
            used[cand] = 1;
            if (self(self, i + 1)) return true;
            used[cand] = 0;
            img[i] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace digicover
