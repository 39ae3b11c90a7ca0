#include "digicover/maps.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace digicover {

DigitalMap::DigitalMap(DigitalImage source, DigitalImage target,
                       const std::vector<std::pair<Point, Point>>& pairs)
    : src_(std::move(source)), dst_(std::move(target)) {
    val_.assign(src_.size(), -1);
    for (const auto& [x, y] : pairs) {
        int i = src_.index_of(x);
        if (i < 0)
            throw std::invalid_argument("map: pair source point " + to_string(x) +
                                        " is not in the source image");
        int j = dst_.index_of(y);
        if (j < 0)
            throw std::invalid_argument("map: pair value " + to_string(y) +
                                        " is not in the target image");
        if (val_[i] != -1)
            throw std::invalid_argument("map: source point " + to_string(x) +
                                        " listed more than once");
        val_[i] = j;
    }
    for (std::size_t i = 0; i < val_.size(); ++i)
        if (val_[i] == -1)
            throw std::invalid_argument("map: no value for source point " +
                                        to_string(src_.point(static_cast<int>(i))));
}

DigitalMap DigitalMap::from_values(DigitalImage source, DigitalImage target,
                                   std::vector<int> values) {
    if (values.size() != source.size())
        throw std::invalid_argument("map: value vector has the wrong length");
    for (int v : values)
        if (v < 0 || v >= static_cast<int>(target.size()))
            throw std::invalid_argument("map: value index out of range");
    DigitalMap f;
    f.src_ = std::move(source);
    f.dst_ = std::move(target);
    f.val_ = std::move(values);
    return f;
}

const Point& DigitalMap::apply(const Point& x) const {
    int i = src_.index_of(x);
    if (i < 0)
        throw std::invalid_argument("map: point " + to_string(x) + " is not in the source image");
    return dst_.point(val_[i]);
}

std::vector<std::pair<Point, Point>> DigitalMap::pairs() const {
    std::vector<std::pair<Point, Point>> out;
    out.reserve(src_.size());
    for (std::size_t i = 0; i < src_.size(); ++i)
        out.emplace_back(src_.point(static_cast<int>(i)), dst_.point(val_[i]));
    return out;
}

bool DigitalMap::operator==(const DigitalMap& other) const {
    return src_ == other.src_ && dst_ == other.dst_ && val_ == other.val_;
}

namespace {

// backtracking bijection search on small adjacency bit-matrices; fills
// `out` with the image of each row index when an isomorphism exists
bool bitmatrix_isomorphic(const std::vector<std::uint64_t>& am,
                          const std::vector<std::uint64_t>& bm, std::vector<int>& out) {
    const int k = static_cast<int>(am.size());
    std::vector<int> deg_a(k), deg_b(k);
    for (int i = 0; i < k; ++i) {
        deg_a[i] = std::popcount(am[i]);
        deg_b[i] = std::popcount(bm[i]);
    }
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(k, -1);
    std::vector<char> used(k, 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int j = 0; j < k; ++j) {
            if (used[j] || deg_a[i] != deg_b[j]) continue;
            bool ok = true;
            for (int prev = 0; prev < i; ++prev)
                if (((am[i] >> prev) & 1) != ((bm[j] >> map[prev]) & 1)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map[i] = j;
            used[j] = 1;
            if (self(self, i + 1)) return true;
            used[j] = 0;
            map[i] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return false;
    out = std::move(map);
    return true;
}

std::vector<std::uint64_t> induced_matrix(const DigitalImage& img, const std::vector<int>& sel) {
    const int k = static_cast<int>(sel.size());
    std::vector<std::uint64_t> m(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b && img.adjacent_indices(sel[a], sel[b])) m[a] |= std::uint64_t{1} << b;
    return m;
}

}  // namespace

namespace detail {

std::optional<std::pair<int, int>> continuity_violation(const DigitalImage& src,
                                                        const DigitalImage& dst,
                                                        const std::vector<int>& val) {
    const int n = static_cast<int>(src.size());
    for (int i = 0; i < n; ++i)
        for (int j : src.neighbor_indices(i)) {
            if (j <= i) continue;
            if (val[i] != val[j] && !dst.adjacent_indices(val[i], val[j]))
                return std::make_pair(i, j);
        }
    return std::nullopt;
}

bool surjective(const DigitalImage& dst, const std::vector<int>& val) {
    std::vector<char> hit(dst.size(), 0);
    for (int v : val) hit[v] = 1;
    for (char h : hit)
        if (!h) return false;
    return true;
}

std::vector<int> image_of(const std::vector<int>& val, const std::vector<int>& dom) {
    std::vector<int> img;
    img.reserve(dom.size());
    for (int e : dom) img.push_back(val[e]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

bool restriction_is_iso(const DigitalImage& src, const DigitalImage& dst,
                        const std::vector<int>& val, const std::vector<int>& dom,
                        const std::vector<int>& cod) {
    const int k = static_cast<int>(dom.size());
    if (static_cast<int>(cod.size()) != k) return false;

    // bijectivity onto cod
    std::vector<int> preimage(cod.size(), -1);
    for (int e : dom) {
        auto it = std::lower_bound(cod.begin(), cod.end(), val[e]);
        if (it == cod.end() || *it != val[e]) return false;
        int pos = static_cast<int>(it - cod.begin());
        if (preimage[pos] != -1) return false;
        preimage[pos] = e;
    }

    // forward continuity: adjacent in dom -> adjacent values (values are
    // distinct, so equality cannot absorb an edge)
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (src.adjacent_indices(dom[a], dom[b]) &&
                !dst.adjacent_indices(val[dom[a]], val[dom[b]]))
                return false;

    // inverse continuity: adjacent in cod -> adjacent preimages
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (dst.adjacent_indices(cod[a], cod[b]) &&
                !src.adjacent_indices(preimage[a], preimage[b]))
                return false;
    return true;
}

bool restriction_is_iso_onto_image(const DigitalImage& src, const DigitalImage& dst,
                                   const std::vector<int>& val, const std::vector<int>& dom) {
    return restriction_is_iso(src, dst, val, dom, image_of(val, dom));
}

bool induced_isomorphic(const DigitalImage& img, const std::vector<int>& a,
                        const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.size() > 64) throw std::invalid_argument("induced_isomorphic: sub-image too large");
    std::vector<int> unused;
    return bitmatrix_isomorphic(induced_matrix(img, a), induced_matrix(img, b), unused);
}

}  // namespace detail

ContinuityCheck check_continuity(const DigitalMap& f) {
    ContinuityCheck out;
    if (auto v = detail::continuity_violation(f.source(), f.target(), f.values())) {
        out.continuous = false;
        out.violating_pair = {f.source().point(v->first), f.source().point(v->second)};
    }
    return out;
}

bool is_continuous(const DigitalMap& f) { return check_continuity(f).continuous; }

bool is_continuous_by_connectedness(const DigitalMap& f) {
    const int n = static_cast<int>(f.source().size());
    if (n > 20)
        throw std::invalid_argument("is_continuous_by_connectedness: source too large (max 20)");
    const auto& src = f.source();
    const auto& dst = f.target();
    const auto& val = f.values();

    auto mask_connected = [](const DigitalImage& img, std::uint64_t mask) {
        if (mask == 0) return true;
        int start = std::countr_zero(mask);
        std::uint64_t seen = std::uint64_t{1} << start;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            std::uint64_t fresh = img.neighbor_mask(i) & mask & ~seen;
            while (fresh) {
                int j = std::countr_zero(fresh);
                fresh &= fresh - 1;
                seen |= std::uint64_t{1} << j;
                stack.push_back(j);
            }
        }
        return seen == mask;
    };

    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        if (!mask_connected(src, m)) continue;
        std::uint64_t img_mask = 0;
        for (std::uint64_t rest = m; rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            img_mask |= std::uint64_t{1} << val[i];
        }
        if (!mask_connected(dst, img_mask)) return false;
    }
    return true;
}

bool is_surjective(const DigitalMap& f) { return detail::surjective(f.target(), f.values()); }

bool is_injective(const DigitalMap& f) {
    std::vector<char> hit(f.target().size(), 0);
    for (int v : f.values()) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

bool is_isomorphism(const DigitalMap& f) {
    if (f.source().size() != f.target().size()) return false;
    if (!is_injective(f)) return false;
    if (!is_continuous(f)) return false;
    // inverse continuity: adjacent target pairs pull back to adjacent points
    std::vector<int> inv(f.target().size());
    for (std::size_t i = 0; i < f.values().size(); ++i) inv[f.values()[i]] = static_cast<int>(i);
    const int m = static_cast<int>(f.target().size());
    for (int u = 0; u < m; ++u)
        for (int v : f.target().neighbor_indices(u)) {
            if (v <= u) continue;
            if (!f.source().adjacent_indices(inv[u], inv[v])) return false;
        }
    return true;
}

DigitalMap inverse(const DigitalMap& f) {
    if (f.source().size() != f.target().size() || !is_injective(f))
        throw std::invalid_argument("inverse: map is not a bijection");
    std::vector<int> inv(f.target().size());
    for (std::size_t i = 0; i < f.values().size(); ++i) inv[f.values()[i]] = static_cast<int>(i);
    return DigitalMap::from_values(f.target(), f.source(), std::move(inv));
}

DigitalMap compose(const DigitalMap& g, const DigitalMap& f) {
    if (!(f.target() == g.source()))
        throw std::invalid_argument("compose: target of f is not the source of g");
    std::vector<int> val(f.source().size());
    for (std::size_t i = 0; i < val.size(); ++i) val[i] = g.values()[f.values()[i]];
    return DigitalMap::from_values(f.source(), g.target(), std::move(val));
}

DigitalMap restrict_to(const DigitalMap& f, const std::vector<Point>& subset) {
    DigitalImage sub = subimage(f.source(), subset);
    std::vector<int> val(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i)
        val[i] = f.values()[f.source().index_of(sub.point(static_cast<int>(i)))];
    return DigitalMap::from_values(std::move(sub), f.target(), std::move(val));
}

DigitalMap corestrict_to_image(const DigitalMap& f) {
    std::vector<int> all(f.source().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    DigitalImage img = subimage_by_indices(f.target(), detail::image_of(f.values(), all));
    std::vector<int> val(f.source().size());
    for (std::size_t i = 0; i < val.size(); ++i)
        val[i] = img.index_of(f.target().point(f.values()[i]));
    return DigitalMap::from_values(f.source(), std::move(img), std::move(val));
}

DigitalMap with_adjacencies(const DigitalMap& f, std::optional<Adjacency> src,
                            std::optional<Adjacency> dst) {
    DigitalImage s = src ? DigitalImage(f.source().dim(), *src, f.source().points()) : f.source();
    DigitalImage t = dst ? DigitalImage(f.target().dim(), *dst, f.target().points()) : f.target();
    return DigitalMap::from_values(std::move(s), std::move(t), f.values());
}

SubimageIso subimages_isomorphic(const DigitalImage& a, const DigitalImage& b) {
    SubimageIso out;
    if (a.size() != b.size()) return out;
    if (a.size() > 64) throw std::invalid_argument("subimages_isomorphic: images too large");

    std::vector<int> ida(a.size()), idb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) ida[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < b.size(); ++i) idb[i] = static_cast<int>(i);

    std::vector<int> map;
    if (!bitmatrix_isomorphic(induced_matrix(a, ida), induced_matrix(b, idb), map)) return out;

    out.isomorphic = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        out.bijection.emplace_back(a.point(static_cast<int>(i)), b.point(map[i]));
    return out;
}

}  // namespace digicover
