#include "digicover/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace digicover {

std::string to_string(const Point& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    os << ')';
    return os.str();
}

Adjacency Adjacency::cu(int u, int n) {
    if (n < 1) throw std::invalid_argument("adjacency: ambient dimension must be >= 1");
    if (u < 1 || u > n)
        throw std::invalid_argument("adjacency: require 1 <= u <= n, got u=" + std::to_string(u) +
                                    ", n=" + std::to_string(n));
    Adjacency a;
    a.u = u;
    a.n = n;
    return a;
}

namespace {

struct AliasEntry {
    std::string_view name;
    int u;
    int n;
};

constexpr AliasEntry kAliases[] = {
    {"2", 1, 1}, {"4", 1, 2}, {"8", 2, 2}, {"6", 1, 3}, {"18", 2, 3}, {"26", 3, 3},
};

}  // namespace

Adjacency Adjacency::from_name(std::string_view name, int dim) {
    for (const auto& a : kAliases) {
        if (name == a.name) {
            if (dim != 0 && dim != a.n)
                throw std::invalid_argument("adjacency alias \"" + std::string(name) +
                                            "\" lives in Z^" + std::to_string(a.n) +
                                            ", not Z^" + std::to_string(dim));
            return cu(a.u, a.n);
        }
    }
    if (!name.empty() && name.front() == 'c') {
        int u = 0;
        auto rest = name.substr(1);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), u);
        if (ec == std::errc{} && ptr == rest.data() + rest.size()) {
            if (dim == 0)
                throw std::invalid_argument("adjacency \"" + std::string(name) +
                                            "\" needs an ambient dimension");
            return cu(u, dim);
        }
    }
    throw std::invalid_argument("unknown adjacency \"" + std::string(name) + "\"");
}

std::string Adjacency::name() const { return "c" + std::to_string(u); }

bool adjacent(const Adjacency& adj, const Point& x, const Point& y) {
    if (static_cast<int>(x.size()) != adj.n || static_cast<int>(y.size()) != adj.n)
        throw std::invalid_argument("adjacent: dimension mismatch between points and adjacency");
    int differing = 0;
    for (int i = 0; i < adj.n; ++i) {
        int d = x[i] - y[i];
        if (d == 0) continue;
        if (d != 1 && d != -1) return false;
        ++differing;
    }
    return differing >= 1 && differing <= adj.u;
}

DigitalImage::DigitalImage() : dim_(1), adj_(Adjacency::cu(1, 1)) {}

DigitalImage::DigitalImage(int dim, Adjacency adj, std::vector<Point> points)
    : dim_(dim), adj_(adj), pts_(std::move(points)) {
    if (dim_ < 1) throw std::invalid_argument("digital image: dimension must be >= 1");
    if (adj_.n != dim_)
        throw std::invalid_argument("digital image: adjacency is for Z^" + std::to_string(adj_.n) +
                                    " but points live in Z^" + std::to_string(dim_));
    for (const Point& p : pts_)
        if (static_cast<int>(p.size()) != dim_)
            throw std::invalid_argument("digital image: point " + to_string(p) +
                                        " has the wrong dimension");
    std::sort(pts_.begin(), pts_.end());
    if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
        throw std::invalid_argument("digital image: duplicate point");

    const int n = static_cast<int>(pts_.size());
    nbrs_.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adjacent(adj_, pts_[i], pts_[j])) {
                nbrs_[i].push_back(j);
                nbrs_[j].push_back(i);
            }
    for (auto& v : nbrs_) std::sort(v.begin(), v.end());
    if (has_masks()) {
        nbr_masks_.assign(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j : nbrs_[i]) nbr_masks_[i] |= std::uint64_t{1} << j;
    }
}

int DigitalImage::index_of(const Point& p) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
    if (it == pts_.end() || *it != p) return -1;
    return static_cast<int>(it - pts_.begin());
}

bool DigitalImage::adjacent_indices(int i, int j) const {
    const auto& v = nbrs_[i];
    return std::binary_search(v.begin(), v.end(), j);
}

bool DigitalImage::operator==(const DigitalImage& other) const {
    return dim_ == other.dim_ && adj_ == other.adj_ && pts_ == other.pts_;
}

std::vector<Point> neighborhood(const DigitalImage& X, const Point& x, bool punctured) {
    int idx = X.index_of(x);
    if (idx < 0)
        throw std::invalid_argument("neighborhood: point " + to_string(x) + " is not in the image");
    std::vector<int> sel = X.neighbor_indices(idx);
    if (!punctured) {
        sel.insert(std::lower_bound(sel.begin(), sel.end(), idx), idx);
    }
    std::vector<Point> out;
    out.reserve(sel.size());
    for (int i : sel) out.push_back(X.point(i));
    return out;
}

bool is_connected(const DigitalImage& X) {
    if (X.empty()) return true;
    std::vector<char> seen(X.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j : X.neighbor_indices(i))
            if (!seen[j]) {
                seen[j] = 1;
                ++visited;
                queue.push_back(j);
            }
    }
    return visited == X.size();
}

bool is_path(const DigitalImage& X, const PathSeq& S) {
    for (const Point& p : S)
        if (!X.contains(p)) return false;
    for (std::size_t i = 0; i + 1 < S.size(); ++i)
        if (S[i] != S[i + 1] && !adjacent(X.adjacency(), S[i], S[i + 1])) return false;
    return true;
}

std::string to_string(CurveClass c) {
    switch (c) {
        case CurveClass::NotClosed: return "not-closed";
        case CurveClass::ClosedCurve: return "closed-curve";
        case CurveClass::SimpleClosedCurve: return "simple-closed-curve";
    }
    return "?";
}

CurveClass classify_curve(const DigitalImage& X, const PathSeq& S) {
    if (S.size() < 2)
        throw std::invalid_argument("classify_curve: need at least one step");
    for (const Point& p : S)
        if (!X.contains(p))
            throw std::invalid_argument("classify_curve: point " + to_string(p) +
                                        " lies outside the image");
    for (std::size_t i = 0; i + 1 < S.size(); ++i)
        if (S[i] != S[i + 1] && !adjacent(X.adjacency(), S[i], S[i + 1]))
            throw std::invalid_argument("classify_curve: sequence is not a path");

    const int m = static_cast<int>(S.size()) - 1;
    if (S.front() != S.back()) return CurveClass::NotClosed;
    for (int i = 0; i < m; ++i)
        if (S[i] == S[i + 1]) return CurveClass::NotClosed;
    // s_0..s_{m-1} pairwise distinct (with s_m = s_0 this is the whole
    // injectivity clause)
    std::set<Point> trace(S.begin(), S.begin() + m);
    if (static_cast<int>(trace.size()) != m) return CurveClass::NotClosed;
    if (m < 3) return CurveClass::NotClosed;  // a doubled edge is not a cycle

    if (m < 4) return CurveClass::ClosedCurve;
    DigitalImage T = subimage(X, std::vector<Point>(trace.begin(), trace.end()));
    for (int i = 0; i < m; ++i) {
        std::vector<Point> want{S[(i - 1 + m) % m], S[(i + 1) % m]};
        std::sort(want.begin(), want.end());
        if (neighborhood(T, S[i], true) != want) return CurveClass::ClosedCurve;
    }
    return CurveClass::SimpleClosedCurve;
}

SccCurve make_scc(const Adjacency& adj, int length) {
    if (!(adj == Adjacency::cu(1, 2)))
        throw std::invalid_argument("make_scc: only c1 (4-adjacency) in Z^2 is supported");
    if (length < 4 || length % 2 != 0 || length == 6)
        throw std::invalid_argument("make_scc: no 4-adjacency simple closed curve of length " +
                                    std::to_string(length) + " exists in Z^2");

    PathSeq walk;
    if (length == 4) {
        walk = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}};
    } else {
        // perimeter of [0,2] x [0,b] with interior points removed
        const int b = length / 2 - 2;
        for (int x = 0; x <= 2; ++x) walk.push_back({x, 0});
        for (int y = 1; y <= b; ++y) walk.push_back({2, y});
        for (int x = 1; x >= 0; --x) walk.push_back({x, b});
        for (int y = b - 1; y >= 1; --y) walk.push_back({0, y});
        walk.push_back({0, 0});
    }

    std::vector<Point> pts(walk.begin(), walk.end() - 1);
    SccCurve scc{DigitalImage(2, adj, std::move(pts)), std::move(walk)};
    if (classify_curve(scc.image, scc.traversal) != CurveClass::SimpleClosedCurve)
        throw std::logic_error("make_scc: constructed curve failed certification");
    return scc;
}

DigitalImage subimage(const DigitalImage& X, const std::vector<Point>& pts) {
    for (const Point& p : pts)
        if (!X.contains(p))
            throw std::invalid_argument("subimage: point " + to_string(p) +
                                        " is not in the parent image");
    return DigitalImage(X.dim(), X.adjacency(), pts);
}

DigitalImage subimage_by_indices(const DigitalImage& X, const std::vector<int>& idxs) {
    std::vector<Point> pts;
    pts.reserve(idxs.size());
    for (int i : idxs) pts.push_back(X.point(i));
    return DigitalImage(X.dim(), X.adjacency(), std::move(pts));
}

}  // namespace digicover
