#include "digicover/corpus.hpp"

namespace digicover::corpus {

namespace {

const Adjacency kC1Z1 = Adjacency::cu(1, 1);
const Adjacency kC1Z2 = Adjacency::cu(1, 2);

DigitalImage interval(int len) {  // [0, len] in Z
    std::vector<Point> pts;
    for (int i = 0; i <= len; ++i) pts.push_back({i});
    return DigitalImage(1, kC1Z1, std::move(pts));
}

}  // namespace

SccCurve scc4() { return make_scc(kC1Z2, 4); }

SccCurve scc8() { return make_scc(kC1Z2, 8); }

DigitalMap han_4_3_4() {
    DigitalImage square = scc4().image;
    return DigitalMap(square, square,
                      {{{0, 0}, {0, 0}}, {{1, 0}, {1, 0}}, {{1, 1}, {0, 1}}, {{0, 1}, {1, 1}}});
}

DigitalMap han_4_3_4_mixed() {
    return with_adjacencies(han_4_3_4(), std::nullopt, Adjacency::cu(2, 2));
}

DigitalMap inclusion_wl_not_pl() {
    return DigitalMap(interval(1), interval(2), {{{0}, {0}}, {{1}, {1}}});
}

DigitalMap fold_pl_not_wl() {
    return DigitalMap(interval(2), interval(1), {{{0}, {0}}, {{1}, {1}}, {{2}, {0}}});
}

DigitalMap wrap_scc8_scc4() {
    SccCurve big = scc8();
    SccCurve small = scc4();
    std::vector<std::pair<Point, Point>> pairs;
    for (int i = 0; i < 8; ++i) pairs.emplace_back(big.traversal[i], small.traversal[i % 4]);
    return DigitalMap(big.image, small.image, pairs);
}

DigitalMap pathwrap_q() {
    SccCurve small = scc4();
    std::vector<std::pair<Point, Point>> pairs;
    for (int i = 0; i < 4; ++i) pairs.emplace_back(Point{i}, small.traversal[i]);
    return DigitalMap(interval(3), small.image, pairs);
}

}  // namespace digicover::corpus
