#include <doctest.h>

#include "digicover/corpus.hpp"
#include "digicover/predicates.hpp"

using namespace digicover;

namespace {

DigitalMap identity_map(const DigitalImage& X) {
    std::vector<int> val(X.size());
    for (std::size_t i = 0; i < val.size(); ++i) val[i] = static_cast<int>(i);
    return DigitalMap::from_values(X, X, std::move(val));
}

void check_vector(const ClassificationReport& r, Verdict cont, Verdict iso, Verdict cov,
                  Verdict local, Verdict pl, Verdict wl, Verdict han, Verdict pak, Verdict upl) {
    CHECK(r.continuous.verdict == cont);
    CHECK(r.isomorphism.verdict == iso);
    CHECK(r.covering.verdict == cov);
    CHECK(r.local_iso.verdict == local);
    CHECK(r.pl_iso.verdict == pl);
    CHECK(r.wl_iso.verdict == wl);
    CHECK(r.han_pseudo.verdict == han);
    CHECK(r.pak_pseudo.verdict == pak);
    CHECK(r.upl.verdict == upl);
}

constexpr Verdict H = Verdict::Holds;
constexpr Verdict F = Verdict::Fails;
constexpr Verdict NA = Verdict::NotApplicable;

}  // namespace

TEST_SUITE("predicates") {

TEST_CASE("covering: identity, wrap, path wrap") {
    CHECK(is_covering(identity_map(corpus::scc8().image)).holds());

    auto w = is_covering(corpus::wrap_scc8_scc4());
    REQUIRE(w.holds());
    REQUIRE(w.decompositions.size() == 4);  // one per base point
    for (const auto& d : w.decompositions) {
        CHECK(d.sheet_centers.size() == 2);
        for (const auto& sheet : d.sheets) CHECK(sheet.size() == 3);
    }

    auto q = is_covering(corpus::pathwrap_q());
    REQUIRE(q.fails());
    CHECK(q.witness_point == Point{0, 0});  // fiber of t_0 has no sheet family

    CHECK(is_covering(corpus::han_4_3_4()).verdict == NA);          // not continuous
    CHECK(is_covering(corpus::inclusion_wl_not_pl()).verdict == NA);  // not surjective
}

TEST_CASE("local isomorphism") {
    auto p48 = is_local_isomorphism(corpus::han_4_3_4_mixed());
    REQUIRE(p48.fails());
    CHECK(p48.witness_point == Point{0, 0});  // 3-point N_4 vs 4-point N_8

    CHECK(is_local_isomorphism(corpus::wrap_scc8_scc4()).holds());
    CHECK(is_local_isomorphism(identity_map(corpus::scc4().image)).holds());
    CHECK(is_local_isomorphism(corpus::han_4_3_4()).verdict == NA);

    auto incl = is_local_isomorphism(corpus::inclusion_wl_not_pl());
    REQUIRE(incl.fails());
    CHECK(incl.witness_point == Point{1});
}

TEST_CASE("PL isomorphism") {
    auto incl = is_pl_isomorphism(corpus::inclusion_wl_not_pl());
    REQUIRE(incl.fails());
    CHECK(incl.witness_point == Point{1});  // 2-point image vs 3-point neighborhood

    CHECK(is_pl_isomorphism(corpus::fold_pl_not_wl()).holds());
    CHECK(is_pl_isomorphism(identity_map(corpus::scc8().image)).holds());
}

TEST_CASE("WL isomorphism") {
    CHECK(is_wl_isomorphism(corpus::inclusion_wl_not_pl()).holds());

    auto fold = is_wl_isomorphism(corpus::fold_pl_not_wl());
    REQUIRE(fold.fails());
    CHECK(fold.witness_point == Point{1});  // three points collapse to two

    CHECK(is_wl_isomorphism(identity_map(corpus::scc4().image)).holds());
    CHECK(is_wl_isomorphism(corpus::pathwrap_q()).holds());
}

TEST_CASE("Han pseudo-covering") {
    CHECK(is_han_pseudocovering(identity_map(corpus::scc4().image)).holds());
    // evaluable without continuity: only surjectivity is required
    CHECK(is_han_pseudocovering(corpus::han_4_3_4()).fails());
    CHECK(is_han_pseudocovering(corpus::han_4_3_4_mixed()).fails());
    CHECK(is_han_pseudocovering(corpus::wrap_scc8_scc4()).holds());
    CHECK(is_han_pseudocovering(corpus::inclusion_wl_not_pl()).verdict == NA);
}

TEST_CASE("Pakdaman pseudo-covering") {
    CHECK(is_pak_pseudocovering(identity_map(corpus::scc4().image)).holds());

    auto q = is_pak_pseudocovering(corpus::pathwrap_q());
    REQUIRE(q.holds());
    REQUIRE(q.decompositions.size() == 4);
    for (const auto& d : q.decompositions) CHECK(d.sheet_centers.size() == 1);

    CHECK(is_pak_pseudocovering(corpus::han_4_3_4()).fails());
    CHECK(is_pak_pseudocovering(corpus::han_4_3_4_mixed()).fails());
    CHECK(is_pak_pseudocovering(corpus::fold_pl_not_wl()).fails());
}

TEST_CASE("classification vectors of the bundled corpus") {
    // wrap: everything except isomorphism
    check_vector(classify(corpus::wrap_scc8_scc4()), H, F, H, H, H, H, H, H, H);
    // inclusion: WL only; the covering-flavored predicates are not applicable
    check_vector(classify(corpus::inclusion_wl_not_pl()), H, F, NA, F, F, H, NA, NA, NA);
    // fold: PL only
    check_vector(classify(corpus::fold_pl_not_wl()), H, F, F, F, H, F, F, F, F);
    // path wrap: WL and Pakdaman, no unique lifting
    check_vector(classify(corpus::pathwrap_q()), H, F, F, F, F, H, F, H, F);
    // the worked square map, 4-adjacency on both sides
    check_vector(classify(corpus::han_4_3_4()), F, F, NA, NA, NA, NA, F, F, NA);
    // the same map read as (4,8)
    check_vector(classify(corpus::han_4_3_4_mixed()), H, F, F, F, F, F, F, F, F);
    // identity: everything
    check_vector(classify(identity_map(corpus::scc4().image)), H, H, H, H, H, H, H, H, H);
}

TEST_CASE("sheet decompositions certify their clauses") {
    auto w = is_covering(corpus::wrap_scc8_scc4());
    REQUIRE(w.holds());
    const DigitalMap p = corpus::wrap_scc8_scc4();
    for (const auto& d : w.decompositions) {
        // sheets are the closed neighborhoods of their centers
        REQUIRE(d.sheet_centers.size() == d.sheets.size());
        for (std::size_t i = 0; i < d.sheets.size(); ++i) {
            CHECK(p.apply(d.sheet_centers[i]) == d.base_point);
            CHECK(d.sheets[i] == neighborhood(p.source(), d.sheet_centers[i], false));
        }
        // pairwise disjoint
        for (std::size_t i = 0; i < d.sheets.size(); ++i)
            for (std::size_t j = i + 1; j < d.sheets.size(); ++j)
                for (const Point& a : d.sheets[i])
                    for (const Point& b : d.sheets[j]) CHECK(a != b);
    }
}

TEST_CASE("one-directional theorems on the bundled corpus") {
    auto maps = {corpus::wrap_scc8_scc4(), corpus::pathwrap_q(), corpus::fold_pl_not_wl(),
                 identity_map(corpus::scc4().image), identity_map(corpus::scc8().image)};
    for (const DigitalMap& p : maps) {
        auto r = classify(p);
        if (r.local_iso.holds()) CHECK(r.pl_iso.holds());
        if (r.covering.holds()) {
            CHECK(r.pak_pseudo.holds());
            CHECK(r.upl.holds());
            CHECK(r.local_iso.holds());
            CHECK(r.han_pseudo.holds());
            CHECK(r.wl_iso.holds());
        }
        if (r.local_iso.holds()) CHECK(r.wl_iso.holds());
    }
    // the converse of local => pl fails on the corpus
    auto fold = classify(corpus::fold_pl_not_wl());
    CHECK(fold.pl_iso.holds());
    CHECK_FALSE(fold.local_iso.holds());
    // wl and not pl, pl and not wl both occur
    CHECK(classify(corpus::inclusion_wl_not_pl()).wl_iso.holds());
    CHECK_FALSE(classify(corpus::inclusion_wl_not_pl()).pl_iso.holds());
    // a Pakdaman pseudo-covering without unique path lifting
    auto q = classify(corpus::pathwrap_q());
    CHECK(q.pak_pseudo.holds());
    CHECK_FALSE(q.upl.holds());
}

TEST_CASE("run_predicate name dispatch") {
    DigitalMap w = corpus::wrap_scc8_scc4();
    for (const auto& name : predicate_names()) CHECK(run_predicate(w, name).applicable());
    CHECK(run_predicate(w, "covering").holds());
    CHECK(run_predicate(w, "isomorphism").fails());
    CHECK(run_predicate(w, "upl", 0).holds());   // one-step characterization
    CHECK(run_predicate(w, "upl", 3).holds());   // bounded oracle
    CHECK_THROWS_AS(run_predicate(w, "wobbly"), std::invalid_argument);
}

}  // TEST_SUITE
