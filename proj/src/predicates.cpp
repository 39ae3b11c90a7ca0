#include "digicover/predicates.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace digicover {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

namespace {

std::vector<int> closed_list(const DigitalImage& img, int idx) {
    std::vector<int> out = img.neighbor_indices(idx);
    out.insert(std::lower_bound(out.begin(), out.end(), idx), idx);
    return out;
}

std::vector<int> mask_to_list(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// WL property of the sheet restriction p|sheet: for every x in the sheet,
// the restriction to x's closed neighborhood within the sheet is an
// isomorphism onto its image.
bool wl_sheet_ok(const DigitalImage& E, const DigitalImage& B, const std::vector<int>& val,
                 const std::vector<int>& sheet) {
    for (int x : sheet) {
        std::vector<int> dom;
        for (int nb : E.neighbor_indices(x))
            if (std::binary_search(sheet.begin(), sheet.end(), nb)) dom.push_back(nb);
        dom.insert(std::lower_bound(dom.begin(), dom.end(), x), x);
        if (!detail::restriction_is_iso_onto_image(E, B, val, dom)) return false;
    }
    return true;
}

enum class SheetMode { Covering, Han, Pak };

// Searches the nonempty subsets of the fiber of base point b for a family
// of closed neighborhoods satisfying the mode's three clauses. Fills *rec
// with the first family found (subsets scanned in ascending mask order).
bool sheets_at(SheetMode mode, const DigitalImage& E, const DigitalImage& B,
               const std::vector<int>& val, int b, SheetDecomposition* rec) {
    if (!E.has_masks() || !B.has_masks())
        throw std::invalid_argument("sheet search: images too large (max 64 points)");

    std::vector<int> fiber;
    for (int e = 0; e < static_cast<int>(E.size()); ++e)
        if (val[e] == b) fiber.push_back(e);
    if (fiber.empty()) return false;
    if (fiber.size() > 20)
        throw std::invalid_argument("sheet search: fiber too large for exhaustive subsets");

    const std::uint64_t cod_mask = B.closed_neighbor_mask(b);
    std::uint64_t pre_mask = 0;
    for (int e = 0; e < static_cast<int>(E.size()); ++e)
        if ((cod_mask >> val[e]) & 1) pre_mask |= std::uint64_t{1} << e;

    const std::vector<int> cod = mask_to_list(cod_mask);
    std::vector<std::uint64_t> sheet_mask(fiber.size());
    for (std::size_t i = 0; i < fiber.size(); ++i) sheet_mask[i] = E.closed_neighbor_mask(fiber[i]);

    const std::uint32_t full = (std::uint32_t{1} << fiber.size()) - 1;
    for (std::uint32_t m = 1; m <= full; ++m) {
        std::uint64_t covered = 0;
        bool ok = true;
        for (std::uint32_t rest = m; rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            if (covered & sheet_mask[i]) {
                ok = false;
                break;
            }
            covered |= sheet_mask[i];
        }
        if (!ok) continue;
        if (mode == SheetMode::Pak ? (covered & ~pre_mask) != 0 : covered != pre_mask) continue;
        for (std::uint32_t rest = m; ok && rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            std::vector<int> sheet = mask_to_list(sheet_mask[i]);
            switch (mode) {
                case SheetMode::Covering:
                    ok = detail::restriction_is_iso(E, B, val, sheet, cod);
                    break;
                case SheetMode::Han:
                    ok = wl_sheet_ok(E, B, val, sheet);
                    break;
                case SheetMode::Pak:
                    ok = detail::restriction_is_iso_onto_image(E, B, val, sheet);
                    break;
            }
        }
        if (!ok) continue;
        if (rec) {
            rec->base_point = B.point(b);
            for (std::uint32_t rest = m; rest;) {
                int i = std::countr_zero(rest);
                rest &= rest - 1;
                rec->sheet_centers.push_back(E.point(fiber[i]));
                std::vector<Point> sheet_pts;
                for (int e : mask_to_list(sheet_mask[i])) sheet_pts.push_back(E.point(e));
                rec->sheets.push_back(std::move(sheet_pts));
            }
        }
        return true;
    }
    return false;
}

bool sheets_everywhere(SheetMode mode, const DigitalImage& E, const DigitalImage& B,
                       const std::vector<int>& val) {
    for (int b = 0; b < static_cast<int>(B.size()); ++b)
        if (!sheets_at(mode, E, B, val, b, nullptr)) return false;
    return true;
}

CheckResult sheet_predicate(SheetMode mode, const DigitalMap& p, bool needs_continuity) {
    CheckResult out;
    if (needs_continuity) {
        auto c = check_continuity(p);
        if (!c.continuous) {
            out.verdict = Verdict::NotApplicable;
            out.reason = "not-continuous";
            out.witness_pair = c.violating_pair;
            return out;
        }
    }
    if (!is_surjective(p)) {
        out.verdict = Verdict::NotApplicable;
        out.reason = "not-surjective";
        return out;
    }
    const DigitalImage& E = p.source();
    const DigitalImage& B = p.target();
    for (int b = 0; b < static_cast<int>(B.size()); ++b) {
        SheetDecomposition rec;
        if (!sheets_at(mode, E, B, p.values(), b, &rec)) {
            out.verdict = Verdict::Fails;
            out.witness_point = B.point(b);
            out.reason = "no admissible sheet family over base point " + to_string(B.point(b));
            return out;
        }
        out.decompositions.push_back(std::move(rec));
    }
    out.verdict = Verdict::Holds;
    return out;
}

// shared skeleton for the per-point predicates (local / pl / wl)
template <typename Fn>
CheckResult pointwise_predicate(const DigitalMap& h, Fn&& point_ok, const char* what) {
    CheckResult out;
    auto c = check_continuity(h);
    if (!c.continuous) {
        out.verdict = Verdict::NotApplicable;
        out.reason = "not-continuous";
        out.witness_pair = c.violating_pair;
        return out;
    }
    const DigitalImage& X = h.source();
    for (int x = 0; x < static_cast<int>(X.size()); ++x)
        if (!point_ok(x)) {
            out.verdict = Verdict::Fails;
            out.witness_point = X.point(x);
            out.reason = std::string(what) + " fails at " + to_string(X.point(x));
            return out;
        }
    out.verdict = Verdict::Holds;
    return out;
}

bool local_ok_at(const DigitalImage& X, const DigitalImage& Y, const std::vector<int>& val,
                 int x) {
    return detail::restriction_is_iso(X, Y, val, closed_list(X, x), closed_list(Y, val[x]));
}

bool pl_ok_at(const DigitalImage& X, const DigitalImage& Y, const std::vector<int>& val, int x) {
    std::vector<int> image = detail::image_of(val, closed_list(X, x));
    return detail::induced_isomorphic(Y, image, closed_list(Y, val[x]));
}

bool wl_ok_at(const DigitalImage& X, const DigitalImage& Y, const std::vector<int>& val, int x) {
    return detail::restriction_is_iso_onto_image(X, Y, val, closed_list(X, x));
}

}  // namespace

namespace detail {

bool covering_holds(const DigitalImage& E, const DigitalImage& B, const std::vector<int>& val) {
    return sheets_everywhere(SheetMode::Covering, E, B, val);
}

bool han_holds(const DigitalImage& E, const DigitalImage& B, const std::vector<int>& val) {
    return sheets_everywhere(SheetMode::Han, E, B, val);
}

bool pak_holds(const DigitalImage& E, const DigitalImage& B, const std::vector<int>& val) {
    return sheets_everywhere(SheetMode::Pak, E, B, val);
}

bool local_iso_holds(const DigitalImage& X, const DigitalImage& Y, const std::vector<int>& val) {
    for (int x = 0; x < static_cast<int>(X.size()); ++x)
        if (!local_ok_at(X, Y, val, x)) return false;
    return true;
}

bool pl_iso_holds(const DigitalImage& X, const DigitalImage& Y, const std::vector<int>& val) {
    for (int x = 0; x < static_cast<int>(X.size()); ++x)
        if (!pl_ok_at(X, Y, val, x)) return false;
    return true;
}

bool wl_iso_holds(const DigitalImage& X, const DigitalImage& Y, const std::vector<int>& val) {
    for (int x = 0; x < static_cast<int>(X.size()); ++x)
        if (!wl_ok_at(X, Y, val, x)) return false;
    return true;
}

}  // namespace detail

CheckResult continuity_result(const DigitalMap& f) {
    CheckResult out;
    auto c = check_continuity(f);
    if (c.continuous) {
        out.verdict = Verdict::Holds;
    } else {
        out.verdict = Verdict::Fails;
        out.witness_pair = c.violating_pair;
        out.reason = "adjacent pair " + to_string(c.violating_pair->first) + "," +
                     to_string(c.violating_pair->second) + " maps to non-adjacent points";
    }
    return out;
}

CheckResult isomorphism_result(const DigitalMap& f) {
    CheckResult out;
    if (f.source().size() != f.target().size()) {
        out.verdict = Verdict::Fails;
        out.reason = "not a bijection: " + std::to_string(f.source().size()) + " points onto " +
                     std::to_string(f.target().size());
        return out;
    }
    if (!is_injective(f)) {
        out.verdict = Verdict::Fails;
        for (std::size_t i = 0; i < f.values().size() && !out.witness_pair; ++i)
            for (std::size_t j = i + 1; j < f.values().size(); ++j)
                if (f.values()[i] == f.values()[j]) {
                    out.witness_pair = {f.source().point(static_cast<int>(i)),
                                        f.source().point(static_cast<int>(j))};
                    break;
                }
        out.reason = "not injective: " + to_string(out.witness_pair->first) + " and " +
                     to_string(out.witness_pair->second) + " share a value";
        return out;
    }
    auto c = check_continuity(f);
    if (!c.continuous) {
        out.verdict = Verdict::Fails;
        out.witness_pair = c.violating_pair;
        out.reason = "not continuous";
        return out;
    }
    std::vector<int> inv(f.target().size());
    for (std::size_t i = 0; i < f.values().size(); ++i) inv[f.values()[i]] = static_cast<int>(i);
    const DigitalImage& Y = f.target();
    for (int u = 0; u < static_cast<int>(Y.size()); ++u)
        for (int v : Y.neighbor_indices(u)) {
            if (v <= u) continue;
            if (!f.source().adjacent_indices(inv[u], inv[v])) {
                out.verdict = Verdict::Fails;
                out.witness_pair = {Y.point(u), Y.point(v)};
                out.reason = "inverse not continuous: adjacent pair " + to_string(Y.point(u)) +
                             "," + to_string(Y.point(v)) + " pulls back to non-adjacent points";
                return out;
            }
        }
    out.verdict = Verdict::Holds;
    return out;
}

CheckResult is_covering(const DigitalMap& p) {
    return sheet_predicate(SheetMode::Covering, p, /*needs_continuity=*/true);
}

CheckResult is_han_pseudocovering(const DigitalMap& p) {
    return sheet_predicate(SheetMode::Han, p, /*needs_continuity=*/false);
}

CheckResult is_pak_pseudocovering(const DigitalMap& p) {
    return sheet_predicate(SheetMode::Pak, p, /*needs_continuity=*/false);
}

CheckResult is_local_isomorphism(const DigitalMap& h) {
    const auto& X = h.source();
    const auto& Y = h.target();
    const auto& val = h.values();
    return pointwise_predicate(
        h, [&](int x) { return local_ok_at(X, Y, val, x); }, "local isomorphism");
}

CheckResult is_pl_isomorphism(const DigitalMap& h) {
    const auto& X = h.source();
    const auto& Y = h.target();
    const auto& val = h.values();
    return pointwise_predicate(
        h, [&](int x) { return pl_ok_at(X, Y, val, x); }, "PL-isomorphism");
}

CheckResult is_wl_isomorphism(const DigitalMap& h) {
    const auto& X = h.source();
    const auto& Y = h.target();
    const auto& val = h.values();
    return pointwise_predicate(
        h, [&](int x) { return wl_ok_at(X, Y, val, x); }, "WL-isomorphism");
}

namespace {

CheckResult upl_from_verdict(const UplVerdict& v) {
    CheckResult out;
    if (v.holds) {
        out.verdict = Verdict::Holds;
    } else {
        out.verdict = Verdict::Fails;
        out.upl_failure = v.failure;
        out.witness_point = v.failure->point;
        out.reason = "path (" + to_string(v.failure->point) + " over), next base point " +
                     to_string(v.failure->base_neighbor) + " has " +
                     std::to_string(v.failure->lift_count) + " lifts";
    }
    return out;
}

std::optional<CheckResult> upl_precondition_failure(const DigitalMap& p) {
    CheckResult out;
    auto c = check_continuity(p);
    if (!c.continuous) {
        out.verdict = Verdict::NotApplicable;
        out.reason = "not-continuous";
        out.witness_pair = c.violating_pair;
        return out;
    }
    if (!is_surjective(p)) {
        out.verdict = Verdict::NotApplicable;
        out.reason = "not-surjective";
        return out;
    }
    return std::nullopt;
}

}  // namespace

CheckResult upl_result(const DigitalMap& p) {
    if (auto na = upl_precondition_failure(p)) return *na;
    return upl_from_verdict(detail::upl_onestep_core(p.source(), p.target(), p.values()));
}

CheckResult upl_bounded_result(const DigitalMap& p, int max_steps) {
    if (auto na = upl_precondition_failure(p)) return *na;
    if (max_steps < 1) throw std::invalid_argument("upl: max_steps must be >= 1");
    return upl_from_verdict(detail::upl_bounded_core(p.source(), p.target(), p.values(), max_steps));
}

ClassificationReport classify(const DigitalMap& p) {
    ClassificationReport r;
    r.continuous = continuity_result(p);
    r.isomorphism = isomorphism_result(p);
    r.covering = is_covering(p);
    r.local_iso = is_local_isomorphism(p);
    r.pl_iso = is_pl_isomorphism(p);
    r.wl_iso = is_wl_isomorphism(p);
    r.han_pseudo = is_han_pseudocovering(p);
    r.pak_pseudo = is_pak_pseudocovering(p);
    r.upl = upl_result(p);
    return r;
}

const std::vector<std::string>& predicate_names() {
    static const std::vector<std::string> names = {
        "continuous", "isomorphism", "covering",   "local-iso", "pl-iso",
        "wl-iso",     "han-pseudo",  "pak-pseudo", "upl",
    };
    return names;
}

CheckResult run_predicate(const DigitalMap& p, std::string_view name, int upl_steps) {
    if (name == "continuous") return continuity_result(p);
    if (name == "isomorphism") return isomorphism_result(p);
    if (name == "covering") return is_covering(p);
    if (name == "local-iso") return is_local_isomorphism(p);
    if (name == "pl-iso") return is_pl_isomorphism(p);
    if (name == "wl-iso") return is_wl_isomorphism(p);
    if (name == "han-pseudo") return is_han_pseudocovering(p);
    if (name == "pak-pseudo") return is_pak_pseudocovering(p);
    if (name == "upl") {
        if (upl_steps == 0) return upl_result(p);
        return upl_bounded_result(p, upl_steps > 0 ? upl_steps : default_upl_steps(p));
    }
    throw std::invalid_argument("unknown predicate \"" + std::string(name) + "\"");
}

}  // namespace digicover
