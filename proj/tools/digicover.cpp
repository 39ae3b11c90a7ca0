// digicover: digital images over Z^n, the covering-map zoo, path lifting,
// and exhaustive small-instance search.
//
// exit codes for check/lift: 0 holds, 1 fails, 2 precondition not met,
// 3 I/O or format error. enumerate/classify exit 0 on success;
// find-counterexample exits 1 when nothing matches within bounds;
// verify-equivalences exits 1 when any violation is recorded.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "digicover/corpus.hpp"
#include "digicover/io.hpp"
#include "digicover/lifting.hpp"
#include "digicover/predicates.hpp"
#include "digicover/search.hpp"

namespace {

using namespace digicover;
using ojson = nlohmann::ordered_json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitNotApplicable = 2;
constexpr int kExitIo = 3;
constexpr int kExitUsage = 4;

std::vector<int> parse_box(const std::string& spec) {
    std::vector<int> box;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t x = spec.find('x', pos);
        if (x == std::string::npos) x = spec.size();
        box.push_back(std::stoi(spec.substr(pos, x - pos)));
        pos = x + 1;
        if (x == spec.size()) break;
    }
    return box;
}

std::vector<Adjacency> parse_adjacency_list(const std::string& spec, int dim) {
    std::vector<Adjacency> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        std::string name = spec.substr(pos, comma - pos);
        if (!name.empty()) out.push_back(Adjacency::from_name(name, dim));
        pos = comma + 1;
        if (comma == spec.size()) break;
    }
    return out;
}

DigitalMap load_map_with_overrides(const std::string& path, const std::string& src_adj,
                                   const std::string& dst_adj) {
    DigitalMap f = load_map(path);
    std::optional<Adjacency> s, d;
    if (!src_adj.empty()) s = Adjacency::from_name(src_adj, f.source().dim());
    if (!dst_adj.empty()) d = Adjacency::from_name(dst_adj, f.target().dim());
    return with_adjacencies(f, s, d);
}

void print_images_verbose(const DigitalMap& f) {
    if (f.source().dim() == 2) std::cerr << "source:\n" << ascii_grid(f.source());
    if (f.target().dim() == 2) std::cerr << "target:\n" << ascii_grid(f.target());
}

int exit_code_for(const CheckResult& r) {
    switch (r.verdict) {
        case Verdict::Holds: return kExitHolds;
        case Verdict::Fails: return kExitFails;
        case Verdict::NotApplicable: return kExitNotApplicable;
    }
    return kExitUsage;
}

int run_check(const std::string& map_path, const std::string& predicate,
              const std::string& src_adj, const std::string& dst_adj, int max_steps, bool as_json,
              bool verbose) {
    DigitalMap f = load_map_with_overrides(map_path, src_adj, dst_adj);
    if (verbose) print_images_verbose(f);
    CheckResult r = run_predicate(f, predicate, max_steps);
    if (as_json) {
        ojson j;
        j["predicate"] = predicate;
        j["result"] = check_result_to_json(r);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << predicate << ": " << to_string(r.verdict);
        if (!r.reason.empty()) std::cout << " (" << r.reason << ")";
        std::cout << "\n";
    }
    return exit_code_for(r);
}

int run_classify(const std::string& map_path, const std::string& src_adj,
                 const std::string& dst_adj, bool verbose) {
    DigitalMap f = load_map_with_overrides(map_path, src_adj, dst_adj);
    if (verbose) print_images_verbose(f);
    ojson j;
    j["map"] = map_to_json(f);
    j["predicates"] = classification_to_json(classify(f));
    std::cout << j.dump(2) << "\n";
    return kExitHolds;
}

int run_lift(const std::string& map_path, const std::string& path_spec,
             const std::string& start_spec, std::size_t max_lifts, bool as_json) {
    LiftQuery q{load_map(map_path), path_from_json(nlohmann::json::parse(path_spec)),
                point_from_json(nlohmann::json::parse(start_spec)), max_lifts};
    std::vector<PathSeq> lifts = lift_paths(q);
    if (as_json) {
        ojson j;
        j["count"] = lifts.size();
        ojson larr = ojson::array();
        for (const auto& lift : lifts) {
            ojson one = ojson::array();
            for (const auto& p : lift) one.push_back(point_to_json(p));
            larr.push_back(std::move(one));
        }
        j["lifts"] = std::move(larr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << lifts.size() << " lift(s)\n";
        for (const auto& lift : lifts) {
            for (std::size_t i = 0; i < lift.size(); ++i)
                std::cout << (i ? " -> " : "") << to_string(lift[i]);
            std::cout << "\n";
        }
    }
    return lifts.empty() ? kExitFails : kExitHolds;
}

int run_enumerate(const std::string& box_spec, int max_points, const std::string& adj_spec,
                  bool connected) {
    EnumBounds b;
    b.box = parse_box(box_spec);
    b.max_points = max_points;
    b.adjacencies = parse_adjacency_list(adj_spec, static_cast<int>(b.box.size()));
    b.require_connected = connected;
    ojson imgs = ojson::array();
    enumerate_images(b, [&](const DigitalImage& img) {
        imgs.push_back(image_to_json(img));
        return true;
    });
    ojson j;
    j["bounds"] = bounds_to_json(b);
    j["count"] = imgs.size();
    j["images"] = std::move(imgs);
    std::cout << j.dump(2) << "\n";
    return kExitHolds;
}

int run_find(const std::string& want_spec, const std::string& src_box, int src_max_points,
             const std::string& src_adj, const std::string& dst_box, int dst_max_points,
             const std::string& dst_adj, const std::string& dst_image, int workers) {
    CounterexampleQuery q;
    q.want = parse_want(want_spec);
    q.source.box = parse_box(src_box);
    q.source.max_points = src_max_points;
    q.source.adjacencies =
        parse_adjacency_list(src_adj, static_cast<int>(q.source.box.size()));
    q.target.box = parse_box(dst_box);
    q.target.max_points = dst_max_points;
    q.target.adjacencies =
        parse_adjacency_list(dst_adj, static_cast<int>(q.target.box.size()));
    if (!dst_image.empty()) q.fixed_target = load_image(dst_image);

    std::optional<DigitalMap> found = find_counterexample(q, workers);
    ojson j;
    j["want"] = to_string(q.want);
    j["found"] = found.has_value();
    if (found) {
        j["map"] = map_to_json(*found);
        j["predicates"] = classification_to_json(classify(*found));
    }
    std::cout << j.dump(2) << "\n";
    return found ? kExitHolds : kExitFails;
}

int run_verify(const std::string& box_spec, int max_points, const std::string& adj_spec,
               int workers, bool probe) {
    EnumBounds b = default_bounds();
    b.box = parse_box(box_spec);
    b.max_points = max_points;
    b.adjacencies = parse_adjacency_list(adj_spec, static_cast<int>(b.box.size()));
    EquivalenceReport r = verify_cover_equivalences(b, workers, probe);
    ojson j;
    j["bounds"] = bounds_to_json(b);
    j.update(equivalence_report_to_json(r));
    std::cout << j.dump(2) << "\n";
    std::cerr << "elapsed: " << r.elapsed.count() << " ms\n";
    return (r.violations.empty() && r.one_directional_violations.empty()) ? kExitHolds
                                                                          : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital covering map toolkit"};
    app.require_subcommand(1);

    std::string map_path, predicate, src_adj, dst_adj;
    std::string path_spec, start_spec;
    std::string box_spec = "3x3", adj_spec = "c1,c2";
    std::string src_box = "3x3", src_adj_list = "c1,c2", dst_box = "3x3",
                dst_adj_list = "c1,c2", dst_image;
    int max_steps = -1;
    int max_points = 5, src_max_points = 5, dst_max_points = 5;
    std::size_t max_lifts = 1'000'000;
    int workers = 0;
    bool as_json = false, verbose = false, connected = true, probe = false;
    std::string want_spec;

    auto* check = app.add_subcommand("check", "evaluate one predicate on a map");
    check->add_option("--map", map_path, "map file")->required();
    check->add_option("--predicate", predicate, "one of: continuous, isomorphism, covering, "
                      "local-iso, pl-iso, wl-iso, han-pseudo, pak-pseudo, upl")
        ->required();
    check->add_option("--src-adjacency", src_adj, "override the source adjacency");
    check->add_option("--dst-adjacency", dst_adj, "override the target adjacency");
    check->add_option("--max-steps", max_steps, "path length bound for the upl oracle "
                      "(default |E|+1; 0 selects the one-step characterization)");
    check->add_flag("--json", as_json, "machine output");
    check->add_flag("--verbose", verbose, "render 2-d images to stderr");

    auto* cls = app.add_subcommand("classify", "evaluate every predicate on a map");
    cls->add_option("--map", map_path, "map file")->required();
    cls->add_option("--src-adjacency", src_adj, "override the source adjacency");
    cls->add_option("--dst-adjacency", dst_adj, "override the target adjacency");
    cls->add_flag("--json", as_json, "machine output (always on for classify)");
    cls->add_flag("--verbose", verbose, "render 2-d images to stderr");

    auto* lift = app.add_subcommand("lift", "enumerate the lifts of a base path");
    lift->add_option("--map", map_path, "map file")->required();
    lift->add_option("--path", path_spec, "base path as a JSON array of points")->required();
    lift->add_option("--start", start_spec, "start point as a JSON array")->required();
    lift->add_option("--max-lifts", max_lifts, "overflow cap on the number of lifts");
    lift->add_flag("--json", as_json, "machine output");

    auto* enumerate = app.add_subcommand("enumerate", "list images within bounds");
    enumerate->add_option("--box", box_spec, "box extents, e.g. 3x3");
    enumerate->add_option("--max-points", max_points, "maximum points per image");
    enumerate->add_option("--adjacency", adj_spec, "comma-separated adjacencies");
    enumerate->add_flag("--connected,!--no-connected", connected,
                        "keep only connected images (default on)");

    auto* find = app.add_subcommand("find-counterexample",
                                    "first map matching a predicate-vector constraint");
    find->add_option("--want", want_spec, "constraints, e.g. wl=true,pl=false")->required();
    find->add_option("--src-box", src_box, "source box extents");
    find->add_option("--src-max-points", src_max_points, "maximum source points");
    find->add_option("--src-adjacency", src_adj_list, "source adjacencies");
    find->add_option("--dst-box", dst_box, "target box extents");
    find->add_option("--dst-max-points", dst_max_points, "maximum target points");
    find->add_option("--dst-adjacency", dst_adj_list, "target adjacencies");
    find->add_option("--dst-image", dst_image, "fixed target image file");
    find->add_option("--workers", workers, "worker threads (0: DIGICOVER_WORKERS or all cores)");

    auto* verify = app.add_subcommand("verify-equivalences",
                                      "machine-check the covering equivalences over a corpus");
    verify->add_option("--box", box_spec, "box extents, e.g. 3x3");
    verify->add_option("--max-points", max_points, "maximum points per image");
    verify->add_option("--adjacency", adj_spec, "comma-separated adjacencies");
    verify->add_option("--workers", workers, "worker threads (0: DIGICOVER_WORKERS or all cores)");
    verify->add_flag("--probe-han-continuity", probe,
                     "also scan discontinuous surjections for the Han clauses");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(map_path, predicate, src_adj, dst_adj, max_steps, as_json, verbose);
        if (cls->parsed()) return run_classify(map_path, src_adj, dst_adj, verbose);
        if (lift->parsed()) return run_lift(map_path, path_spec, start_spec, max_lifts, as_json);
        if (enumerate->parsed()) return run_enumerate(box_spec, max_points, adj_spec, connected);
        if (find->parsed())
            return run_find(want_spec, src_box, src_max_points, src_adj_list, dst_box,
                            dst_max_points, dst_adj_list, dst_image, workers);
        if (verify->parsed()) return run_verify(box_spec, max_points, adj_spec, workers, probe);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const LiftOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EnumerationOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotApplicable;
    }
    return kExitUsage;
}
