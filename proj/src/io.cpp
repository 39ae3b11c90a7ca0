#include "digicover/io.hpp"

#include <fstream>
#include <sstream>

namespace digicover {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_file(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset -> line number for a usable message
        std::size_t line = 1;
        for (std::size_t i = 0; i < std::min(e.byte, text.size()); ++i)
            if (text[i] == '\n') ++line;
        throw IoError(path.string() + ": parse error at line " + std::to_string(line) + ": " +
                      e.what());
    }
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw IoError(std::string("missing field \"") + name + "\"");
    return *it;
}

void write_point(std::ostringstream& os, const Point& p) {
    os << '[';
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (c) os << ',';
        os << p[c];
    }
    os << ']';
}

void write_points(std::ostringstream& os, const std::vector<Point>& pts) {
    os << '[';
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ',';
        write_point(os, pts[i]);
    }
    os << ']';
}

std::string inline_image_text(const DigitalImage& img) {
    std::ostringstream os;
    os << "{\"dim\": " << img.dim() << ", \"adjacency\": \"" << img.adjacency().name()
       << "\", \"points\": ";
    write_points(os, img.points());
    os << "}";
    return os.str();
}

}  // namespace

Point point_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw IoError("a point must be a nonempty integer array");
    Point p;
    for (const auto& c : j) {
        if (!c.is_number_integer()) throw IoError("point coordinates must be integers");
        p.push_back(c.get<int>());
    }
    return p;
}

PathSeq path_from_json(const json& j) {
    if (!j.is_array()) throw IoError("a path must be an array of points");
    PathSeq path;
    for (const auto& p : j) path.push_back(point_from_json(p));
    return path;
}

DigitalImage image_from_json(const json& j) {
    if (!j.is_object()) throw IoError("an image must be a JSON object");
    const json& jd = field(j, "dim");
    if (!jd.is_number_integer()) throw IoError("field \"dim\" must be an integer");
    const int dim = jd.get<int>();
    const json& ja = field(j, "adjacency");
    if (!ja.is_string()) throw IoError("field \"adjacency\" must be a string");
    const json& jp = field(j, "points");
    if (!jp.is_array()) throw IoError("field \"points\" must be an array");

    std::vector<Point> pts;
    for (const auto& p : jp) {
        Point pt = point_from_json(p);
        if (static_cast<int>(pt.size()) != dim)
            throw IoError("point " + to_string(pt) + " does not have dimension " +
                          std::to_string(dim));
        pts.push_back(std::move(pt));
    }
    try {
        Adjacency adj = Adjacency::from_name(ja.get<std::string>(), dim);
        return DigitalImage(dim, adj, std::move(pts));
    } catch (const std::invalid_argument& e) {
        throw IoError(e.what());
    }
}

DigitalImage load_image(const std::filesystem::path& path) {
    try {
        return image_from_json(parse_file(path));
    } catch (const IoError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

std::string canonical_image_text(const DigitalImage& img) {
    std::ostringstream os;
    os << "{\n  \"dim\": " << img.dim() << ",\n  \"adjacency\": \"" << img.adjacency().name()
       << "\",\n  \"points\": ";
    write_points(os, img.points());
    os << "\n}\n";
    return os.str();
}

void save_image(const std::filesystem::path& path, const DigitalImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << canonical_image_text(img);
}

DigitalMap map_from_json(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw IoError("a map must be a JSON object");
    auto load_side = [&](const char* name) {
        const json& side = field(j, name);
        if (side.is_string()) return load_image(base_dir / side.get<std::string>());
        return image_from_json(side);
    };
    DigitalImage src = load_side("source");
    DigitalImage dst = load_side("target");

    const json& jp = field(j, "pairs");
    if (!jp.is_array()) throw IoError("field \"pairs\" must be an array");
    std::vector<std::pair<Point, Point>> pairs;
    for (const auto& pr : jp) {
        if (!pr.is_array() || pr.size() != 2)
            throw IoError("each pair must be [source point, target point]");
        pairs.emplace_back(point_from_json(pr[0]), point_from_json(pr[1]));
    }
    try {
        return DigitalMap(std::move(src), std::move(dst), pairs);
    } catch (const std::invalid_argument& e) {
        throw IoError(e.what());
    }
}

DigitalMap load_map(const std::filesystem::path& path) {
    try {
        return map_from_json(parse_file(path), path.parent_path());
    } catch (const IoError& e) {
        std::string what = e.what();
        if (what.rfind(path.string(), 0) == 0) throw;
        throw IoError(path.string() + ": " + what);
    }
}

std::string canonical_map_text(const DigitalMap& f) {
    std::ostringstream os;
    os << "{\n  \"source\": " << inline_image_text(f.source()) << ",\n  \"target\": "
       << inline_image_text(f.target()) << ",\n  \"pairs\": [";
    const auto pairs = f.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) os << ',';
        os << '[';
        write_point(os, pairs[i].first);
        os << ',';
        write_point(os, pairs[i].second);
        os << ']';
    }
    os << "]\n}\n";
    return os.str();
}

void save_map(const std::filesystem::path& path, const DigitalMap& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << canonical_map_text(f);
}

ojson point_to_json(const Point& p) {
    ojson a = ojson::array();
    for (int c : p) a.push_back(c);
    return a;
}

ojson image_to_json(const DigitalImage& img) {
    ojson j;
    j["dim"] = img.dim();
    j["adjacency"] = img.adjacency().name();
    ojson pts = ojson::array();
    for (const Point& p : img.points()) pts.push_back(point_to_json(p));
    j["points"] = std::move(pts);
    return j;
}

ojson map_to_json(const DigitalMap& f) {
    ojson j;
    j["source"] = image_to_json(f.source());
    j["target"] = image_to_json(f.target());
    ojson pairs = ojson::array();
    for (const auto& [x, y] : f.pairs()) {
        ojson pr = ojson::array();
        pr.push_back(point_to_json(x));
        pr.push_back(point_to_json(y));
        pairs.push_back(std::move(pr));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

ojson check_result_to_json(const CheckResult& r) {
    ojson j;
    j["verdict"] = to_string(r.verdict);
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.witness_point) j["witness_point"] = point_to_json(*r.witness_point);
    if (r.witness_pair) {
        ojson pr = ojson::array();
        pr.push_back(point_to_json(r.witness_pair->first));
        pr.push_back(point_to_json(r.witness_pair->second));
        j["witness_pair"] = std::move(pr);
    }
    if (r.upl_failure) {
        ojson f;
        f["point"] = point_to_json(r.upl_failure->point);
        f["base_neighbor"] = point_to_json(r.upl_failure->base_neighbor);
        f["lift_count"] = r.upl_failure->lift_count;
        j["upl_failure"] = std::move(f);
    }
    if (!r.decompositions.empty()) {
        ojson ds = ojson::array();
        for (const auto& d : r.decompositions) {
            ojson dj;
            dj["base_point"] = point_to_json(d.base_point);
            ojson centers = ojson::array();
            for (const auto& c : d.sheet_centers) centers.push_back(point_to_json(c));
            dj["sheet_centers"] = std::move(centers);
            ojson sheets = ojson::array();
            for (const auto& s : d.sheets) {
                ojson sj = ojson::array();
                for (const auto& p : s) sj.push_back(point_to_json(p));
                sheets.push_back(std::move(sj));
            }
            dj["sheets"] = std::move(sheets);
            ds.push_back(std::move(dj));
        }
        j["decompositions"] = std::move(ds);
    }
    return j;
}

ojson classification_to_json(const ClassificationReport& r) {
    ojson j;
    j["continuous"] = check_result_to_json(r.continuous);
    j["isomorphism"] = check_result_to_json(r.isomorphism);
    j["covering"] = check_result_to_json(r.covering);
    j["local-iso"] = check_result_to_json(r.local_iso);
    j["pl-iso"] = check_result_to_json(r.pl_iso);
    j["wl-iso"] = check_result_to_json(r.wl_iso);
    j["han-pseudo"] = check_result_to_json(r.han_pseudo);
    j["pak-pseudo"] = check_result_to_json(r.pak_pseudo);
    j["upl"] = check_result_to_json(r.upl);
    return j;
}

ojson bounds_to_json(const EnumBounds& b) {
    ojson j;
    j["box"] = b.box;
    j["max_points"] = b.max_points;
    ojson adjs = ojson::array();
    for (const auto& a : b.adjacencies) adjs.push_back(a.name());
    j["adjacencies"] = std::move(adjs);
    j["connected"] = b.require_connected;
    return j;
}

ojson equivalence_report_to_json(const EquivalenceReport& r) {
    ojson j;
    j["images"] = r.images;
    j["pairs"] = r.pairs;
    j["instances_checked"] = r.instances_checked;
    auto violations_json = [](const std::vector<EquivalenceViolation>& vs) {
        ojson arr = ojson::array();
        for (const auto& v : vs) {
            ojson vj;
            vj["property"] = v.property;
            vj["map"] = map_to_json(v.map);
            vj["predicates"] = v.detail;
            arr.push_back(std::move(vj));
        }
        return arr;
    };
    j["violations"] = violations_json(r.violations);
    j["one_directional_violations"] = violations_json(r.one_directional_violations);
    if (r.probed_han_continuity) {
        ojson probe;
        probe["discontinuous_surjections"] = r.discontinuous_surjections_probed;
        probe["han_pseudocoverings_among_them"] = r.discontinuous_han_pseudocoverings;
        j["han_continuity_probe"] = std::move(probe);
    }
    return j;
}

std::string ascii_grid(const DigitalImage& img) {
    if (img.dim() != 2) throw std::invalid_argument("ascii_grid: only Z^2 images");
    if (img.empty()) return "(empty)\n";
    int minx = img.points()[0][0], maxx = minx, miny = img.points()[0][1], maxy = miny;
    for (const Point& p : img.points()) {
        minx = std::min(minx, p[0]);
        maxx = std::max(maxx, p[0]);
        miny = std::min(miny, p[1]);
        maxy = std::max(maxy, p[1]);
    }
    std::string out;
    for (int y = maxy; y >= miny; --y) {
        for (int x = minx; x <= maxx; ++x)
            out += img.contains(Point{x, y}) ? '#' : '.';
        out += '\n';
    }
    return out;
}

}  // namespace digicover
