#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "digicover/predicates.hpp"
#include "digicover/search.hpp"

namespace digicover {

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Image file: {"dim": n, "adjacency": "c1", "points": [[0,0],[1,0]]}.
// Adjacency accepts the canonical c-form and the numeric aliases; saving
// always normalizes to the c-form with sorted points.
DigitalImage image_from_json(const nlohmann::json& j);
DigitalImage load_image(const std::filesystem::path& path);
std::string canonical_image_text(const DigitalImage& img);
void save_image(const std::filesystem::path& path, const DigitalImage& img);

// Map file: {"source": <image or path>, "target": <image or path>,
// "pairs": [[[0,0],[0,0]], ...]}. Path references are resolved relative to
// the map file's directory.
DigitalMap map_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
DigitalMap load_map(const std::filesystem::path& path);
std::string canonical_map_text(const DigitalMap& f);
void save_map(const std::filesystem::path& path, const DigitalMap& f);

// report serialization (machine output of the CLI)
nlohmann::ordered_json point_to_json(const Point& p);
nlohmann::ordered_json image_to_json(const DigitalImage& img);
nlohmann::ordered_json map_to_json(const DigitalMap& f);
nlohmann::ordered_json check_result_to_json(const CheckResult& r);
nlohmann::ordered_json classification_to_json(const ClassificationReport& r);
nlohmann::ordered_json bounds_to_json(const EnumBounds& b);
nlohmann::ordered_json equivalence_report_to_json(const EquivalenceReport& r);

Point point_from_json(const nlohmann::json& j);
PathSeq path_from_json(const nlohmann::json& j);

// two-dimensional images rendered as a character grid, origin lower left
std::string ascii_grid(const DigitalImage& img);

}  // namespace digicover
