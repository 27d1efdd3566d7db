#include "critgen/point.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <utility>

namespace critgen {

using nlohmann::json;

Point Point::exact(std::vector<Rat> coords) {
  Point p;
  p.mode = EvalMode::exact;
  p.rat = std::move(coords);
  return p;
}

Point Point::floating(std::vector<double> coords) {
  Point p;
  p.mode = EvalMode::floating;
  p.fp = std::move(coords);
  return p;
}

double Point::coord_double(std::size_t i) const {
  return mode == EvalMode::exact ? to_double(rat[i]) : fp[i];
}

Point Point::to_floating() const {
  if (mode == EvalMode::floating) return *this;
  std::vector<double> coords;
  coords.reserve(rat.size());
  for (const Rat& q : rat) coords.push_back(to_double(q));
  return floating(std::move(coords));
}

std::string Point::to_json() const {
  json j;
  if (mode == EvalMode::exact) {
    j["mode"] = "exact";
    json coords = json::array();
    for (const Rat& q : rat) coords.push_back(rat_to_string(q));
    j["coords"] = std::move(coords);
  } else {
    j["mode"] = "floating";
    j["coords"] = fp;
  }
  return j.dump(2);
}

Point Point::from_json(const std::string& text) {
  json j = json::parse(text);
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "exact") {
    std::vector<Rat> coords;
    for (const auto& c : j.at("coords")) coords.push_back(rat_from_string(c.get<std::string>()));
    return exact(std::move(coords));
  }
  if (mode == "floating") {
    return floating(j.at("coords").get<std::vector<double>>());
  }
  throw std::invalid_argument("point mode must be 'exact' or 'floating'");
}

}  // namespace critgen
