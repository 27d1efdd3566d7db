#pragma once

#include "critgen/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace critgen {

enum class EvalMode { exact, floating };

/// Dense coordinate vector in one of two modes: exact rational coordinates
/// for certification, doubles for solver work and finite differences.
struct Point {
  EvalMode mode = EvalMode::floating;
  std::vector<Rat> rat;
  std::vector<double> fp;

  static Point exact(std::vector<Rat> coords);
  static Point floating(std::vector<double> coords);

  std::size_t size() const { return mode == EvalMode::exact ? rat.size() : fp.size(); }
  bool is_exact() const { return mode == EvalMode::exact; }

  /// Coordinate as a double regardless of mode.
  double coord_double(std::size_t i) const;

  Point to_floating() const;

  /// {"mode": "exact"|"floating", "coords": [...]}; exact coordinates are
  /// "num/den" strings.
  std::string to_json() const;
  static Point from_json(const std::string& text);
};

}  // namespace critgen
