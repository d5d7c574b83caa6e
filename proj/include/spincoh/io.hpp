// JSON serialization for states and constellations plus fixed-precision
// numeric formatting for CSV output.
#pragma once

#include <string>

#include "spincoh/majorana.hpp"
#include "spincoh/states.hpp"

namespace spincoh {

// 12 significant digits, locale-independent ("%.12g").
std::string format_sig(double x);

// { "dim": d, "amps": [[re, im], ...], "label": text }
std::string state_to_json(const FockVector& state);
FockVector state_from_json(const std::string& text);

// { "two_s": n, "points": [[x, y, z], ...], "north_multiplicity": m }
std::string constellation_to_json(const MajoranaConstellation& c);

}  // namespace spincoh
