#pragma once

#include <string>
#include <vector>

#include "points/configuration.hpp"

namespace toric::io {

using geom::IntVec;
using geom::RatVec;

// A parsed input document. Two on-disk forms are accepted:
//
//  * line format: optional "name <string>" and "dilation <i[,i...]>" lines,
//    a mandatory "dim <n>" line, then one point (n integers) per line;
//    '#' starts a comment.
//  * a JSON object {"name": ..., "dim": n, "points": [[...], ...],
//    "dilations": [...]} (detected by a leading '{').
struct InputDocument {
    std::string name;
    int dim = 0;
    std::vector<IntVec> points;
    std::vector<int> dilations; // empty means {1}
};

InputDocument parse_input(const std::string& text);

// Height vectors for the k-check command: a JSON array of arrays (entries
// integers or "p/q" strings), or one whitespace-separated vector per line.
std::vector<RatVec> parse_heights(const std::string& text);

} // namespace toric::io
