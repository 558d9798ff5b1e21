#pragma once

#include <string>
#include <vector>

namespace ore {

struct WorkedExample {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Replays the worked examples: W-ness of t^2 + 1 and (t - j)(t - i) over
/// the rational quaternions, the Phi-transform special cases, rgcd versus
/// the minimal polynomial of an intersection with a set that is not full,
/// the metro equation against quadratic W-polynomials, and the repeated
/// linear factor (t - u)^2 over Q(u) with d/du.
std::vector<WorkedExample> worked_examples();

}  // namespace ore
