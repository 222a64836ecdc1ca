#include "forge/util/rng.hpp"

#include <cmath>
#include <numbers>

namespace forge::util {

double Rng::normal(double sigma) {
    // Two draws regardless of sigma so the stream layout is stable.
    const double u1 = uniform();
    const double u2 = uniform();
    // 1-u1 in (0,1] keeps the log finite.
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return sigma * r * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace forge::util
