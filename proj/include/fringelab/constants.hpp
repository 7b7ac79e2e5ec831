#pragma once

namespace fringelab {

inline constexpr double speed_of_light = 299'792'458.0;  // m/s, exact SI value
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double ln2 = 0.69314718055994530942;

}  // namespace fringelab
