#ifndef MAG_CONSTANTS_HPP
#define MAG_CONSTANTS_HPP

namespace mag::constants {

// CGS units throughout: cm, g, s.
inline constexpr double G = 6.674e-8;          // cm^3 g^-1 s^-2
inline constexpr double c = 2.99792458e10;     // cm/s
inline constexpr double M_sun = 1.989e33;      // g
inline constexpr double minute = 60.0;         // s
inline constexpr double day = 86400.0;         // s
inline constexpr double year = 365.25 * day;   // s
inline constexpr double micron = 1e-4;         // cm
inline constexpr double angstrom = 1e-8;       // cm

inline double schwarzschild_radius(double mass_g) {
    return 2.0 * G * mass_g / (c * c);
}

} // namespace mag::constants

#endif
