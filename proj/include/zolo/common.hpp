#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace zolo {

using cd = std::complex<double>;

enum class Color { White, Black, Grey };

inline char color_char(Color c) {
    switch (c) {
        case Color::White: return 'w';
        case Color::Black: return 'b';
        default: return 'g';
    }
}

inline std::string color_name(Color c) {
    switch (c) {
        case Color::White: return "white";
        case Color::Black: return "black";
        default: return "grey";
    }
}

inline Color color_from_name(const std::string& s) {
    if (s == "white") return Color::White;
    if (s == "black") return Color::Black;
    if (s == "grey" || s == "gray") return Color::Grey;
    throw std::runtime_error("unknown color: " + s);
}

// Domain error types, thrown by library operations.
struct NotATree : std::runtime_error { using std::runtime_error::runtime_error; };
struct ColorClash : std::runtime_error { using std::runtime_error::runtime_error; };
struct BadRotation : std::runtime_error { using std::runtime_error::runtime_error; };
struct NoConvergence : std::runtime_error { using std::runtime_error::runtime_error; };
struct StarTree : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotChebyshev : std::runtime_error { using std::runtime_error::runtime_error; };
struct LiftDivergence : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotMatchingClass : std::runtime_error { using std::runtime_error::runtime_error; };
struct SingularConstraint : std::runtime_error { using std::runtime_error::runtime_error; };
struct PassportJump : std::runtime_error { using std::runtime_error::runtime_error; };
struct IdentityFails : std::runtime_error { using std::runtime_error::runtime_error; };
struct UnexpectedOrder : std::runtime_error { using std::runtime_error::runtime_error; };

using Rng = std::mt19937_64;

inline cd rand_unit(Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng), u(rng)};
}

// lexicographic order on (re, im); used everywhere determinism is needed
inline bool complex_less(cd a, cd b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace zolo
