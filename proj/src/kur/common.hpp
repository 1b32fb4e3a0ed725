#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kur {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Text input that violates a file format.  Messages carry "line N: ...".
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File could not be opened or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure: singular system, divergence, non-finite state.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A claimed partition witness whose constructed state is not a fixed point.
struct InvalidWitnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Normalize into [0, 2pi).
double wrap_angle(double x);

// (a - b) reduced to (-pi, pi].
double circular_diff(double a, double b);

// Length of the shortest arc containing all angles (0 for a single point).
// Equals twice the smallest possible max circular deviation from one value.
double circular_spread(std::vector<double> angles);

// n i.i.d. uniform draws from [0, 2pi); the stream depends only on the seed.
std::vector<double> random_phases(int n, std::uint64_t seed);

// Runs body(0..count-1) on a small thread pool.  Bodies must only touch
// disjoint state (e.g. result slots indexed by the argument).
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace kur
