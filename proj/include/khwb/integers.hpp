#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace khwb {

// Exact arithmetic throughout; no floating point anywhere in the engine.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace khwb
