#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace toricaut {

// All lattice and polynomial arithmetic runs on arbitrary-precision
// integers/rationals; no floating point anywhere in the toolkit.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// floor(a/b), b != 0
inline Int floor_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// ceil(a/b), b != 0
inline Int ceil_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

// positive remainder in [0, m), m >= 1
inline Int pos_mod(const Int& a, const Int& m)
{
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

} // namespace toricaut
