#pragma once

#include "toricaut/fan.hpp"
#include "toricaut/grading.hpp"

#include <vector>

namespace toricaut {

/// Torus-invariant divisor D = sum a_i D_i, one coefficient per ray.
struct TorusInvariantDivisor {
    std::vector<Int> coeffs;
};

/// Piecewise-linear support function of a divisor: h(e_i) = -a_i, linear on
/// each maximal cone with rational covector m_sigma there.
struct SupportFunction {
    std::vector<Int> ray_values;                    // h(e_i)
    std::vector<std::vector<Rat>> cone_linear_forms; // m_sigma per maximal cone
};

SupportFunction support_function(const Fan& f, const TorusInvariantDivisor& d);

/// Cartier: every per-cone covector is integral.
bool is_cartier(const Fan& f, const TorusInvariantDivisor& d);

/// Ample: Cartier and strictly convex, <m_sigma, e> > h(e) for every maximal
/// cone sigma and every ray e outside sigma.
bool is_ample(const Fan& f, const TorusInvariantDivisor& d);

/// All m in Z^rank with <m, e_i> >= -a_i for every ray, lexicographically
/// sorted. Complete fans give polytopes; an unbounded polyhedron raises Error.
std::vector<std::vector<Int>> polytope_lattice_points(const Fan& f,
                                                      const TorusInvariantDivisor& d);

/// All monomial exponent vectors of the given degree: one particular
/// preimage translated around the kernel lattice of the degree map, filtered
/// to the non-negative orthant. Empty when the class is not effective.
std::vector<std::vector<Int>> monomials_of_degree(const GradingData& g, const ClassVec& degree);

/// dim of the graded piece S_degree.
std::size_t graded_piece_dimension(const GradingData& g, const ClassVec& degree);

/// Coefficients of the principal divisor div(chi^m) = sum <m, e_i> D_i.
TorusInvariantDivisor principal_divisor(const Fan& f, const std::vector<Int>& m);

} // namespace toricaut
