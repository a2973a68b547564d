#pragma once

#include "toricaut/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace toricaut {

enum class RootKind { reductive, unipotent };

/// One-parameter subgroup of the graded automorphism group: the variable is
/// sent to itself plus t times the monomial (same degree, not divisible by
/// the variable).
struct Root {
    std::size_t variable;
    Exponents monomial;
    RootKind kind;

    bool operator==(const Root&) const = default;
    auto operator<=>(const Root&) const = default;
};

/// All roots of the grading: for each variable, the monomials of its degree
/// with zero exponent on that variable. Reductive exactly when the monomial
/// has polynomial degree 1. Sorted by (variable, monomial).
std::vector<Root> enumerate_roots(const GradingData& g);

/// The substitution variable -> variable + t * monomial.
GradedSubstitution substitution_of_root(const Root& root, const Rat& t, std::size_t nvars);

struct LeviBlock {
    ClassVec degree;
    std::size_t multiplicity; // r_j: number of variables of this degree
};

/// Variables grouped by exact degree, ordered by first occurrence.
std::vector<LeviBlock> levi_structure(const GradingData& g);

struct AutReport {
    std::vector<LeviBlock> levi_blocks;
    std::size_t reductive_root_count = 0;
    std::size_t unipotent_root_count = 0;
    Int dim_g = 0;                 // sum over variables of dim S_{deg(v)}
    Int dim_torus = 0;             // free rank of the grading group
    Int dim_aut0 = 0;              // dim_g - dim_torus
    Int dim_unipotent_radical = 0; // = unipotent_root_count
};

AutReport aut_report(const GradingData& g);

/// Partition of the roots of the Cox ring of P(E): base roots only touch
/// x-variables; fiber roots send some y_t to y_t + f(x) y_s. A root fitting
/// neither shape aborts with Error (it would contradict the base/fiber
/// splitting of the automorphism group).
struct RootSplit {
    std::vector<Root> base_roots;
    std::vector<Root> fiber_roots;
};

RootSplit split_roots_of_projectivization(const ProjectivizedFan& p);

/// Comparison of the monomial-pair root count against the lattice-pair count
/// {(e_i, m) : <m,e_i> = -1, <m,e_j> >= 0 for j != i} on a smooth complete
/// fan, with the exponent witness a_j = <m, e_j> per lattice pair.
struct DemazureCheck {
    std::size_t monomial_root_count = 0;
    std::size_t lattice_pair_count = 0;
    bool match = false;
    struct Witness {
        std::size_t ray;
        std::vector<Int> character; // m
        Exponents exponents;        // matching root monomial
    };
    std::vector<Witness> witnesses;
};

DemazureCheck demazure_crosscheck(const Fan& f);

/// Dimension bookkeeping for the moduli of complete intersections: the space
/// of Cayley forms modulo the graded automorphisms corrected by the torus.
struct ModuliReport {
    Int cayley_space_dim = 0; // dim S_(0,1)
    Int dim_g = 0;
    Int dim_torus = 0;
    Int dim_aut0 = 0;
    Int moduli_dim = 0; // cayley_space_dim - dim_aut0
    std::vector<bool> ample;
    std::vector<Int> bundle_section_dims; // dim S_{alpha_j} on the base
    Int base_aut0_dim = 0;                // dim Aut0 of the base
    std::vector<std::string> warnings;
};

ModuliReport moduli_dimension(const ProjectivizedFan& p);

} // namespace toricaut
