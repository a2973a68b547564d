#pragma once

#include "toricaut/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricaut {

/// Element of a finitely generated abelian group in canonical coordinates:
/// free coordinates first, then one coordinate per torsion factor.
using ClassVec = std::vector<Int>;

/// Z^free_rank (+) Z/d_1 (+) ... (+) Z/d_t with d_1 | d_2 | ..., d_i >= 2,
/// together with a surjection from an ambient Z^k given by `projection`
/// (free rows first, then torsion rows).
struct AbelianGroupPresentation {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;
    IntMatrix projection; // (free_rank + torsion.size()) x k

    std::size_t ambient_dim() const { return projection.cols(); }
    std::size_t coord_count() const { return free_rank + torsion.size(); }
    bool is_torsion_free() const { return torsion.empty(); }

    /// Reduce torsion coordinates into [0, d_i).
    ClassVec reduce(ClassVec v) const;
    /// Image of an ambient vector, reduced.
    ClassVec project(const std::vector<Int>& ambient) const;
    ClassVec zero() const { return ClassVec(coord_count(), Int(0)); }
    ClassVec add(const ClassVec& a, const ClassVec& b) const;
    ClassVec negate(const ClassVec& a) const;
    ClassVec scale(const Int& n, const ClassVec& a) const;
    bool equal(const ClassVec& a, const ClassVec& b) const;

    /// Some ambient vector mapping to the given class. The projection is
    /// surjective by construction, so this always succeeds on well-formed
    /// presentations.
    std::vector<Int> preimage(const ClassVec& cls) const;

    /// Canonical HNF basis (rows) of {v in Z^k : project(v) = 0}, the kernel
    /// of the group homomorphism (torsion coordinates taken mod d_i).
    IntMatrix kernel_lattice() const;

    std::string describe() const; // e.g. "Z^2" or "Z (+) Z/2"
};

/// Presentation of Z^rows(A) / image(A), with the canonical projection.
AbelianGroupPresentation cokernel(const IntMatrix& a);

std::string class_to_string(const ClassVec& v);

} // namespace toricaut
