#pragma once

#include "toricaut/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace toricaut {

/// Dense matrix over arbitrary-precision integers. Row-major, value type.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Int> row(std::size_t r) const;
    std::vector<Int> col(std::size_t c) const;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<Int> apply(const std::vector<Int>& v) const; // A * v
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

struct SmithResult {
    IntMatrix u; // rows x rows, unimodular
    IntMatrix d; // same shape as input, diagonal with divisibility chain
    IntMatrix v; // cols x cols, unimodular
    std::vector<Int> invariant_factors() const; // nonzero diagonal entries, in chain order
    std::size_t rank() const { return invariant_factors().size(); }
};

/// U * A * V = D with U, V unimodular and D = diag(d_1 | d_2 | ...), d_i >= 0.
SmithResult smith_normal_form(const IntMatrix& a);

/// Exact determinant (fraction-free Bareiss elimination). Square input.
Int determinant(const IntMatrix& a);

/// Rank over Q (equals the number of nonzero invariant factors).
std::size_t rank(const IntMatrix& a);

/// Canonical row-style Hermite normal form of the row span of `a`:
/// echelon rows with positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped, so equal row lattices give equal HNFs.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Two integer matrices span the same row lattice.
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

/// Saturated basis of {v : A v = 0}, one vector per row of the result,
/// in canonical (HNF) form ordered lexicographically.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a);

} // namespace toricaut
