#include "toricaut/abelian_group.hpp"

#include <sstream>

namespace toricaut {

ClassVec AbelianGroupPresentation::reduce(ClassVec v) const
{
    if (v.size() != coord_count()) throw Error("class vector has wrong length");
    for (std::size_t t = 0; t < torsion.size(); ++t)
        v[free_rank + t] = pos_mod(v[free_rank + t], torsion[t]);
    return v;
}

ClassVec AbelianGroupPresentation::project(const std::vector<Int>& ambient) const
{
    return reduce(projection.apply(ambient));
}

ClassVec AbelianGroupPresentation::add(const ClassVec& a, const ClassVec& b) const
{
    if (a.size() != b.size()) throw Error("class vector length mismatch");
    ClassVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return reduce(std::move(out));
}

ClassVec AbelianGroupPresentation::negate(const ClassVec& a) const
{
    ClassVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return reduce(std::move(out));
}

ClassVec AbelianGroupPresentation::scale(const Int& n, const ClassVec& a) const
{
    ClassVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = n * a[i];
    return reduce(std::move(out));
}

bool AbelianGroupPresentation::equal(const ClassVec& a, const ClassVec& b) const
{
    return reduce(a) == reduce(b);
}

namespace {

// Augment the projection with the torsion moduli: the group homomorphism
// Z^k -> Z^f (+) (+)Z/d_i lifts to the integer matrix [P_f 0; P_t diag(d)]
// acting on Z^{k+t}. Preimages and kernels reduce to plain integer solves.
IntMatrix augmented_matrix(const AbelianGroupPresentation& g)
{
    const std::size_t f = g.free_rank, t = g.torsion.size(), k = g.ambient_dim();
    IntMatrix m(f + t, k + t);
    for (std::size_t i = 0; i < f + t; ++i)
        for (std::size_t j = 0; j < k; ++j) m.at(i, j) = g.projection.at(i, j);
    for (std::size_t i = 0; i < t; ++i) m.at(f + i, k + i) = g.torsion[i];
    return m;
}

} // namespace

std::vector<Int> AbelianGroupPresentation::preimage(const ClassVec& cls) const
{
    if (cls.size() != coord_count()) throw Error("class vector has wrong length");
    IntMatrix m = augmented_matrix(*this);
    SmithResult snf = smith_normal_form(m);
    const std::size_t r = snf.rank();
    std::vector<Int> rhs = snf.u.apply(cls);
    std::vector<Int> y(m.cols(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < r) {
            const Int& d = snf.d.at(i, i);
            if (rhs[i] % d != 0) throw Error("class has no preimage: presentation not surjective");
            y[i] = rhs[i] / d;
        } else if (rhs[i] != 0) {
            throw Error("class has no preimage: presentation not surjective");
        }
    }
    std::vector<Int> z = snf.v.apply(y);
    return {z.begin(), z.begin() + static_cast<std::ptrdiff_t>(ambient_dim())};
}

IntMatrix AbelianGroupPresentation::kernel_lattice() const
{
    IntMatrix m = augmented_matrix(*this);
    auto basis = kernel_basis(m);
    IntMatrix gens(basis.size(), ambient_dim());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < ambient_dim(); ++j) gens.at(i, j) = basis[i][j];
    return hermite_normal_form(gens);
}

std::string AbelianGroupPresentation::describe() const
{
    std::ostringstream os;
    if (free_rank == 1) os << "Z";
    else if (free_rank > 1) os << "Z^" << free_rank;
    for (const Int& d : torsion) os << (os.str().empty() ? "" : " (+) ") << "Z/" << d;
    if (os.str().empty()) os << "0";
    return os.str();
}

AbelianGroupPresentation cokernel(const IntMatrix& a)
{
    SmithResult snf = smith_normal_form(a);
    const std::size_t rows = a.rows();
    const std::size_t k = std::min(a.rows(), a.cols());

    std::vector<std::size_t> free_rows, torsion_rows;
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < rows; ++i) {
        const Int d = i < k ? snf.d.at(i, i) : Int(0);
        if (d == 0) free_rows.push_back(i);
        else if (d >= 2) { torsion_rows.push_back(i); torsion.push_back(d); }
        // d == 1 rows die in the quotient
    }

    // canonicalize the free coordinates: same row lattice, HNF basis
    IntMatrix free_part(free_rows.size(), rows);
    for (std::size_t i = 0; i < free_rows.size(); ++i)
        for (std::size_t j = 0; j < rows; ++j) free_part.at(i, j) = snf.u.at(free_rows[i], j);
    free_part = hermite_normal_form(free_part);

    AbelianGroupPresentation g;
    g.free_rank = free_rows.size();
    g.torsion = torsion;
    g.projection = IntMatrix(g.free_rank + torsion.size(), rows);
    for (std::size_t i = 0; i < g.free_rank; ++i)
        for (std::size_t j = 0; j < rows; ++j) g.projection.at(i, j) = free_part.at(i, j);
    for (std::size_t i = 0; i < torsion_rows.size(); ++i)
        for (std::size_t j = 0; j < rows; ++j)
            g.projection.at(g.free_rank + i, j) = pos_mod(snf.u.at(torsion_rows[i], j), torsion[i]);
    return g;
}

std::string class_to_string(const ClassVec& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

} // namespace toricaut
