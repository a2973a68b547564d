#include "toricaut/divisor.hpp"

#include "toricaut/fourier_motzkin.hpp"

#include <algorithm>

namespace toricaut {

namespace {

void check_divisor(const Fan& f, const TorusInvariantDivisor& d)
{
    if (d.coeffs.size() != f.ray_count())
        throw Error("divisor has " + std::to_string(d.coeffs.size()) + " coefficients, fan has " +
                    std::to_string(f.ray_count()) + " rays");
}

// exact solve of the square system (rays of cone) . m = values
std::vector<Rat> solve_cone_covector(const Fan& f, const std::vector<std::size_t>& cone,
                                     const std::vector<Int>& values)
{
    const std::size_t n = f.rank;
    if (cone.size() != n) throw Error("support function needs full-dimensional maximal cones");
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(f.rays[cone[i]][j]);
        m[i][n] = Rat(values[i]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw Error("degenerate cone system (cone not simplicial?)");
        std::swap(m[col], m[piv]);
        const Rat p = m[col][col];
        for (auto& x : m[col]) x /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rat factor = m[r][col];
            for (std::size_t j = col; j <= n; ++j) m[r][j] -= factor * m[col][j];
        }
    }
    std::vector<Rat> sol(n);
    for (std::size_t i = 0; i < n; ++i) sol[i] = m[i][n];
    return sol;
}

Rat dot(const std::vector<Rat>& m, const std::vector<Int>& v)
{
    Rat s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += m[i] * Rat(v[i]);
    return s;
}

} // namespace

SupportFunction support_function(const Fan& f, const TorusInvariantDivisor& d)
{
    check_divisor(f, d);
    SupportFunction h;
    h.ray_values.reserve(f.ray_count());
    for (const Int& a : d.coeffs) h.ray_values.push_back(-a);
    h.cone_linear_forms.reserve(f.max_cones.size());
    for (const auto& cone : f.max_cones) {
        std::vector<Int> values;
        values.reserve(cone.size());
        for (std::size_t idx : cone) values.push_back(h.ray_values[idx]);
        h.cone_linear_forms.push_back(solve_cone_covector(f, cone, values));
    }
    return h;
}

bool is_cartier(const Fan& f, const TorusInvariantDivisor& d)
{
    SupportFunction h = support_function(f, d);
    for (const auto& m : h.cone_linear_forms)
        for (const Rat& x : m)
            if (boost::multiprecision::denominator(x) != 1) return false;
    return true;
}

bool is_ample(const Fan& f, const TorusInvariantDivisor& d)
{
    if (!is_cartier(f, d)) return false;
    SupportFunction h = support_function(f, d);
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        const auto& cone = f.max_cones[c];
        for (std::size_t i = 0; i < f.ray_count(); ++i) {
            if (std::find(cone.begin(), cone.end(), i) != cone.end()) continue;
            if (dot(h.cone_linear_forms[c], f.rays[i]) <= Rat(h.ray_values[i])) return false;
        }
    }
    return true;
}

std::vector<std::vector<Int>> polytope_lattice_points(const Fan& f,
                                                      const TorusInvariantDivisor& d)
{
    check_divisor(f, d);
    InequalitySystem sys;
    sys.dim = f.rank;
    for (std::size_t i = 0; i < f.ray_count(); ++i)
        sys.add_ge(f.rays[i], -d.coeffs[i]); // <m, e_i> >= -a_i
    return enumerate_integer_points(sys, enumeration_cap());
}

std::vector<std::vector<Int>> monomials_of_degree(const GradingData& g, const ClassVec& degree)
{
    const std::size_t l = g.variable_count();
    std::vector<Int> base = g.class_group.preimage(g.class_group.reduce(degree));
    IntMatrix kernel = g.class_group.kernel_lattice(); // rows span {a : deg(a) = 0}

    // exponent vectors a = base + kernel^T t, a >= 0
    InequalitySystem sys;
    sys.dim = kernel.rows();
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<Int> row(kernel.rows());
        for (std::size_t k = 0; k < kernel.rows(); ++k) row[k] = kernel.at(k, i);
        sys.add_ge(std::move(row), -base[i]);
    }
    auto shifts = enumerate_integer_points(sys, enumeration_cap());

    std::vector<std::vector<Int>> monomials;
    monomials.reserve(shifts.size());
    for (const auto& t : shifts) {
        std::vector<Int> a = base;
        for (std::size_t k = 0; k < kernel.rows(); ++k)
            for (std::size_t i = 0; i < l; ++i) a[i] += kernel.at(k, i) * t[k];
        monomials.push_back(std::move(a));
    }
    std::sort(monomials.begin(), monomials.end());
    return monomials;
}

std::size_t graded_piece_dimension(const GradingData& g, const ClassVec& degree)
{
    return monomials_of_degree(g, degree).size();
}

TorusInvariantDivisor principal_divisor(const Fan& f, const std::vector<Int>& m)
{
    if (m.size() != f.rank) throw Error("character has wrong dimension");
    TorusInvariantDivisor d;
    d.coeffs.reserve(f.ray_count());
    for (const auto& ray : f.rays) {
        Int s = 0;
        for (std::size_t j = 0; j < f.rank; ++j) s += m[j] * ray[j];
        d.coeffs.push_back(s);
    }
    return d;
}

} // namespace toricaut
