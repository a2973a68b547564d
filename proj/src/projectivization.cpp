#include "toricaut/projectivization.hpp"

namespace toricaut {

BundleSpec make_bundle(const GradingData& base_grading, std::vector<TorusInvariantDivisor> divisors)
{
    if (divisors.size() < 2) throw Error("bundle needs at least two summands (r >= 2)");
    BundleSpec e;
    e.classes.reserve(divisors.size());
    for (const auto& d : divisors) {
        if (d.coeffs.size() != base_grading.variable_count())
            throw Error("bundle divisor length does not match the ray count");
        e.classes.push_back(base_grading.class_group.project(d.coeffs));
    }
    e.divisors = std::move(divisors);
    return e;
}

std::vector<ClassVec> ProjectivizedFan::x_degrees() const
{
    return {picard.variable_degrees.begin(),
            picard.variable_degrees.begin() + static_cast<std::ptrdiff_t>(base_count)};
}

std::vector<ClassVec> ProjectivizedFan::y_degrees() const
{
    return {picard.variable_degrees.begin() + static_cast<std::ptrdiff_t>(base_count),
            picard.variable_degrees.end()};
}

ClassVec ProjectivizedFan::hyperplane_class() const
{
    ClassVec c = picard.class_group.zero();
    c[picard.class_group.free_rank - 1] = 1;
    return c;
}

GradingData picard_of_projectivization(const GradingData& base_grading, const BundleSpec& e)
{
    const std::size_t l = base_grading.variable_count();
    const std::size_t r = e.bundle_rank();
    const auto& cl = base_grading.class_group;
    const std::size_t f = cl.free_rank, t = cl.torsion.size();

    // phi(a, b) = (sum a_i beta_i - sum b_j alpha_j, sum b_j) on Z^l (+) Z^r,
    // written in canonical coordinates: base free rows, the new Z row, then
    // base torsion rows.
    AbelianGroupPresentation pic;
    pic.free_rank = f + 1;
    pic.torsion = cl.torsion;
    pic.projection = IntMatrix(f + 1 + t, l + r);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t row = 0; row < f; ++row) pic.projection.at(row, i) = cl.projection.at(row, i);
        for (std::size_t row = 0; row < t; ++row)
            pic.projection.at(f + 1 + row, i) = cl.projection.at(f + row, i);
    }
    for (std::size_t j = 0; j < r; ++j) {
        const ClassVec& alpha = e.classes[j];
        for (std::size_t row = 0; row < f; ++row) pic.projection.at(row, l + j) = -alpha[row];
        pic.projection.at(f, l + j) = 1;
        for (std::size_t row = 0; row < t; ++row)
            pic.projection.at(f + 1 + row, l + j) = -alpha[f + row];
    }

    GradingData g;
    g.class_group = std::move(pic);
    g.variable_degrees.reserve(l + r);
    for (std::size_t v = 0; v < l + r; ++v) {
        std::vector<Int> unit(l + r, Int(0));
        unit[v] = 1;
        g.variable_degrees.push_back(g.class_group.project(unit));
    }
    return g;
}

ProjectivizedFan projectivize(const Fan& f, const BundleSpec& e)
{
    require_valid(f);
    if (!is_complete(f)) throw Error("projectivize requires a complete fan");
    const std::size_t r = e.bundle_rank();
    if (r < 2) throw Error("bundle needs at least two summands (r >= 2)");
    for (const auto& d : e.divisors)
        if (d.coeffs.size() != f.ray_count())
            throw Error("bundle divisor length does not match the fan ray count");

    const std::size_t l = f.ray_count();
    const std::size_t d = f.rank;

    ProjectivizedFan p;
    p.base_count = l;
    p.fiber_count = r;
    p.fan.rank = d + r - 1;

    // lifted base rays: (e_i, a_{2,i} - a_{1,i}, ..., a_{r,i} - a_{1,i});
    // the fiber block is -(h_j - h_1)(e_i) in the n_2..n_r coordinates
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<Int> ray(p.fan.rank, Int(0));
        for (std::size_t c = 0; c < d; ++c) ray[c] = f.rays[i][c];
        for (std::size_t j = 1; j < r; ++j)
            ray[d + j - 1] = e.divisors[j].coeffs[i] - e.divisors[0].coeffs[i];
        p.fan.rays.push_back(std::move(ray));
    }
    // fiber rays: n_1 = -(n_2 + ... + n_r), then the standard basis n_2..n_r
    {
        std::vector<Int> n1(p.fan.rank, Int(0));
        for (std::size_t j = 1; j < r; ++j) n1[d + j - 1] = -1;
        p.fan.rays.push_back(std::move(n1));
        for (std::size_t j = 1; j < r; ++j) {
            std::vector<Int> nk(p.fan.rank, Int(0));
            nk[d + j - 1] = 1;
            p.fan.rays.push_back(std::move(nk));
        }
    }

    // each base cone pairs with the span of all fiber rays but one
    for (const auto& cone : f.max_cones)
        for (std::size_t omit = 0; omit < r; ++omit) {
            std::vector<std::size_t> big = cone;
            for (std::size_t j = 0; j < r; ++j)
                if (j != omit) big.push_back(l + j);
            p.fan.max_cones.push_back(std::move(big));
        }

    GradingData base_grading = class_group(f);
    p.picard = picard_of_projectivization(base_grading, e);
    p.base = ProjectivizedFan::BaseContext{f, std::move(base_grading), e};
    return p;
}

} // namespace toricaut
