#include "toricaut/grading.hpp"

namespace toricaut {

ClassVec GradingData::degree_of_exponents(const std::vector<Int>& exponents) const
{
    return class_group.project(exponents);
}

GradingData class_group(const Fan& f)
{
    require_valid(f);
    if (!is_complete(f)) throw Error("class_group requires a complete fan");

    GradingData g;
    g.class_group = cokernel(f.ray_matrix());
    g.variable_degrees.reserve(f.ray_count());
    for (std::size_t i = 0; i < f.ray_count(); ++i) {
        std::vector<Int> unit(f.ray_count(), Int(0));
        unit[i] = 1;
        g.variable_degrees.push_back(g.class_group.project(unit));
    }
    return g;
}

} // namespace toricaut
