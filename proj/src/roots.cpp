#include "toricaut/roots.hpp"

#include <algorithm>
#include <map>

namespace toricaut {

std::vector<Root> enumerate_roots(const GradingData& g)
{
    std::vector<Root> roots;
    for (std::size_t v = 0; v < g.variable_count(); ++v) {
        for (const auto& mono : monomials_of_degree(g, g.variable_degrees[v])) {
            if (mono[v] != 0) continue; // divisible by the variable (v itself included)
            Exponents e(mono.size());
            Int total = 0;
            for (std::size_t i = 0; i < mono.size(); ++i) {
                e[i] = static_cast<int>(mono[i]);
                total += mono[i];
            }
            roots.push_back({v, std::move(e),
                             total == 1 ? RootKind::reductive : RootKind::unipotent});
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

GradedSubstitution substitution_of_root(const Root& root, const Rat& t, std::size_t nvars)
{
    GradedSubstitution s = GradedSubstitution::identity(nvars);
    s.images[root.variable] =
        s.images[root.variable] + GradedPolynomial::monomial(nvars, root.monomial, t);
    return s;
}

std::vector<LeviBlock> levi_structure(const GradingData& g)
{
    std::vector<LeviBlock> blocks;
    for (const auto& deg : g.variable_degrees) {
        auto it = std::find_if(blocks.begin(), blocks.end(),
                               [&](const LeviBlock& b) { return b.degree == deg; });
        if (it == blocks.end()) blocks.push_back({deg, 1});
        else ++it->multiplicity;
    }
    return blocks;
}

AutReport aut_report(const GradingData& g)
{
    AutReport rep;
    rep.levi_blocks = levi_structure(g);
    for (const Root& r : enumerate_roots(g))
        ++(r.kind == RootKind::reductive ? rep.reductive_root_count : rep.unipotent_root_count);

    std::map<ClassVec, Int> piece_dims;
    for (const auto& deg : g.variable_degrees)
        if (!piece_dims.count(deg))
            piece_dims[deg] = Int(graded_piece_dimension(g, deg));
    for (const auto& deg : g.variable_degrees) rep.dim_g += piece_dims[deg];

    rep.dim_torus = Int(g.class_group.free_rank);
    rep.dim_aut0 = rep.dim_g - rep.dim_torus;
    rep.dim_unipotent_radical = Int(rep.unipotent_root_count);
    return rep;
}

RootSplit split_roots_of_projectivization(const ProjectivizedFan& p)
{
    const std::size_t l = p.base_count, r = p.fiber_count;
    RootSplit split;
    for (const Root& root : enumerate_roots(p.picard)) {
        bool base_var = root.variable < l;
        int fiber_exponent_sum = 0;
        std::size_t fiber_slot = l + r;
        for (std::size_t j = 0; j < r; ++j) {
            fiber_exponent_sum += root.monomial[l + j];
            if (root.monomial[l + j] == 1 && fiber_slot == l + r) fiber_slot = l + j;
        }
        if (base_var && fiber_exponent_sum == 0) {
            split.base_roots.push_back(root);
        } else if (!base_var && fiber_exponent_sum == 1 && fiber_slot != root.variable) {
            split.fiber_roots.push_back(root);
        } else {
            throw Error("root of variable " + std::to_string(root.variable + 1) +
                        " is neither a base root nor a fiber root; the base/fiber "
                        "splitting fails on this input");
        }
    }
    return split;
}

DemazureCheck demazure_crosscheck(const Fan& f)
{
    require_valid(f);
    if (!is_complete(f)) throw Error("demazure_crosscheck requires a complete fan");
    if (!is_smooth(f).smooth)
        throw Error("demazure_crosscheck requires a smooth fan (the lattice-pair "
                    "correspondence is asserted only there)");

    GradingData g = class_group(f);
    std::vector<Root> roots = enumerate_roots(g);

    DemazureCheck check;
    check.monomial_root_count = roots.size();

    std::vector<Root> from_lattice;
    for (std::size_t i = 0; i < f.ray_count(); ++i) {
        // lattice points with <m, e_i> >= -1, <m, e_j> >= 0: the polytope of
        // the i-th boundary divisor; keep the face <m, e_i> = -1
        TorusInvariantDivisor d;
        d.coeffs.assign(f.ray_count(), Int(0));
        d.coeffs[i] = 1;
        for (const auto& m : polytope_lattice_points(f, d)) {
            Int pairing = 0;
            for (std::size_t c = 0; c < f.rank; ++c) pairing += m[c] * f.rays[i][c];
            if (pairing != -1) continue;
            Exponents exps(f.ray_count(), 0);
            for (std::size_t j = 0; j < f.ray_count(); ++j) {
                if (j == i) continue;
                Int v = 0;
                for (std::size_t c = 0; c < f.rank; ++c) v += m[c] * f.rays[j][c];
                exps[j] = static_cast<int>(v);
            }
            check.witnesses.push_back({i, m, exps});
            int total = 0;
            for (int x : exps) total += x;
            from_lattice.push_back({i, exps,
                                    total == 1 ? RootKind::reductive : RootKind::unipotent});
        }
    }
    check.lattice_pair_count = from_lattice.size();
    std::sort(from_lattice.begin(), from_lattice.end());
    check.match = from_lattice == roots;
    return check;
}

ModuliReport moduli_dimension(const ProjectivizedFan& p)
{
    if (!p.base) throw Error("moduli_dimension needs the base fan and bundle data");
    const auto& ctx = *p.base;

    ModuliReport rep;
    rep.cayley_space_dim = Int(graded_piece_dimension(p.picard, p.hyperplane_class()));

    AutReport aut = aut_report(p.picard);
    rep.dim_g = aut.dim_g;
    rep.dim_torus = aut.dim_torus;
    rep.dim_aut0 = aut.dim_aut0;
    rep.moduli_dim = rep.cayley_space_dim - rep.dim_aut0;

    for (std::size_t j = 0; j < ctx.bundle.bundle_rank(); ++j) {
        bool amp = is_ample(ctx.base_fan, ctx.bundle.divisors[j]);
        rep.ample.push_back(amp);
        if (!amp)
            rep.warnings.push_back("bundle summand " + std::to_string(j + 1) +
                                   " is not ample; the dimension count is formal");
        rep.bundle_section_dims.push_back(
            Int(graded_piece_dimension(ctx.base_grading, ctx.bundle.classes[j])));
    }
    rep.base_aut0_dim = aut_report(ctx.base_grading).dim_aut0;
    if (rep.moduli_dim <= 0)
        rep.warnings.push_back("group acts with positive-dimensional generic stabilizer");
    return rep;
}

} // namespace toricaut
