#include "toricaut/fan.hpp"

#include "toricaut/fourier_motzkin.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toricaut {

IntMatrix Fan::ray_matrix() const
{
    return IntMatrix::from_rows(rays);
}

std::string ValidationReport::summary() const
{
    if (valid()) return "fan is valid";
    std::ostringstream os;
    os << issues.size() << " issue(s):";
    for (const auto& i : issues) os << "\n  - " << i.message;
    return os.str();
}

namespace {

std::string index_list(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

// sigma cap tau strictly exceeds the cone on their common rays iff some point
// of the intersection carries positive weight on a non-common generator:
//   sum lambda_i u_i = sum mu_j v_j,  lambda, mu >= 0,
//   sum of non-common lambda_i and mu_j = 1   (scale normalization)
bool cones_overlap_beyond_common_face(const Fan& f,
                                      const std::vector<std::size_t>& sigma,
                                      const std::vector<std::size_t>& tau)
{
    std::set<std::size_t> common(sigma.begin(), sigma.end());
    std::vector<bool> sigma_common(sigma.size()), tau_common(tau.size());
    for (std::size_t j = 0; j < tau.size(); ++j) tau_common[j] = common.count(tau[j]) > 0;
    std::set<std::size_t> tau_set(tau.begin(), tau.end());
    for (std::size_t i = 0; i < sigma.size(); ++i) sigma_common[i] = tau_set.count(sigma[i]) > 0;

    const std::size_t nvars = sigma.size() + tau.size();
    InequalitySystem sys;
    sys.dim = nvars;
    for (std::size_t c = 0; c < f.rank; ++c) {
        std::vector<Int> row(nvars, Int(0));
        for (std::size_t i = 0; i < sigma.size(); ++i) row[i] = f.rays[sigma[i]][c];
        for (std::size_t j = 0; j < tau.size(); ++j) row[sigma.size() + j] = -f.rays[tau[j]][c];
        sys.add_eq(std::move(row), 0);
    }
    std::vector<Int> norm(nvars, Int(0));
    bool has_noncommon = false;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (!sigma_common[i]) { norm[i] = 1; has_noncommon = true; }
    for (std::size_t j = 0; j < tau.size(); ++j)
        if (!tau_common[j]) { norm[sigma.size() + j] = 1; has_noncommon = true; }
    if (!has_noncommon) return false; // same ray set; intersection is the cone itself
    sys.add_eq(std::move(norm), 1);
    for (std::size_t v = 0; v < nvars; ++v) {
        std::vector<Int> row(nvars, Int(0));
        row[v] = 1;
        sys.add_ge(std::move(row), 0);
    }
    return feasible(sys);
}

} // namespace

ValidationReport validate_fan(const Fan& f)
{
    ValidationReport rep;
    auto issue = [&](ValidationIssue::Kind k, std::string msg, std::vector<std::size_t> subj) {
        rep.issues.push_back({k, std::move(msg), std::move(subj)});
    };

    if (f.rank == 0) {
        issue(ValidationIssue::Kind::bad_rank, "lattice rank must be positive", {});
        return rep;
    }

    bool rays_ok = true;
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const auto& r = f.rays[i];
        if (r.size() != f.rank) {
            issue(ValidationIssue::Kind::ray_wrong_dimension,
                  "ray " + std::to_string(i) + " has wrong dimension", {i});
            rays_ok = false;
            continue;
        }
        Int g = 0;
        for (const Int& x : r) g = gcd(g, x);
        if (g == 0) {
            issue(ValidationIssue::Kind::ray_zero, "ray " + std::to_string(i) + " is zero", {i});
            rays_ok = false;
        } else if (g != 1) {
            issue(ValidationIssue::Kind::ray_not_primitive,
                  "ray " + std::to_string(i) + " is not primitive (gcd " + g.str() + ")", {i});
            rays_ok = false;
        }
    }
    if (rays_ok) {
        std::map<std::vector<Int>, std::size_t> seen;
        for (std::size_t i = 0; i < f.rays.size(); ++i) {
            auto [it, fresh] = seen.emplace(f.rays[i], i);
            if (!fresh)
                issue(ValidationIssue::Kind::ray_duplicate,
                      "rays " + std::to_string(it->second) + " and " + std::to_string(i) +
                          " coincide", {it->second, i});
        }
    }

    std::vector<bool> used(f.rays.size(), false);
    bool cones_ok = true;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        const auto& cone = f.max_cones[c];
        std::set<std::size_t> uniq;
        bool ok = true;
        for (std::size_t idx : cone) {
            if (idx >= f.rays.size()) {
                issue(ValidationIssue::Kind::cone_index_out_of_range,
                      "cone " + std::to_string(c) + " references ray " + std::to_string(idx), {c});
                ok = false;
                break;
            }
            if (!uniq.insert(idx).second) {
                issue(ValidationIssue::Kind::cone_duplicate_index,
                      "cone " + std::to_string(c) + " repeats ray " + std::to_string(idx), {c});
                ok = false;
                break;
            }
            used[idx] = true;
        }
        if (!ok || !rays_ok) { cones_ok = ok && cones_ok; continue; }
        IntMatrix sub(cone.size(), f.rank);
        for (std::size_t i = 0; i < cone.size(); ++i)
            for (std::size_t j = 0; j < f.rank; ++j) sub.at(i, j) = f.rays[cone[i]][j];
        if (rank(sub) != cone.size()) {
            issue(ValidationIssue::Kind::cone_not_simplicial,
                  "cone " + std::to_string(c) + " {" + index_list(cone) +
                      "}: rays are linearly dependent", {c});
            cones_ok = false;
        }
    }
    for (std::size_t i = 0; i < f.rays.size(); ++i)
        if (!used[i] && rays_ok)
            issue(ValidationIssue::Kind::ray_unused,
                  "ray " + std::to_string(i) + " appears in no maximal cone", {i});

    if (!rep.valid() || !cones_ok) return rep;

    for (std::size_t a = 0; a < f.max_cones.size(); ++a)
        for (std::size_t b = a + 1; b < f.max_cones.size(); ++b)
            if (cones_overlap_beyond_common_face(f, f.max_cones[a], f.max_cones[b]))
                issue(ValidationIssue::Kind::cone_pair_not_face,
                      "cones " + std::to_string(a) + " {" + index_list(f.max_cones[a]) + "} and " +
                          std::to_string(b) + " {" + index_list(f.max_cones[b]) +
                          "} intersect beyond their common face", {a, b});
    return rep;
}

void require_valid(const Fan& f)
{
    ValidationReport rep = validate_fan(f);
    if (!rep.valid()) throw Error("invalid fan: " + rep.summary());
}

SmoothnessResult is_smooth(const Fan& f)
{
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        const auto& cone = f.max_cones[c];
        IntMatrix sub(cone.size(), f.rank);
        for (std::size_t i = 0; i < cone.size(); ++i)
            for (std::size_t j = 0; j < f.rank; ++j) sub.at(i, j) = f.rays[cone[i]][j];
        for (const Int& d : smith_normal_form(sub).invariant_factors())
            if (d != 1) return {false, c};
        if (rank(sub) != cone.size()) return {false, c};
    }
    return {true, std::nullopt};
}

bool is_complete(const Fan& f)
{
    if (f.max_cones.empty()) return false;
    std::map<std::vector<std::size_t>, std::size_t> facet_count;
    for (const auto& cone : f.max_cones) {
        if (cone.size() != f.rank) return false; // not full-dimensional
        for (std::size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<std::size_t> facet;
            facet.reserve(cone.size() - 1);
            for (std::size_t i = 0; i < cone.size(); ++i)
                if (i != drop) facet.push_back(cone[i]);
            std::sort(facet.begin(), facet.end());
            ++facet_count[facet];
        }
    }
    return std::all_of(facet_count.begin(), facet_count.end(),
                       [](const auto& kv) { return kv.second == 2; });
}

} // namespace toricaut
