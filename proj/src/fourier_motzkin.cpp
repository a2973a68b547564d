#include "toricaut/fourier_motzkin.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace toricaut {

void InequalitySystem::add_ge(std::vector<Int> coeffs, Int rhs)
{
    if (coeffs.size() != dim) throw Error("inequality has wrong dimension");
    inequalities.push_back({std::move(coeffs), std::move(rhs)});
}

void InequalitySystem::add_eq(std::vector<Int> coeffs, Int rhs)
{
    if (coeffs.size() != dim) throw Error("equality has wrong dimension");
    equalities.push_back({std::move(coeffs), std::move(rhs)});
}

namespace {

// divide through by the gcd of all coefficients and the rhs (half-space
// unchanged under positive scaling)
void normalize(LinearInequality& q)
{
    Int g = 0;
    for (const Int& c : q.coeffs) g = gcd(g, c);
    g = gcd(g, q.rhs);
    if (g > 1) {
        for (Int& c : q.coeffs) c /= g;
        q.rhs /= g;
    }
}

bool all_zero(const std::vector<Int>& v)
{
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Deduplicate by coefficient vector, keeping the strongest rhs. Constant rows
// are resolved on the spot: returns false on a contradiction 0 >= positive.
bool compact(std::vector<LinearInequality>& ineqs)
{
    std::map<std::vector<Int>, Int> best;
    for (auto& q : ineqs) {
        normalize(q);
        if (all_zero(q.coeffs)) {
            if (q.rhs > 0) return false;
            continue;
        }
        auto [it, fresh] = best.emplace(q.coeffs, q.rhs);
        if (!fresh && q.rhs > it->second) it->second = q.rhs;
    }
    ineqs.clear();
    for (auto& [c, r] : best) ineqs.push_back({c, r});
    return true;
}

// Substitute out the equalities by exact pivoting. Returns the surviving
// inequality system over the same coordinates (pivoted coordinates carry zero
// coefficients everywhere afterwards), or nullopt when the equalities are
// already inconsistent.
std::optional<std::vector<LinearInequality>> eliminate_equalities(const InequalitySystem& sys)
{
    std::vector<LinearInequality> eqs = sys.equalities;
    std::vector<LinearInequality> ineqs = sys.inequalities;

    for (std::size_t e = 0; e < eqs.size(); ++e) {
        normalize(eqs[e]);
        std::size_t piv = sys.dim;
        for (std::size_t j = 0; j < sys.dim; ++j)
            if (eqs[e].coeffs[j] != 0) { piv = j; break; }
        if (piv == sys.dim) {
            if (eqs[e].rhs != 0) return std::nullopt;
            continue;
        }
        const Int a = eqs[e].coeffs[piv];
        auto substitute = [&](LinearInequality& row, bool is_eq) {
            const Int b = row.coeffs[piv];
            if (b == 0) return;
            // row <- |a| row - sign-corrected multiple of eq; scaling an
            // inequality needs a positive factor
            Int scale = is_eq ? a : abs(a);
            Int mult = is_eq ? b : (a > 0 ? b : -b);
            for (std::size_t j = 0; j < sys.dim; ++j)
                row.coeffs[j] = scale * row.coeffs[j] - mult * eqs[e].coeffs[j];
            row.rhs = scale * row.rhs - mult * eqs[e].rhs;
        };
        for (std::size_t e2 = e + 1; e2 < eqs.size(); ++e2) substitute(eqs[e2], true);
        for (auto& q : ineqs) substitute(q, false);
    }
    return ineqs;
}

// One Fourier-Motzkin step removing coordinate `var`.
bool fm_eliminate(std::vector<LinearInequality>& ineqs, std::size_t var)
{
    std::vector<LinearInequality> pos, neg, out;
    for (auto& q : ineqs) {
        if (q.coeffs[var] > 0) pos.push_back(std::move(q));
        else if (q.coeffs[var] < 0) neg.push_back(std::move(q));
        else out.push_back(std::move(q));
    }
    for (const auto& p : pos)
        for (const auto& n : neg) {
            // p: a x_v + ... >= r1 (a>0), n: -b x_v + ... >= r2 (b>0)
            const Int a = p.coeffs[var], b = -n.coeffs[var];
            LinearInequality comb;
            comb.coeffs.resize(p.coeffs.size());
            for (std::size_t j = 0; j < p.coeffs.size(); ++j)
                comb.coeffs[j] = b * p.coeffs[j] + a * n.coeffs[j];
            comb.rhs = b * p.rhs + a * n.rhs;
            out.push_back(std::move(comb));
        }
    ineqs = std::move(out);
    return compact(ineqs);
}

} // namespace

bool feasible(const InequalitySystem& sys)
{
    auto reduced = eliminate_equalities(sys);
    if (!reduced) return false;
    std::vector<LinearInequality> ineqs = std::move(*reduced);
    if (!compact(ineqs)) return false;
    for (std::size_t v = 0; v < sys.dim; ++v)
        if (!fm_eliminate(ineqs, v)) return false;
    return true;
}

std::optional<std::vector<std::pair<Int, Int>>> integer_bounding_box(const InequalitySystem& sys)
{
    // equalities become inequality pairs so no coordinate drops out of the box
    std::vector<LinearInequality> base = sys.inequalities;
    for (const auto& e : sys.equalities) {
        base.push_back(e);
        LinearInequality flip = e;
        for (Int& c : flip.coeffs) c = -c;
        flip.rhs = -flip.rhs;
        base.push_back(std::move(flip));
    }

    std::vector<std::pair<Int, Int>> box(sys.dim);
    for (std::size_t keep = 0; keep < sys.dim; ++keep) {
        std::vector<LinearInequality> ineqs = base;
        if (!compact(ineqs)) return std::nullopt;
        for (std::size_t v = 0; v < sys.dim; ++v) {
            if (v == keep) continue;
            if (!fm_eliminate(ineqs, v)) return std::nullopt;
        }
        bool has_lo = false, has_hi = false;
        Int lo, hi;
        for (const auto& q : ineqs) {
            const Int& c = q.coeffs[keep];
            if (c > 0) { // x >= rhs/c
                Int cand = ceil_div(q.rhs, c);
                if (!has_lo || cand > lo) { lo = cand; has_lo = true; }
            } else if (c < 0) { // x <= rhs/c
                Int cand = floor_div(q.rhs, c);
                if (!has_hi || cand < hi) { hi = cand; has_hi = true; }
            }
        }
        if (!has_lo || !has_hi)
            throw Error("polyhedron is unbounded in coordinate " + std::to_string(keep));
        if (lo > hi) return std::nullopt;
        box[keep] = {lo, hi};
    }
    return box;
}

std::vector<std::vector<Int>> enumerate_integer_points(const InequalitySystem& sys,
                                                       unsigned long long max_points)
{
    if (sys.dim == 0) {
        // only constant constraints; the unique candidate is the empty point
        InequalitySystem check = sys;
        return feasible(check) ? std::vector<std::vector<Int>>{{}}
                               : std::vector<std::vector<Int>>{};
    }
    auto box = integer_bounding_box(sys);
    if (!box) return {};

    Int volume = 1;
    for (const auto& [lo, hi] : *box) volume *= (hi - lo + 1);
    if (volume > Int(max_points))
        throw Error("enumeration box of " + volume.str() + " points exceeds the cap of " +
                    std::to_string(max_points) + " (see TORICAUT_MAX_ENUM)");

    auto satisfies = [&](const std::vector<Int>& x) {
        for (const auto& q : sys.equalities) {
            Int s = -q.rhs;
            for (std::size_t j = 0; j < sys.dim; ++j) s += q.coeffs[j] * x[j];
            if (s != 0) return false;
        }
        for (const auto& q : sys.inequalities) {
            Int s = -q.rhs;
            for (std::size_t j = 0; j < sys.dim; ++j) s += q.coeffs[j] * x[j];
            if (s < 0) return false;
        }
        return true;
    };

    std::vector<std::vector<Int>> points;
    std::vector<Int> x(sys.dim);
    for (std::size_t j = 0; j < sys.dim; ++j) x[j] = (*box)[j].first;
    for (;;) {
        if (satisfies(x)) points.push_back(x);
        // odometer increment from the last coordinate (keeps lex order)
        std::size_t j = sys.dim;
        while (j > 0) {
            --j;
            if (x[j] < (*box)[j].second) {
                ++x[j];
                for (std::size_t k = j + 1; k < sys.dim; ++k) x[k] = (*box)[k].first;
                break;
            }
            if (j == 0) return points;
        }
    }
}

unsigned long long enumeration_cap()
{
    if (const char* env = std::getenv("TORICAUT_MAX_ENUM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000ULL;
}

} // namespace toricaut
