#include "toricaut/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace toricaut {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("IntMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows)
{
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw Error("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t r) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Int> IntMatrix::col(std::size_t c) const
{
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_) throw Error("IntMatrix: dimension mismatch in product");
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += x * rhs.at(k, j);
        }
    return p;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const
{
    if (v.size() != cols_) throw Error("IntMatrix: dimension mismatch in apply");
    std::vector<Int> out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]";
    }
    return os.str();
}

namespace {

// g = gcd(a,b) together with Bezout coefficients: p*a + q*b = g.
std::tuple<Int, Int, Int> xgcd(Int a, Int b)
{
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
        old_t -= q * t; std::swap(old_t, t);
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

struct SmithWork {
    IntMatrix a, u, v;

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void negate_row(std::size_t i)
    {
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
    // rows (s, i) <- ((p, q), (-b/g, a/g)) * rows (s, i); determinant 1
    void gcd_rows(std::size_t s, std::size_t i, const Int& p, const Int& q,
                  const Int& adg, const Int& bdg)
    {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            Int x = a.at(s, c), y = a.at(i, c);
            a.at(s, c) = p * x + q * y;
            a.at(i, c) = adg * y - bdg * x;
        }
        for (std::size_t c = 0; c < u.cols(); ++c) {
            Int x = u.at(s, c), y = u.at(i, c);
            u.at(s, c) = p * x + q * y;
            u.at(i, c) = adg * y - bdg * x;
        }
    }
    void gcd_cols(std::size_t s, std::size_t j, const Int& p, const Int& q,
                  const Int& adg, const Int& bdg)
    {
        for (std::size_t r = 0; r < a.rows(); ++r) {
            Int x = a.at(r, s), y = a.at(r, j);
            a.at(r, s) = p * x + q * y;
            a.at(r, j) = adg * y - bdg * x;
        }
        for (std::size_t r = 0; r < v.rows(); ++r) {
            Int x = v.at(r, s), y = v.at(r, j);
            v.at(r, s) = p * x + q * y;
            v.at(r, j) = adg * y - bdg * x;
        }
    }
    void add_col(std::size_t dst, std::size_t src) // col dst += col src
    {
        for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, dst) += a.at(r, src);
        for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, dst) += v.at(r, src);
    }
};

// Clear row s right of the pivot and column s below the pivot, restoring
// whichever the other pass disturbs, until both are zero.
void diagonalize_at(SmithWork& w, std::size_t s)
{
    const std::size_t m = w.a.rows(), n = w.a.cols();
    for (;;) {
        // pick the entry of least nonzero magnitude in the trailing block as pivot
        std::size_t pr = s, pc = s;
        Int best = 0;
        for (std::size_t i = s; i < m; ++i)
            for (std::size_t j = s; j < n; ++j) {
                const Int& x = w.a.at(i, j);
                if (x != 0 && (best == 0 || abs(x) < best)) { best = abs(x); pr = i; pc = j; }
            }
        if (best == 0) return; // trailing block all zero
        w.swap_rows(s, pr);
        w.swap_cols(s, pc);

        bool dirty = false;
        for (std::size_t i = s + 1; i < m; ++i) {
            if (w.a.at(i, s) == 0) continue;
            auto [g, p, q] = xgcd(w.a.at(s, s), w.a.at(i, s));
            w.gcd_rows(s, i, p, q, w.a.at(s, s) / g, w.a.at(i, s) / g);
            dirty = true;
        }
        for (std::size_t j = s + 1; j < n; ++j) {
            if (w.a.at(s, j) == 0) continue;
            auto [g, p, q] = xgcd(w.a.at(s, s), w.a.at(s, j));
            w.gcd_cols(s, j, p, q, w.a.at(s, s) / g, w.a.at(s, j) / g);
            dirty = true;
        }
        if (!dirty) return; // row s and column s already clear beyond the pivot
    }
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& a)
{
    SmithWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    const std::size_t k = std::min(a.rows(), a.cols());

    for (std::size_t s = 0; s < k; ++s) diagonalize_at(w, s);

    // enforce the divisibility chain d_s | d_{s+1}
    for (std::size_t s = 0; s + 1 < k; ++s) {
        for (;;) {
            const Int& ds = w.a.at(s, s);
            const Int& dn = w.a.at(s + 1, s + 1);
            if (ds == 0 || dn % ds == 0) break;
            w.add_col(s, s + 1); // brings d_{s+1} into row s+1, column s
            diagonalize_at(w, s);
        }
    }
    for (std::size_t s = 0; s < k; ++s)
        if (w.a.at(s, s) < 0) w.negate_row(s);

    return {std::move(w.u), std::move(w.a), std::move(w.v)};
}

std::vector<Int> SmithResult::invariant_factors() const
{
    std::vector<Int> f;
    for (std::size_t s = 0; s < std::min(d.rows(), d.cols()); ++s)
        if (d.at(s, s) != 0) f.push_back(d.at(s, s));
    return f;
}

Int determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols()) throw Error("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a)
{
    return smith_normal_form(a).rank();
}

IntMatrix hermite_normal_form(const IntMatrix& a)
{
    IntMatrix m = a;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;

    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        // fold all entries below pivot_row in column c into one gcd entry
        std::size_t nz = pivot_row;
        while (nz < rows && m.at(nz, c) == 0) ++nz;
        if (nz == rows) continue;
        if (nz != pivot_row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot_row, j), m.at(nz, j));
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            if (m.at(i, c) == 0) continue;
            auto [g, p, q] = xgcd(m.at(pivot_row, c), m.at(i, c));
            Int adg = m.at(pivot_row, c) / g, bdg = m.at(i, c) / g;
            for (std::size_t j = 0; j < cols; ++j) {
                Int x = m.at(pivot_row, j), y = m.at(i, j);
                m.at(pivot_row, j) = p * x + q * y;
                m.at(i, j) = adg * y - bdg * x;
            }
        }
        if (m.at(pivot_row, c) < 0)
            for (std::size_t j = 0; j < cols; ++j) m.at(pivot_row, j) = -m.at(pivot_row, j);
        // reduce entries above the pivot into [0, pivot)
        const Int& piv = m.at(pivot_row, c);
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q = floor_div(m.at(i, c), piv);
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(pivot_row, j);
        }
        pivot_cols.push_back(c);
        ++pivot_row;
    }

    IntMatrix out(pivot_row, cols);
    for (std::size_t i = 0; i < pivot_row; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b)
{
    return hermite_normal_form(a) == hermite_normal_form(b);
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a)
{
    SmithResult snf = smith_normal_form(a);
    const std::size_t r = snf.rank();
    if (r == a.cols()) return {};
    IntMatrix gens(a.cols() - r, a.cols());
    for (std::size_t j = r; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) gens.at(j - r, i) = snf.v.at(i, j);
    IntMatrix canon = hermite_normal_form(gens);
    std::vector<std::vector<Int>> basis;
    basis.reserve(canon.rows());
    for (std::size_t i = 0; i < canon.rows(); ++i) basis.push_back(canon.row(i));
    std::sort(basis.begin(), basis.end());
    return basis;
}

} // namespace toricaut
