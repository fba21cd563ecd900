#include "e510/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace e510 {

SparseRationalMatrix::SparseRationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("SparseRationalMatrix: negative size");
}

void SparseRationalMatrix::add(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("SparseRationalMatrix::add");
    if (v.is_zero()) return;
    SparseVector& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

void SparseRationalMatrix::set_row(int r, SparseVector row) {
    if (r < 0 || r >= rows_) throw std::out_of_range("SparseRationalMatrix::set_row");
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k].first < 0 || row[k].first >= cols_) throw std::out_of_range("set_row: column");
        if (row[k].second.is_zero()) throw std::invalid_argument("set_row: stored zero");
        if (k > 0 && row[k - 1].first >= row[k].first) throw std::invalid_argument("set_row: unsorted");
    }
    data_[r] = std::move(row);
}

std::size_t SparseRationalMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

namespace {

// Scales a rational row to a primitive integer row (content removed, sign kept).
void make_primitive(SparseVector& row) {
    if (row.empty()) return;
    mpz_class l = 1;
    for (const auto& [c, v] : row) {
        mpz_class d = v.denominator();
        if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    if (l != 1) {
        Rational scale{mpq_class(l)};
        for (auto& e : row) e.second *= scale;
    }
    mpz_class g = 0;
    for (const auto& e : row) {
        mpz_class n = e.second.numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        if (g == 1) return;
    }
    Rational inv{mpq_class(mpz_class(1), g)};
    for (auto& e : row) e.second *= inv;
}

struct Eliminator {
    explicit Eliminator(int cols) : acc(cols), touched_flag(cols, 0), pivot_of(cols, -1) {}

    std::vector<Rational> acc;
    std::vector<char> touched_flag;
    std::vector<int> touched;
    std::vector<int> pivot_of;       // column -> pivot id
    std::vector<int> pivot_col;      // pivot id -> column
    std::vector<SparseVector> prows; // pivot id -> primitive integer row
    std::vector<char> in_heap;

    void touch(int c) {
        if (!touched_flag[c]) {
            touched_flag[c] = 1;
            touched.push_back(c);
        }
    }

    // Reduces row against all pivots; returns the remainder (sorted, zero-free).
    SparseVector reduce(const SparseVector& row) {
        std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
        std::vector<int> pushed;
        auto push = [&](int id) {
            if (!in_heap[id]) {
                in_heap[id] = 1;
                pushed.push_back(id);
                heap.push(id);
            }
        };
        for (const auto& [c, v] : row) {
            acc[c] = v;
            touch(c);
            if (pivot_of[c] >= 0) push(pivot_of[c]);
        }
        while (!heap.empty()) {
            int id = heap.top();
            heap.pop();
            int pc = pivot_col[id];
            if (acc[pc].is_zero()) continue;
            const SparseVector& pr = prows[id];
            Rational pv;
            for (const auto& e : pr)
                if (e.first == pc) {
                    pv = e.second;
                    break;
                }
            Rational f = acc[pc] / pv;
            for (const auto& [c, v] : pr) {
                if (c == pc) continue;
                acc[c] -= f * v;
                touch(c);
                if (pivot_of[c] >= 0 && pivot_of[c] > id && !acc[c].is_zero()) push(pivot_of[c]);
            }
            acc[pc] = Rational();
        }
        for (int id : pushed) in_heap[id] = 0;
        SparseVector out;
        std::sort(touched.begin(), touched.end());
        for (int c : touched) {
            if (!acc[c].is_zero()) out.emplace_back(c, std::move(acc[c]));
            acc[c] = Rational();
            touched_flag[c] = 0;
        }
        touched.clear();
        return out;
    }
};

}  // namespace

std::vector<SparseVector> kernel(const SparseRationalMatrix& m, EliminationStats* stats) {
    const int ncols = m.cols();
    std::vector<int> colcount(ncols, 0);
    std::vector<int> order(m.rows());
    std::iota(order.begin(), order.end(), 0);
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& e : m.row(r)) ++colcount[e.first];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return m.row(a).size() < m.row(b).size(); });

    Eliminator el(ncols);
    std::size_t max_len = 0;
    for (int r : order) {
        if (m.row(r).empty()) continue;
        SparseVector rem = el.reduce(m.row(r));
        if (rem.empty()) continue;
        make_primitive(rem);
        int best = -1;
        for (const auto& [c, v] : rem)
            if (best < 0 || colcount[c] < colcount[best]) best = c;
        int id = static_cast<int>(el.prows.size());
        el.pivot_of[best] = id;
        el.pivot_col.push_back(best);
        max_len = std::max(max_len, rem.size());
        el.prows.push_back(std::move(rem));
        el.in_heap.push_back(0);
        if (el.prows.size() == static_cast<std::size_t>(ncols)) break;
    }
    if (stats) {
        stats->rank = static_cast<int>(el.prows.size());
        stats->max_row_length = max_len;
    }

    std::vector<SparseVector> basis;
    std::vector<Rational> x(ncols);
    std::vector<Rational> pivval(el.prows.size());
    for (std::size_t id = 0; id < el.prows.size(); ++id)
        for (const auto& e : el.prows[id])
            if (e.first == el.pivot_col[id]) pivval[id] = e.second;
    for (int f = 0; f < ncols; ++f) {
        if (el.pivot_of[f] >= 0) continue;
        std::fill(x.begin(), x.end(), Rational());
        x[f] = 1;
        for (int id = static_cast<int>(el.prows.size()) - 1; id >= 0; --id) {
            Rational s;
            int pc = el.pivot_col[id];
            for (const auto& [c, v] : el.prows[id])
                if (c != pc && !x[c].is_zero()) s += v * x[c];
            if (!s.is_zero()) x[pc] = -s / pivval[id];
        }
        SparseVector vec;
        for (int c = 0; c < ncols; ++c)
            if (!x[c].is_zero()) vec.emplace_back(c, x[c]);
        basis.push_back(std::move(vec));
    }
    return reduced_echelon(std::move(basis));
}

int rank(const SparseRationalMatrix& m) {
    EliminationStats st;
    (void)kernel(m, &st);
    return st.rank;
}

std::vector<SparseVector> reduced_echelon(std::vector<SparseVector> rows) {
    // Dense-in-index Gauss-Jordan over a handful of sparse rows.
    std::vector<SparseVector> done;
    std::vector<int> lead;
    auto combine = [](const SparseVector& a, const SparseVector& b, const Rational& f) {
        // a - f*b
        SparseVector out;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, -f * b[j].second);
                ++j;
            } else {
                Rational v = a[i].second - f * b[j].second;
                if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    };
    auto coeff_at = [](const SparseVector& v, int c) {
        auto it = std::lower_bound(v.begin(), v.end(), c, [](const auto& e, int col) { return e.first < col; });
        return (it != v.end() && it->first == c) ? it->second : Rational();
    };
    for (SparseVector& r : rows) {
        for (std::size_t k = 0; k < done.size(); ++k) {
            Rational f = coeff_at(r, lead[k]);
            if (!f.is_zero()) r = combine(r, done[k], f);
        }
        if (r.empty()) continue;
        Rational inv = Rational(1) / r.front().second;
        for (auto& e : r) e.second *= inv;
        int c = r.front().first;
        for (std::size_t k = 0; k < done.size(); ++k) {
            Rational f = coeff_at(done[k], c);
            if (!f.is_zero()) done[k] = combine(done[k], r, f);
        }
        done.push_back(std::move(r));
        lead.push_back(c);
    }
    std::vector<std::size_t> idx(done.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return lead[a] < lead[b]; });
    std::vector<SparseVector> out;
    for (std::size_t k : idx) out.push_back(std::move(done[k]));
    return out;
}

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_square: size mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rational inv = Rational(1) / a[col][col];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c)
                if (!a[col][c].is_zero()) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

}  // namespace e510
