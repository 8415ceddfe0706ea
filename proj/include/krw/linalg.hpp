#pragma once

// Sparse exact linear algebra over Q: rank, kernel bases, and linear
// solves with verifiable unsolvability certificates.

#include "krw/rational.hpp"

#include <map>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

namespace krw {

class SparseMatrixQ {
public:
    SparseMatrixQ() = default;
    SparseMatrixQ(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v)
    {
        check_bounds(r, c);
        if (v == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = v;
    }
    void add(int r, int c, const Rational& v)
    {
        check_bounds(r, c);
        auto key = std::make_pair(r, c);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            if (v != 0)
                entries_.emplace(key, v);
        } else {
            it->second += v;
            if (it->second == 0)
                entries_.erase(it);
        }
    }
    Rational get(int r, int c) const
    {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Rational(0) : it->second;
    }
    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
    size_t nnz() const { return entries_.size(); }

    std::vector<Rational> apply(const std::vector<Rational>& v) const
    {
        if (static_cast<int>(v.size()) != cols_)
            throw invariant_error("matrix-vector dimension mismatch");
        std::vector<Rational> out(rows_, Rational(0));
        for (auto& [rc, val] : entries_)
            out[rc.first] += val * v[rc.second];
        return out;
    }
    std::vector<Rational> apply_transpose(const std::vector<Rational>& v) const
    {
        if (static_cast<int>(v.size()) != rows_)
            throw invariant_error("matrix-vector dimension mismatch");
        std::vector<Rational> out(cols_, Rational(0));
        for (auto& [rc, val] : entries_)
            out[rc.second] += val * v[rc.first];
        return out;
    }

private:
    void check_bounds(int r, int c) const
    {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw invariant_error("matrix index out of bounds");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Rational> entries_;
};

namespace detail {

// Row-major sparse workspace for elimination.
struct EliminationRows {
    std::vector<std::map<int, Rational>> row;

    explicit EliminationRows(const SparseMatrixQ& m) : row(m.rows())
    {
        for (auto& [rc, v] : m.entries())
            row[rc.first][rc.second] = v;
    }
};

} // namespace detail

// Rank only.  Pivot rows are chosen sparsest-first within the ascending
// column sweep (Markowitz-flavoured; cube differentials are very sparse).
inline int rank(const SparseMatrixQ& m)
{
    detail::EliminationRows ws(m);
    std::vector<bool> used(ws.row.size(), false);
    int rk = 0;
    for (int col = 0; col < m.cols(); ++col) {
        int pivot = -1;
        size_t best = static_cast<size_t>(-1);
        for (size_t r = 0; r < ws.row.size(); ++r) {
            if (used[r])
                continue;
            auto it = ws.row[r].find(col);
            if (it != ws.row[r].end() && it->second != 0 && ws.row[r].size() < best) {
                best = ws.row[r].size();
                pivot = static_cast<int>(r);
            }
        }
        if (pivot < 0)
            continue;
        used[pivot] = true;
        ++rk;
        const Rational pv = ws.row[pivot][col];
        for (size_t r = 0; r < ws.row.size(); ++r) {
            if (used[r] || static_cast<int>(r) == pivot)
                continue;
            auto it = ws.row[r].find(col);
            if (it == ws.row[r].end())
                continue;
            Rational f = it->second / pv;
            for (auto& [c2, v2] : ws.row[pivot]) {
                auto jt = ws.row[r].find(c2);
                if (jt == ws.row[r].end()) {
                    ws.row[r][c2] = -f * v2;
                } else {
                    jt->second -= f * v2;
                    if (jt->second == 0)
                        ws.row[r].erase(jt);
                }
            }
        }
    }
    return rk;
}

struct RankKernel {
    int rank = 0;
    std::vector<std::vector<Rational>> kernel; // basis vectors, Mv = 0
};

// Reduced row echelon form with pivots in ascending column order; the
// kernel basis is the canonical free-column basis (one vector per free
// column, entry 1 there).
inline RankKernel rank_and_kernel(const SparseMatrixQ& m)
{
    detail::EliminationRows ws(m);
    std::vector<int> pivot_col; // per pivot row, in order
    std::vector<size_t> pivot_row;
    std::vector<bool> used(ws.row.size(), false);
    for (int col = 0; col < m.cols(); ++col) {
        int pivot = -1;
        size_t best = static_cast<size_t>(-1);
        for (size_t r = 0; r < ws.row.size(); ++r) {
            if (used[r])
                continue;
            auto it = ws.row[r].find(col);
            if (it != ws.row[r].end() && it->second != 0 && ws.row[r].size() < best) {
                best = ws.row[r].size();
                pivot = static_cast<int>(r);
            }
        }
        if (pivot < 0)
            continue;
        used[pivot] = true;
        const Rational pv = ws.row[pivot][col];
        for (size_t r = 0; r < ws.row.size(); ++r) {
            if (static_cast<int>(r) == pivot)
                continue;
            auto it = ws.row[r].find(col);
            if (it == ws.row[r].end())
                continue;
            Rational f = it->second / pv;
            for (auto& [c2, v2] : ws.row[pivot]) {
                auto jt = ws.row[r].find(c2);
                if (jt == ws.row[r].end()) {
                    ws.row[r][c2] = -f * v2;
                } else {
                    jt->second -= f * v2;
                    if (jt->second == 0)
                        ws.row[r].erase(jt);
                }
            }
        }
        pivot_col.push_back(col);
        pivot_row.push_back(pivot);
    }

    RankKernel out;
    out.rank = static_cast<int>(pivot_col.size());
    std::vector<int> col_pivot_row(m.cols(), -1);
    for (size_t i = 0; i < pivot_col.size(); ++i)
        col_pivot_row[pivot_col[i]] = static_cast<int>(pivot_row[i]);
    for (int free = 0; free < m.cols(); ++free) {
        if (col_pivot_row[free] >= 0)
            continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) {
            auto& row = ws.row[pivot_row[i]];
            auto it = row.find(free);
            if (it != row.end())
                v[pivot_col[i]] = -it->second / row[pivot_col[i]];
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

struct Unsolvable {
    std::vector<Rational> left_kernel; // y with yM = 0, y.b != 0
};

using SolveResult = std::variant<std::vector<Rational>, Unsolvable>;

// Exact solve Mv = b.  Underdetermined systems pick pivots in ascending
// column order and set free variables to zero.  Unsolvable systems return
// a left kernel certificate.
inline SolveResult solve_linear(const SparseMatrixQ& m, const std::vector<Rational>& b)
{
    if (static_cast<int>(b.size()) != m.rows())
        throw invariant_error("solve_linear: rhs dimension mismatch");
    detail::EliminationRows ws(m);
    // transform[r] = combination of original rows currently stored in row r
    std::vector<std::map<int, Rational>> transform(ws.row.size());
    std::vector<Rational> rhs = b;
    for (size_t r = 0; r < ws.row.size(); ++r)
        transform[r][static_cast<int>(r)] = 1;

    std::vector<std::pair<int, size_t>> pivots; // (col, row)
    std::vector<bool> used(ws.row.size(), false);
    for (int col = 0; col < m.cols(); ++col) {
        int pivot = -1;
        for (size_t r = 0; r < ws.row.size(); ++r) {
            if (used[r])
                continue;
            auto it = ws.row[r].find(col);
            if (it != ws.row[r].end() && it->second != 0) {
                pivot = static_cast<int>(r);
                break;
            }
        }
        if (pivot < 0)
            continue;
        used[pivot] = true;
        const Rational pv = ws.row[pivot][col];
        for (size_t r = 0; r < ws.row.size(); ++r) {
            if (static_cast<int>(r) == pivot)
                continue;
            auto it = ws.row[r].find(col);
            if (it == ws.row[r].end())
                continue;
            Rational f = it->second / pv;
            for (auto& [c2, v2] : ws.row[pivot]) {
                auto jt = ws.row[r].find(c2);
                if (jt == ws.row[r].end()) {
                    ws.row[r][c2] = -f * v2;
                } else {
                    jt->second -= f * v2;
                    if (jt->second == 0)
                        ws.row[r].erase(jt);
                }
            }
            rhs[r] -= f * rhs[pivot];
            for (auto& [orig, w] : transform[pivot]) {
                auto jt = transform[r].find(orig);
                if (jt == transform[r].end()) {
                    transform[r][orig] = -f * w;
                } else {
                    jt->second -= f * w;
                    if (jt->second == 0)
                        transform[r].erase(jt);
                }
            }
        }
        pivots.emplace_back(col, pivot);
    }

    // inconsistent row: zero coefficients, nonzero rhs
    for (size_t r = 0; r < ws.row.size(); ++r) {
        if (!used[r] && ws.row[r].empty() && rhs[r] != 0) {
            Unsolvable cert;
            cert.left_kernel.assign(m.rows(), Rational(0));
            for (auto& [orig, w] : transform[r])
                cert.left_kernel[orig] = w;
            return cert;
        }
    }

    std::vector<Rational> v(m.cols(), Rational(0));
    for (auto& [col, row] : pivots)
        v[col] = rhs[row] / ws.row[row].at(col);
    return v;
}

} // namespace krw
