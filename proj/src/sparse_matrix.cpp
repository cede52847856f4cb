#include "dgpoly/sparse_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace dgpoly {

Scalar parse_scalar(std::string_view text) {
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(),
                                         [](unsigned char c) { return std::isdigit(c) != 0; });
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!digits(num) || !digits(den)) {
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
    Scalar q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

std::string to_string(const Scalar& s) {
    return s.get_str(10);
}

SparseVector to_sparse(const DenseVector& v) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_zero(v[i])) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    }
    return out;
}

DenseVector to_dense(const SparseVector& v, std::size_t size) {
    DenseVector out(size);
    for (const auto& [i, x] : v) out.at(i) = x;
    return out;
}

SparseVector axpy(const SparseVector& a, const Scalar& factor, const SparseVector& b) {
    if (is_zero(factor)) return a;
    SparseVector out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, factor * ib->second);
            ++ib;
        } else {
            Scalar s = ia->second + factor * ib->second;
            if (!is_zero(s)) out.emplace_back(ia->first, std::move(s));
            ++ia;
            ++ib;
        }
    }
    return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> entries) {
    SparseMatrix m(rows, cols);
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& t = entries[k];
        if (t.row >= rows || t.col >= cols) {
            throw std::invalid_argument("matrix entry out of range");
        }
        if (k > 0 && entries[k - 1].row == t.row && entries[k - 1].col == t.col) {
            throw std::invalid_argument("duplicate matrix entry");
        }
        if (!is_zero(t.value)) {
            m.columns_[t.col].emplace_back(static_cast<std::uint32_t>(t.row), t.value);
        }
    }
    return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVector> columns) {
    SparseMatrix m;
    m.rows_ = rows;
    for (const auto& col : columns) {
        for (std::size_t k = 0; k < col.size(); ++k) {
            if (col[k].first >= rows || is_zero(col[k].second) ||
                (k > 0 && col[k - 1].first >= col[k].first)) {
                throw std::invalid_argument("column is not a canonical sparse vector");
            }
        }
    }
    m.columns_ = std::move(columns);
    return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(static_cast<std::uint32_t>(i), 1);
    return m;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

std::vector<Triplet> SparseMatrix::entries() const {
    std::vector<Triplet> out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        for (const auto& [r, v] : columns_[c]) out.push_back({r, c, v});
    }
    return out;
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) return it->second;
    return 0;
}

SparseVector SparseMatrix::multiply(const SparseVector& x) const {
    SparseVector acc;
    for (const auto& [c, v] : x) acc = axpy(acc, v, columns_.at(c));
    return acc;
}

DenseVector SparseMatrix::multiply(const DenseVector& x) const {
    if (x.size() != cols()) throw std::invalid_argument("dimension mismatch in multiply");
    return to_dense(multiply(to_sparse(x)), rows_);
}

namespace {

const Scalar* find_entry(const SparseVector& row, std::uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::uint32_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

void scale_in_place(SparseVector& row, const Scalar& f) {
    for (auto& e : row) e.second *= f;
}

}  // namespace

Elimination::Elimination(const SparseMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    std::vector<SparseVector> rows(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        for (const auto& [r, v] : m.column(c)) rows[r].emplace_back(static_cast<std::uint32_t>(c), v);
    }
    std::vector<std::size_t> col_count(cols_, 0);
    for (const auto& row : rows) {
        for (const auto& e : row) ++col_count[e.first];
    }
    std::vector<char> active(rows_, 1);
    std::vector<std::uint32_t> pivot_row_ids;

    while (true) {
        std::size_t best_row = rows_;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!active[r] || rows[r].empty()) continue;
            if (best_row == rows_ || rows[r].size() < rows[best_row].size()) best_row = r;
        }
        if (best_row == rows_) break;
        const SparseVector& prow = rows[best_row];
        std::uint32_t pcol = prow.front().first;
        for (const auto& e : prow) {
            if (col_count[e.first] < col_count[pcol]) pcol = e.first;
        }
        Scalar inv = 1 / *find_entry(prow, pcol);
        scale_in_place(rows[best_row], inv);
        ops_.push_back({static_cast<std::uint32_t>(best_row), static_cast<std::uint32_t>(best_row), inv});
        active[best_row] = 0;

        for (std::size_t r = 0; r < rows_; ++r) {
            if (!active[r]) continue;
            const Scalar* hit = find_entry(rows[r], pcol);
            if (!hit) continue;
            Scalar f = *hit;
            for (const auto& e : rows[r]) --col_count[e.first];
            rows[r] = axpy(rows[r], -f, rows[best_row]);
            for (const auto& e : rows[r]) ++col_count[e.first];
            ops_.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(best_row), f});
        }
        for (const auto& e : rows[best_row]) --col_count[e.first];
        pivot_row_ids.push_back(static_cast<std::uint32_t>(best_row));
        pivot_cols_.push_back(pcol);
    }

    // Back substitution: clear each pivot column from earlier pivot rows.
    for (std::size_t q = pivot_row_ids.size(); q-- > 0;) {
        std::uint32_t qrow = pivot_row_ids[q];
        for (std::size_t p = 0; p < q; ++p) {
            std::uint32_t prow = pivot_row_ids[p];
            const Scalar* hit = find_entry(rows[prow], pivot_cols_[q]);
            if (!hit) continue;
            Scalar f = *hit;
            rows[prow] = axpy(rows[prow], -f, rows[qrow]);
            ops_.push_back({prow, qrow, f});
        }
    }
    for (auto r : pivot_row_ids) pivot_rows_.push_back(std::move(rows[r]));
    pivot_origin_ = std::move(pivot_row_ids);
}

std::vector<SparseVector> Elimination::kernel() const {
    std::vector<char> is_pivot(cols_, 0);
    for (auto c : pivot_cols_) is_pivot[c] = 1;
    // free column -> list of (pivot column, coefficient of free column in that pivot row)
    std::vector<SparseVector> by_free(cols_);
    for (std::size_t k = 0; k < pivot_rows_.size(); ++k) {
        for (const auto& [c, v] : pivot_rows_[k]) {
            if (c != pivot_cols_[k]) by_free[c].emplace_back(pivot_cols_[k], -v);
        }
    }
    std::vector<SparseVector> basis;
    for (std::uint32_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        SparseVector v = by_free[f];
        v.emplace_back(f, 1);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Scalar lead = v.front().second;
        if (lead != 1) scale_in_place(v, 1 / lead);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<SparseVector> Elimination::solve(const SparseVector& rhs) const {
    DenseVector b = to_dense(rhs, rows_);
    for (const auto& op : ops_) {
        if (op.source == op.target) {
            b[op.target] *= op.factor;
        } else if (!is_zero(b[op.source])) {
            b[op.target] -= op.factor * b[op.source];
        }
    }
    std::vector<char> used(rows_, 0);
    for (auto r : pivot_origin_) used[r] = 1;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (!used[r] && !is_zero(b[r])) return std::nullopt;
    }
    SparseVector x;
    for (std::size_t k = 0; k < pivot_rows_.size(); ++k) {
        const Scalar& v = b[pivot_origin_[k]];
        if (!is_zero(v)) x.emplace_back(pivot_cols_[k], v);
    }
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
    return x;
}

std::size_t rank(const SparseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return Elimination(m).rank();
}

std::vector<SparseVector> sparse_kernel_basis(const SparseMatrix& m) {
    return Elimination(m).kernel();
}

std::vector<DenseVector> kernel_basis(const SparseMatrix& m) {
    std::vector<DenseVector> out;
    for (const auto& v : sparse_kernel_basis(m)) out.push_back(to_dense(v, m.cols()));
    return out;
}

std::optional<SparseVector> membership(const SparseVector& v, const SparseMatrix& m) {
    return Elimination(m).solve(v);
}

std::optional<DenseVector> membership(const DenseVector& v, const SparseMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("membership: vector length != rows");
    auto x = Elimination(m).solve(to_sparse(v));
    if (!x) return std::nullopt;
    return to_dense(*x, m.cols());
}

}  // namespace dgpoly
