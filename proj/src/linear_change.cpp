#include "dgpoly/linear_change.hpp"

#include <stdexcept>

namespace dgpoly {

namespace {

// Row-major dense copy: rows[i][j] = coefficient of x_j in form i.
std::vector<std::vector<Scalar>> dense_rows(const SparseMatrix& m) {
    std::vector<std::vector<Scalar>> rows(m.rows(), std::vector<Scalar>(m.cols()));
    for (const auto& t : m.entries()) rows[t.row][t.col] = t.value;
    return rows;
}

SparseMatrix from_dense_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::vector<Triplet> ts;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (!is_zero(rows[i][j])) ts.push_back({i, j, rows[i][j]});
        }
    }
    std::size_t n = rows.size();
    return SparseMatrix::from_triplets(n, n == 0 ? 0 : rows[0].size(), std::move(ts));
}

}  // namespace

LinearChange::LinearChange(SparseMatrix forms) : forms_(std::move(forms)) {
    if (forms_.rows() != forms_.cols()) throw std::invalid_argument("linear change must be square");
    if (rank(forms_) != forms_.rows()) throw std::invalid_argument("linear change is singular");
}

LinearChange LinearChange::identity(std::size_t n) { return LinearChange(SparseMatrix::identity(n)); }

LinearChange LinearChange::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    for (const auto& r : rows) {
        if (r.size() != rows.size()) throw std::invalid_argument("linear change must be square");
    }
    return LinearChange(from_dense_rows(rows));
}

Polynomial LinearChange::form(std::size_t i) const {
    std::size_t n = size();
    Polynomial p(n);
    for (std::size_t j = 0; j < n; ++j) p.add_term(Monomial::variable(n, j), forms_.at(i, j));
    return p;
}

LinearChange LinearChange::inverse() const {
    std::size_t n = size();
    auto a = dense_rows(forms_);
    std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        Scalar s = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            Scalar f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return LinearChange(from_dense_rows(inv));
}

LinearChange LinearChange::then(const LinearChange& other) const {
    std::size_t n = size();
    auto a = dense_rows(forms_);
    auto b = dense_rows(other.forms_);
    std::vector<std::vector<Scalar>> c(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return LinearChange(from_dense_rows(c));
}

Polynomial substitute(const Polynomial& p, const LinearChange& c) {
    std::size_t n = c.size();
    if (p.nvars() != n && !p.is_zero()) throw std::invalid_argument("substitute: variable count mismatch");
    std::vector<Polynomial> forms;
    for (std::size_t i = 0; i < n; ++i) forms.push_back(c.form(i));
    // Powers of each form are reused across terms.
    std::vector<std::vector<Polynomial>> powers(n);
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(n, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * forms[i]);
        return cache[e];
    };
    Polynomial out(n);
    for (const auto& [m, coef] : p.terms()) {
        Polynomial term = Polynomial::constant(n, coef);
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] > 0) term = term * power(i, m[i]);
        }
        out += term;
    }
    return out;
}

}  // namespace dgpoly
