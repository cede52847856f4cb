#pragma once

// Independent reference computations. Nothing here calls into the sparse
// elimination, SpanBasis, or the library's Leibniz recursion.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;  // row-major
using Exps = std::vector<int>;
using Poly = std::map<Exps, Q>;

/// Plain Gaussian elimination on a full copy, first nonzero pivot.
inline std::size_t dense_rank(Dense m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Q f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Pascal's triangle.
inline unsigned long long binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::vector<std::vector<unsigned long long>> t(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        t[i].assign(i + 1, 1);
        for (unsigned j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t[n][k];
}

/// Exponent vectors of total degree d in n variables, by recursion on the
/// first exponent (descending).
inline void exps_of_degree(std::size_t n, int d, std::vector<Exps>& out, Exps prefix = {}) {
    if (prefix.size() + 1 == n) {
        prefix.push_back(d);
        out.push_back(prefix);
        return;
    }
    for (int e = d; e >= 0; --e) {
        Exps next = prefix;
        next.push_back(e);
        exps_of_degree(n, d - e, out, next);
    }
}

inline std::vector<Exps> exps_of_degree(std::size_t n, int d) {
    std::vector<Exps> out;
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    exps_of_degree(n, d, out);
    return out;
}

inline void add_into(Poly& p, const Exps& e, const Q& c) {
    Q& slot = p[e];
    slot += c;
    if (slot == 0) p.erase(e);
}

inline Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_into(out, e, ca * cb);
        }
    }
    return out;
}

/// d(x_{i_1} ... x_{i_d}) = sum_k (-1)^k x_{i_1} .. d(x_{i_k}) .. x_{i_d},
/// with the word written in increasing variable order.
inline Poly leibniz(const Exps& m, const std::vector<Q>& t) {
    const std::size_t n = m.size();
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < n; ++i) {
        for (int k = 0; k < m[i]; ++k) word.push_back(i);
    }
    Poly out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        const Q sign = (k % 2 == 0) ? 1 : -1;
        for (std::size_t j = 0; j < n; ++j) {
            if (t[j] == 0) continue;
            Exps e = m;
            e[j] += 1;  // x_i -> t_j x_i x_j
            add_into(out, e, sign * t[j]);
        }
    }
    return out;
}

inline Poly leibniz(const Poly& p, const std::vector<Q>& t) {
    Poly out;
    for (const auto& [e, c] : p) {
        for (const auto& [f, d] : leibniz(e, t)) add_into(out, f, c * d);
    }
    return out;
}

/// Dense matrix of d : A^deg -> A^{deg+1} in the oracle's own bases.
inline Dense differential_matrix(const std::vector<Q>& t, int deg) {
    const auto src = exps_of_degree(t.size(), deg);
    const auto dst = exps_of_degree(t.size(), deg + 1);
    std::map<Exps, std::size_t> row;
    for (std::size_t r = 0; r < dst.size(); ++r) row[dst[r]] = r;
    Dense m(dst.size(), std::vector<Q>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
        for (const auto& [e, v] : leibniz(src[c], t)) m[row.at(e)][c] = v;
    }
    return m;
}

/// dim H^d from dense ranks.
inline std::vector<std::size_t> cohomology_dims(const std::vector<Q>& t, int max_degree) {
    std::vector<std::size_t> ranks;
    for (int d = 0; d <= max_degree; ++d) ranks.push_back(dense_rank(differential_matrix(t, d)));
    std::vector<std::size_t> dims;
    for (int d = 0; d <= max_degree; ++d) {
        std::size_t size = exps_of_degree(t.size(), d).size();
        dims.push_back(size - ranks[static_cast<std::size_t>(d)] - (d > 0 ? ranks[static_cast<std::size_t>(d - 1)] : 0));
    }
    return dims;
}

/// Dimension of the kernel of k[g_1..g_m]_d -> H^d(A), g_k -> [reps[k]],
/// where deg g_k = weights[k]: (#monomials) - (rank [B | P] - rank B).
inline std::size_t relation_space_dim(const std::vector<Q>& t, const std::vector<Poly>& reps,
                                      const std::vector<int>& weights, int d) {
    const std::size_t n = t.size();
    const auto basis = exps_of_degree(n, d);
    std::map<Exps, std::size_t> row;
    for (std::size_t r = 0; r < basis.size(); ++r) row[basis[r]] = r;

    // Generator monomials of weighted degree d, by brute force over exponents.
    std::vector<std::vector<int>> gen_monos;
    std::vector<int> e(reps.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == reps.size()) {
            if (left == 0) gen_monos.push_back(e);
            return;
        }
        for (int a = 0; a * weights[k] <= left; ++a) {
            e[k] = a;
            rec(k + 1, left - a * weights[k]);
        }
        e[k] = 0;
    };
    rec(0, d);

    Dense boundary(basis.size());
    if (d > 0) {
        Dense m = differential_matrix(t, d - 1);
        boundary = m;
    } else {
        for (auto& r : boundary) r.clear();
    }
    Dense both = boundary;
    for (const auto& gm : gen_monos) {
        Poly value{{Exps(n, 0), 1}};
        for (std::size_t k = 0; k < gm.size(); ++k) {
            for (int a = 0; a < gm[k]; ++a) value = multiply(value, reps[k]);
        }
        for (std::size_t r = 0; r < basis.size(); ++r) {
            auto it = value.find(basis[r]);
            both[r].push_back(it == value.end() ? Q(0) : it->second);
        }
    }
    const std::size_t image = dense_rank(both) - dense_rank(boundary);
    return gen_monos.size() - image;
}

}  // namespace oracle
