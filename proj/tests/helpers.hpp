#pragma once

#include "oracles.hpp"

#include "dgpoly/differential.hpp"
#include "dgpoly/polynomial.hpp"

#include <random>

namespace testing_util {

using namespace dgpoly;

inline Scalar small_rational(std::mt19937_64& rng, int range = 3) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    Scalar s(num(rng), den(rng));
    s.canonicalize();
    return s;
}

inline AlgebraSpec random_spec(std::mt19937_64& rng, std::size_t n) {
    std::vector<Scalar> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(small_rational(rng));
    return AlgebraSpec(t);
}

inline AlgebraSpec random_nonzero_spec(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        AlgebraSpec s = random_spec(rng, n);
        if (!s.is_zero()) return s;
    }
}

/// Random homogeneous polynomial with up to `terms` terms.
inline Polynomial random_homogeneous(std::mt19937_64& rng, std::size_t n, int d, int terms = 4) {
    const auto monos = monomials_of_degree(n, d);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    Polynomial p(n);
    for (int k = 0; k < terms; ++k) p.add_term(monos[pick(rng)], small_rational(rng));
    return p;
}

inline oracle::Exps exps(const Monomial& m) { return {m.exponents().begin(), m.exponents().end()}; }

inline oracle::Poly to_oracle(const Polynomial& p) {
    oracle::Poly out;
    for (const auto& [m, c] : p.terms()) out[exps(m)] = c;
    return out;
}

inline std::vector<oracle::Q> params(const AlgebraSpec& s) { return {s.t.begin(), s.t.end()}; }

}  // namespace testing_util
