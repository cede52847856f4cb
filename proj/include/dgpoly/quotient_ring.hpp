#pragma once

#include "dgpoly/cohomology.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace dgpoly {

/// Graded commutative ring k[g_1..g_m] / I with deg g_i = weights[i], where
/// I is given by a reduced Groebner basis under weighted grevlex.
class QuotientRing {
public:
    QuotientRing(std::vector<int> weights, std::vector<std::string> symbols, std::vector<Polynomial> groebner);

    std::size_t nvars() const { return weights_.size(); }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::vector<Polynomial>& groebner() const { return groebner_; }
    const std::vector<Monomial>& leading_monomials() const { return leads_; }
    int min_weight() const;
    int max_weight() const;

    QuotientRing(const QuotientRing& other);
    QuotientRing& operator=(const QuotientRing&) = delete;

    bool is_standard(const Monomial& m) const;
    /// Remainder of division by the Groebner basis.
    Polynomial normal_form(const Polynomial& p) const;
    /// Normal form of a monomial; memoized.
    Polynomial normal_form(const Monomial& m) const;

    /// Standard monomials of weighted degree d in decreasing order; cached.
    const MonomialIndex& standard_basis(int d) const;

private:
    std::vector<int> weights_;
    std::vector<std::string> symbols_;
    std::vector<Polynomial> groebner_;
    std::vector<Monomial> leads_;
    mutable std::mutex cache_mutex_;
    mutable std::map<int, std::unique_ptr<MonomialIndex>> standard_;
    mutable std::map<Monomial, Polynomial> monomial_nf_;
};

/// Reduced, monic Groebner basis of the ideal generated by `generators`.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators, std::span<const int> weights);

/// Every S-polynomial of `basis` reduces to zero modulo `basis`.
bool is_groebner_basis(const std::vector<Polynomial>& basis, std::span<const int> weights);

/// Remainder of p modulo `divisors` (full reduction, weighted grevlex).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors, std::span<const int> weights);

QuotientRing buchberger(const GradedPresentation& pres);

/// dim of the quotient in weighted degrees 0..degree_bound.
std::vector<std::size_t> hilbert_series(const QuotientRing& r, int degree_bound);

/// Largest set of variables supporting no leading monomial.
std::size_t krull_dimension(const QuotientRing& r);

struct DepthInterval {
    std::size_t lower = 0;
    std::size_t upper = 0;
    /// Regular sequence realizing the lower bound.
    std::vector<Polynomial> sequence;
    std::uint64_t seed = 0;
    int search_bound = 0;
};

/// Lower bound: longest regular sequence found among random combinations of
/// same-degree generators (20 tries per step, regularity checked degreewise
/// up to search_bound). Upper bound: Krull dimension.
DepthInterval depth_interval(const QuotientRing& r, int search_bound, std::uint64_t seed);

/// True iff multiplication by f is injective on (R/(seq))_d for all d with
/// d + deg f <= bound.
bool is_regular_on_quotient(const QuotientRing& r, const std::vector<Polynomial>& seq, const Polynomial& f,
                            int bound);

}  // namespace dgpoly
