#pragma once

#include "dgpoly/scalar.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dgpoly {

using Exponent = std::uint16_t;

/// Exponent vector of a commutative monomial. Degrees are weighted by an
/// optional weight vector; without weights every variable has degree 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    int degree() const;
    int degree(std::span<const int> weights) const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// this / o; requires o.divides(*this).
    Monomial operator/(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;

    /// Storage order (plain lexicographic on exponent vectors). Not the
    /// monomial order; see grevlex_less.
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Exponent> exps_;
};

/// Graded reverse lexicographic order with x1 > x2 > ... > xn, optionally
/// weighted. Returns true iff a < b.
bool grevlex_less(const Monomial& a, const Monomial& b, std::span<const int> weights = {});

/// All monomials of (weighted) degree d in n variables, sorted by decreasing
/// grevlex order (so x1^d comes first when unweighted).
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);
std::vector<Monomial> monomials_of_degree(std::span<const int> weights, int d);

/// Index lookup for a list of monomials.
class MonomialIndex {
public:
    MonomialIndex() = default;
    explicit MonomialIndex(std::vector<Monomial> monomials);

    std::size_t size() const { return monomials_.size(); }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    /// Throws std::out_of_range when absent.
    std::uint32_t index(const Monomial& m) const;
    bool contains(const Monomial& m) const { return lookup_.count(m) != 0; }

private:
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::uint32_t> lookup_;
};

/// Variable names used by the text format. Default: x1..xn.
std::vector<std::string> default_variable_names(std::size_t n, std::string_view prefix = "x");

/// Exact multivariate polynomial over Q in a fixed number of variables.
class Polynomial {
public:
    using Terms = std::map<Monomial, Scalar>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Scalar& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);
    static Polynomial monomial(const Monomial& m, const Scalar& c = 1);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Monomial& m) const;

    /// Adds c*m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Scalar& c);

    /// Highest total degree, -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_homogeneous(std::span<const int> weights) const;
    /// Part of (weighted) degree d.
    Polynomial component(int d) const;
    Polynomial component(int d, std::span<const int> weights) const;
    /// Degrees with a nonzero component, ascending.
    std::vector<int> degrees() const;

    /// Leading term under (weighted) grevlex; requires nonzero.
    const Monomial& leading_monomial(std::span<const int> weights = {}) const;
    Scalar leading_coefficient(std::span<const int> weights = {}) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& s) const;
    Polynomial operator*(const Monomial& m) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const = default;

    /// Coefficient vector against a monomial basis; throws if a term is not
    /// in the basis.
    std::vector<std::pair<std::uint32_t, Scalar>> to_vector(const MonomialIndex& basis) const;
    static Polynomial from_vector(const std::vector<std::pair<std::uint32_t, Scalar>>& v,
                                  const MonomialIndex& basis);

    /// Terms in decreasing grevlex order, e.g. "x1^2 - 2 x1 x2 + 3/2 x3".
    std::string to_string(const std::vector<std::string>& names, std::span<const int> weights = {}) const;
    std::string to_string() const;
    static Polynomial parse(std::string_view text, const std::vector<std::string>& names);
    static Polynomial parse(std::string_view text, std::size_t nvars);

private:
    std::size_t nvars_ = 0;
    Terms terms_;
};

Polynomial operator*(const Scalar& s, const Polynomial& p);

}  // namespace dgpoly
