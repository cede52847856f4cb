#include "dgpoly/differential.hpp"

#include "dgpoly/parallel.hpp"

#include <sstream>
#include <stdexcept>

namespace dgpoly {

AlgebraSpec::AlgebraSpec(std::vector<Scalar> params) : t(std::move(params)) {
    if (t.empty()) throw std::invalid_argument("algebra needs at least one generator");
}

AlgebraSpec AlgebraSpec::representative(std::size_t n) {
    std::vector<Scalar> t(n, 0);
    t.at(0) = 1;
    return AlgebraSpec(std::move(t));
}

AlgebraSpec AlgebraSpec::zero(std::size_t n) { return AlgebraSpec(std::vector<Scalar>(n, 0)); }

AlgebraSpec AlgebraSpec::parse(std::string_view csv) {
    std::vector<Scalar> t;
    std::size_t start = 0;
    while (true) {
        auto comma = csv.find(',', start);
        std::string_view item = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        t.push_back(parse_scalar(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return AlgebraSpec(std::move(t));
}

bool AlgebraSpec::is_zero() const {
    for (const auto& x : t) {
        if (!dgpoly::is_zero(x)) return false;
    }
    return true;
}

bool AlgebraSpec::is_representative() const { return *this == representative(n()); }

std::string AlgebraSpec::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += dgpoly::to_string(t[i]);
    }
    return s;
}

Differential::Differential(AlgebraSpec spec) : spec_(std::move(spec)) {
    const std::size_t n = spec_.n();
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial img(n);
        for (std::size_t j = 0; j < n; ++j) {
            img.add_term(Monomial::variable(n, i) * Monomial::variable(n, j), spec_.t[j]);
        }
        images_.push_back(std::move(img));
    }
}

Polynomial Differential::weight_form() const {
    Polynomial y(n());
    for (std::size_t j = 0; j < n(); ++j) y.add_term(Monomial::variable(n(), j), spec_.t[j]);
    return y;
}

Polynomial Differential::apply(const Monomial& m, std::map<Monomial, Polynomial>& memo) const {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    Polynomial result(n());
    std::size_t i = 0;
    while (i < m.nvars() && m[i] == 0) ++i;
    if (i < m.nvars()) {
        // m = x_i * rest with |x_i| = 1
        Monomial xi = Monomial::variable(n(), i);
        Monomial rest = m / xi;
        result = images_[i] * rest;
        result -= apply(rest, memo) * xi;
    }
    memo.emplace(m, result);
    return result;
}

Polynomial Differential::apply(const Polynomial& p) const {
    std::map<Monomial, Polynomial> memo;
    Polynomial out(n());
    for (const auto& [m, c] : p.terms()) out += apply(m, memo) * c;
    return out;
}

SquareZeroResult check_square_zero(const Differential& d, int max_degree) {
    SquareZeroResult res;
    res.checked_degree = max_degree;
    for (int deg = 0; deg <= max_degree; ++deg) {
        auto monos = monomials_of_degree(d.n(), deg);
        auto bad = first_square_zero_failure(d, monos);
        if (bad) {
            res.holds = false;
            res.witness = monos[*bad];
            res.witness_value = d.apply(d.apply(Polynomial::monomial(monos[*bad])));
            return res;
        }
    }
    return res;
}

SparseMatrix differential_matrix(const Differential& d, int deg) {
    MonomialIndex cols(monomials_of_degree(d.n(), deg));
    MonomialIndex rows(monomials_of_degree(d.n(), deg + 1));
    std::map<Monomial, Polynomial> memo;
    std::vector<SparseVector> columns;
    columns.reserve(cols.size());
    for (const auto& m : cols.monomials()) columns.push_back(d.apply(m, memo).to_vector(rows));
    return SparseMatrix::from_columns(rows.size(), std::move(columns));
}

ClassificationResult classify(const AlgebraSpec& spec) {
    ClassificationResult res;
    const std::size_t n = spec.n();
    if (spec.is_zero()) {
        res.tag = DifferentialClass::Zero;
        res.verified = true;
        res.verification_log.push_back("t = 0: differential vanishes on every generator");
        return res;
    }
    res.tag = DifferentialClass::Nonzero;
    std::size_t p = 0;
    while (dgpoly::is_zero(spec.t[p])) ++p;
    res.pivot = p;

    std::vector<std::vector<Scalar>> rows;
    rows.push_back(spec.t);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == p) continue;
        std::vector<Scalar> e(n, 0);
        e[j] = 1;
        rows.push_back(std::move(e));
    }
    LinearChange forward = LinearChange::from_rows(rows);
    LinearChange backward = forward.inverse();

    Differential dt(spec);
    Differential drep(AlgebraSpec::representative(n));
    auto names = default_variable_names(n);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::variable(n, i);
        // d_t(y_i) = y_1 y_i, i.e. x_i -> y_i intertwines d_rep and d_t.
        Polynomial lhs = dt.apply(substitute(xi, forward));
        Polynomial rhs = substitute(drep.apply(xi), forward);
        bool fwd = lhs == rhs;
        // Inverse direction: A(t) -> A(1,0,...,0).
        Polynomial lhs2 = substitute(dt.apply(xi), backward);
        Polynomial rhs2 = drep.apply(substitute(xi, backward));
        bool bwd = lhs2 == rhs2;
        ok = ok && fwd && bwd;
        std::ostringstream line;
        line << "d(y" << (i + 1) << ") = y1 y" << (i + 1) << " with y" << (i + 1) << " = "
             << forward.form(i).to_string(names) << ": " << (fwd ? "ok" : "FAILED")
             << "; inverse intertwines d(x" << (i + 1) << "): " << (bwd ? "ok" : "FAILED");
        res.verification_log.push_back(line.str());
    }
    bool roundtrip = forward.then(backward) == LinearChange::identity(n);
    res.verification_log.push_back(std::string("iso composed with its inverse is the identity: ") +
                                   (roundtrip ? "ok" : "FAILED"));
    res.verified = ok && roundtrip;
    res.iso = std::move(forward);
    return res;
}

}  // namespace dgpoly
