#include "dgpoly/cohomology.hpp"

#include "dgpoly/parallel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dgpoly {

bool CohomologyReport::rank_nullity_consistent() const {
    for (int d = 0; d <= max_degree; ++d) {
        std::size_t below = d > 0 ? ranks[d - 1] : 0;
        if (cochain_dims[d] < below + ranks[d]) return false;
        if (dims[d] != cochain_dims[d] - below - ranks[d]) return false;
        if (representatives[d].size() != dims[d]) return false;
    }
    return true;
}

CohomologyReport cohomology_dims(const AlgebraSpec& spec, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
    const Differential diff(spec);
    CohomologyReport rep;
    rep.spec = spec;
    rep.max_degree = max_degree;
    const auto count = static_cast<std::size_t>(max_degree + 1);

    for (int d = 0; d <= max_degree; ++d) rep.bases.emplace_back(monomials_of_degree(spec.n(), d));
    std::vector<SparseMatrix> mats(count);
    parallel_for(count, [&](std::size_t d) { mats[d] = differential_matrix(diff, static_cast<int>(d)); });
    rep.ranks = batch_rank(mats);

    rep.cochain_dims.resize(count);
    rep.dims.resize(count);
    rep.representatives.resize(count);
    rep.coboundaries.resize(count);
    rep.rep_pivots.resize(count);
    parallel_for(count, [&](std::size_t d) {
        const MonomialIndex& basis = rep.bases[d];
        rep.cochain_dims[d] = basis.size();
        SpanBasis boundaries(basis.size());
        if (d > 0) {
            const SparseMatrix& prev = mats[d - 1];
            for (std::size_t c = 0; c < prev.cols(); ++c) boundaries.insert(prev.column(c));
        }
        SpanBasis complement(basis.size());
        for (const auto& z : sparse_kernel_basis(mats[d])) complement.insert(boundaries.reduce(z));
        for (const auto& v : complement.vectors()) {
            rep.representatives[d].push_back(Polynomial::from_vector(v, basis));
        }
        rep.rep_pivots[d] = complement.pivots();
        rep.dims[d] = complement.dim();
        rep.coboundaries[d] = std::move(boundaries);
    });
    return rep;
}

namespace {

void require_degree(const CohomologyReport& report, int degree) {
    if (degree < 0 || degree > report.max_degree) {
        throw DegreeOutOfRange("degree " + std::to_string(degree) + " outside computed range 0.." +
                               std::to_string(report.max_degree));
    }
}

}  // namespace

std::vector<Scalar> class_of(const CohomologyReport& report, const Polynomial& p, int degree) {
    require_degree(report, degree);
    const std::size_t n = report.spec.n();
    if (!p.is_zero() && (p.nvars() != n || !p.is_homogeneous() || p.degree() != degree)) {
        throw std::invalid_argument("class_of: polynomial is not homogeneous of degree " + std::to_string(degree));
    }
    std::vector<Scalar> coords(report.dims[degree]);
    if (p.is_zero()) return coords;
    if (!Differential(report.spec).apply(p).is_zero()) {
        throw NotACocycle("not a cocycle: " + p.to_string());
    }
    SparseVector r = report.coboundaries[degree].reduce(p.to_vector(report.bases[degree]));
    const auto& pivots = report.rep_pivots[degree];
    for (const auto& [i, c] : r) {
        auto it = std::find(pivots.begin(), pivots.end(), i);
        if (it != pivots.end()) coords[static_cast<std::size_t>(it - pivots.begin())] = c;
    }
    return coords;
}

Polynomial class_representative(const CohomologyReport& report, int degree, const std::vector<Scalar>& coords) {
    require_degree(report, degree);
    if (coords.size() != report.dims[degree]) throw std::invalid_argument("class coordinate length mismatch");
    Polynomial p(report.spec.n());
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (!is_zero(coords[k])) p += report.representatives[degree][k] * coords[k];
    }
    return p;
}

CohomologyClass cup_product(const CohomologyReport& report, const std::vector<CohomologyClass>& classes) {
    int total = 0;
    for (const auto& c : classes) total += c.degree;
    require_degree(report, total);
    Polynomial prod = Polynomial::constant(report.spec.n(), 1);
    for (const auto& c : classes) prod = prod * class_representative(report, c.degree, c.coords);
    return {total, class_of(report, prod, total)};
}

std::vector<int> GradedPresentation::weights() const {
    std::vector<int> w;
    for (const auto& g : generators) w.push_back(g.degree);
    return w;
}

std::vector<std::string> GradedPresentation::symbols() const {
    std::vector<std::string> s;
    for (const auto& g : generators) s.push_back(g.symbol);
    return s;
}

std::size_t GradedPresentation::generator_count(int degree) const {
    return static_cast<std::size_t>(std::count_if(generators.begin(), generators.end(),
                                                  [&](const auto& g) { return g.degree == degree; }));
}

namespace {

// Values of generator monomials in A, memoized by peeling the last variable.
class MonomialEvaluator {
public:
    MonomialEvaluator(std::size_t n, const std::vector<PresentationGenerator>& gens) : n_(n), gens_(gens) {}

    const Polynomial& value(const Monomial& mu) {
        if (auto it = memo_.find(mu); it != memo_.end()) return it->second;
        Polynomial v(n_);
        std::size_t last = mu.nvars();
        while (last > 0 && mu[last - 1] == 0) --last;
        if (last == 0) {
            v = Polynomial::constant(n_, 1);
        } else {
            Monomial rest = mu / Monomial::variable(mu.nvars(), last - 1);
            v = value(rest) * gens_[last - 1].representative;
        }
        return memo_.emplace(mu, std::move(v)).first->second;
    }

private:
    std::size_t n_;
    const std::vector<PresentationGenerator>& gens_;
    std::map<Monomial, Polynomial> memo_;
};

// Generator monomials use all generators; extend shorter exponent vectors.
Monomial widen(const Monomial& m, std::size_t nvars) {
    std::vector<Exponent> e(m.exponents());
    e.resize(nvars, 0);
    return Monomial(std::move(e));
}

std::string generator_symbol(const AlgebraSpec& spec, const Polynomial& rep, std::size_t ordinal) {
    if (spec.is_representative() && rep.size() == 1 && rep.terms().begin()->second == 1 && rep.degree() == 2) {
        const Monomial& m = rep.terms().begin()->first;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            for (Exponent e = 0; e < m[i]; ++e) idx.push_back(i + 1);
        }
        return "g_{" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "}";
    }
    return "g_" + std::to_string(ordinal);
}

}  // namespace

GradedPresentation extract_presentation(const CohomologyReport& report, int degree_bound) {
    if (degree_bound < 1) throw std::invalid_argument("degree_bound must be >= 1");
    require_degree(report, degree_bound);
    const std::size_t n = report.spec.n();
    GradedPresentation pres;
    pres.spec = report.spec;
    pres.degree_bound = degree_bound;

    // Pass 1: greedy generators by increasing degree.
    for (int d = 1; d <= degree_bound; ++d) {
        const std::size_t g = pres.generators.size();
        SpanBasis decomposable(report.dims[d]);
        if (g > 0) {
            MonomialEvaluator eval(n, pres.generators);
            for (const auto& mu : monomials_of_degree(pres.weights(), d)) {
                decomposable.insert(to_sparse(class_of(report, eval.value(mu), d)));
            }
        }
        for (std::size_t k = 0; k < report.dims[d]; ++k) {
            SparseVector unit{{static_cast<std::uint32_t>(k), Scalar(1)}};
            if (decomposable.insert(unit)) {
                const Polynomial& r = report.representatives[d][k];
                pres.generators.push_back({generator_symbol(report.spec, r, pres.generators.size() + 1), d, r});
            }
        }
    }

    // Pass 2: relation spaces and minimal relations.
    const std::size_t g = pres.generators.size();
    const auto weights = pres.weights();
    MonomialEvaluator eval(n, pres.generators);
    pres.relation_space_dims.assign(static_cast<std::size_t>(degree_bound + 1), 0);
    std::vector<std::pair<int, Polynomial>> minimal;  // (degree, relation)
    if (g == 0) return pres;
    for (int d = 1; d <= degree_bound; ++d) {
        MonomialIndex monos(monomials_of_degree(weights, d));
        std::vector<SparseVector> cols;
        for (const auto& mu : monos.monomials()) cols.push_back(to_sparse(class_of(report, eval.value(mu), d)));
        SparseMatrix evaluation = SparseMatrix::from_columns(report.dims[d], std::move(cols));
        SpanBasis kernel(monos.size());
        for (const auto& v : sparse_kernel_basis(evaluation)) kernel.insert(v);
        pres.relation_space_dims[static_cast<std::size_t>(d)] = kernel.dim();
        if (kernel.dim() == 0) continue;

        SpanBasis ideal(monos.size());
        for (const auto& [e, rel] : minimal) {
            for (const auto& mu : monomials_of_degree(weights, d - e)) {
                ideal.insert((rel * widen(mu, g)).to_vector(monos));
            }
        }
        for (const auto& v : kernel.vectors()) {
            if (ideal.insert(v)) {
                Polynomial rel = Polynomial::from_vector(v, monos);
                pres.relations.push_back(rel);
                minimal.emplace_back(d, std::move(rel));
            }
        }
    }
    return pres;
}

GradedPresentation extract_presentation(const AlgebraSpec& spec, int degree_bound) {
    return extract_presentation(cohomology_dims(spec, degree_bound), degree_bound);
}

Polynomial evaluate_on_representatives(const GradedPresentation& pres, const Polynomial& q) {
    MonomialEvaluator eval(pres.spec.n(), pres.generators);
    Polynomial out(pres.spec.n());
    for (const auto& [mu, c] : q.terms()) out += eval.value(widen(mu, pres.generators.size())) * c;
    return out;
}

PresentationCheck check_presentation(const CohomologyReport& report, const GradedPresentation& pres) {
    PresentationCheck chk;
    const auto weights = pres.weights();
    const Differential diff(report.spec);
    for (const auto& rel : pres.relations) {
        int d = rel.leading_monomial(weights).degree(weights);
        Polynomial value = evaluate_on_representatives(pres, rel);
        bool ok = diff.apply(value).is_zero() &&
                  (value.is_zero() || report.coboundaries[d].contains(value.to_vector(report.bases[d])));
        if (!ok) {
            chk.relations_are_coboundaries = false;
            chk.detail += "relation not a coboundary: " + rel.to_string(pres.symbols()) + "; ";
        }
    }
    MonomialEvaluator eval(report.spec.n(), pres.generators);
    for (int d = 1; d <= pres.degree_bound; ++d) {
        SpanBasis image(report.dims[d]);
        SpanBasis products(report.dims[d]);
        for (const auto& mu : monomials_of_degree(weights, d)) {
            auto v = to_sparse(class_of(report, eval.value(mu), d));
            image.insert(v);
            if (mu.degree() > 1) products.insert(v);
        }
        if (image.dim() != report.dims[d]) {
            chk.surjective = false;
            chk.detail += "degree " + std::to_string(d) + " not spanned; ";
        }
        for (std::size_t k = 0; k < pres.generators.size(); ++k) {
            const auto& gen = pres.generators[k];
            if (gen.degree != d) continue;
            if (products.contains(to_sparse(class_of(report, gen.representative, d)))) {
                chk.generators_indecomposable = false;
                chk.detail += gen.symbol + " is decomposable; ";
            }
        }
    }
    return chk;
}

}  // namespace dgpoly
