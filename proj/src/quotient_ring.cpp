#include "dgpoly/quotient_ring.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace dgpoly {

namespace {

Polynomial make_monic(const Polynomial& p, std::span<const int> w) {
    return p * (1 / p.leading_coefficient(w));
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] > 0 && b[i] > 0) return false;
    }
    return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, std::span<const int> w) {
    const Monomial& lf = f.leading_monomial(w);
    const Monomial& lg = g.leading_monomial(w);
    Monomial l = lf.lcm(lg);
    return (f * (l / lf)) * (1 / f.leading_coefficient(w)) - (g * (l / lg)) * (1 / g.leading_coefficient(w));
}

}  // namespace

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors, std::span<const int> weights) {
    Polynomial rest = p;
    Polynomial remainder(p.nvars());
    std::vector<Monomial> leads;
    std::vector<Scalar> lcs;
    for (const auto& d : divisors) {
        leads.push_back(d.leading_monomial(weights));
        lcs.push_back(d.leading_coefficient(weights));
    }
    while (!rest.is_zero()) {
        const Monomial lm = rest.leading_monomial(weights);
        const Scalar lc = rest.coefficient(lm);
        bool divided = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            if (leads[k].divides(lm)) {
                rest -= (divisors[k] * (lm / leads[k])) * (lc / lcs[k]);
                divided = true;
                break;
            }
        }
        if (!divided) {
            remainder.add_term(lm, lc);
            rest.add_term(lm, -lc);
        }
    }
    return remainder;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators, std::span<const int> weights) {
    std::vector<Polynomial> basis;
    // Pairs ordered by (weighted degree of lcm, i, j).
    std::set<std::tuple<int, std::size_t, std::size_t>> pairs;
    auto add = [&](const Polynomial& f) {
        Polynomial r = reduce(f, basis, weights);
        if (r.is_zero()) return;
        r = make_monic(r, weights);
        basis.push_back(std::move(r));
        const std::size_t j = basis.size() - 1;
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = basis[i].leading_monomial(weights).lcm(basis[j].leading_monomial(weights));
            pairs.emplace(l.degree(weights), i, j);
        }
    };
    for (const auto& f : generators) add(f);
    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        if (coprime(basis[i].leading_monomial(weights), basis[j].leading_monomial(weights))) continue;
        add(s_polynomial(basis[i], basis[j], weights));
    }

    // Minimalize, then interreduce.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = basis[i].leading_monomial(weights);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = basis[j].leading_monomial(weights);
            if (lj.divides(li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        const Monomial lm = minimal[i].leading_monomial(weights);
        Polynomial tail = minimal[i];
        Scalar lc = tail.coefficient(lm);
        tail.add_term(lm, -lc);
        Polynomial r = reduce(tail, others, weights);
        r.add_term(lm, lc);
        reduced.push_back(make_monic(r, weights));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return grevlex_less(a.leading_monomial(weights), b.leading_monomial(weights), weights);
    });
    return reduced;
}

bool is_groebner_basis(const std::vector<Polynomial>& basis, std::span<const int> weights) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!reduce(s_polynomial(basis[i], basis[j], weights), basis, weights).is_zero()) return false;
        }
    }
    return true;
}

QuotientRing::QuotientRing(std::vector<int> weights, std::vector<std::string> symbols,
                           std::vector<Polynomial> groebner)
    : weights_(std::move(weights)), symbols_(std::move(symbols)), groebner_(std::move(groebner)) {
    for (const auto& g : groebner_) leads_.push_back(g.leading_monomial(weights_));
}

QuotientRing::QuotientRing(const QuotientRing& other)
    : weights_(other.weights_), symbols_(other.symbols_), groebner_(other.groebner_), leads_(other.leads_) {}

int QuotientRing::min_weight() const {
    return weights_.empty() ? 0 : *std::min_element(weights_.begin(), weights_.end());
}

int QuotientRing::max_weight() const {
    return weights_.empty() ? 0 : *std::max_element(weights_.begin(), weights_.end());
}

bool QuotientRing::is_standard(const Monomial& m) const {
    return std::none_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
}

Polynomial QuotientRing::normal_form(const Polynomial& p) const {
    Polynomial out(nvars());
    for (const auto& [m, c] : p.terms()) out += normal_form(m) * c;
    return out;
}

Polynomial QuotientRing::normal_form(const Monomial& m) const {
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = monomial_nf_.find(m); it != monomial_nf_.end()) return it->second;
    }
    Polynomial nf = is_standard(m) ? Polynomial::monomial(m) : reduce(Polynomial::monomial(m), groebner_, weights_);
    std::lock_guard lock(cache_mutex_);
    return monomial_nf_.emplace(m, std::move(nf)).first->second;
}

const MonomialIndex& QuotientRing::standard_basis(int d) const {
    std::lock_guard lock(cache_mutex_);
    auto& slot = standard_[d];
    if (!slot) {
        std::vector<Monomial> keep;
        if (d >= 0 && !weights_.empty()) {
            for (auto& m : monomials_of_degree(weights_, d)) {
                if (is_standard(m)) keep.push_back(std::move(m));
            }
        } else if (d == 0) {
            keep.emplace_back(0);
        }
        slot = std::make_unique<MonomialIndex>(std::move(keep));
    }
    return *slot;
}

QuotientRing buchberger(const GradedPresentation& pres) {
    auto weights = pres.weights();
    return QuotientRing(weights, pres.symbols(), groebner_basis(pres.relations, weights));
}

std::vector<std::size_t> hilbert_series(const QuotientRing& r, int degree_bound) {
    std::vector<std::size_t> dims;
    for (int d = 0; d <= degree_bound; ++d) dims.push_back(r.standard_basis(d).size());
    return dims;
}

std::size_t krull_dimension(const QuotientRing& r) {
    const std::size_t g = r.nvars();
    if (g > 24) throw std::invalid_argument("krull_dimension: too many generators for subset search");
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
        auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        bool free = std::none_of(r.leading_monomials().begin(), r.leading_monomials().end(), [&](const Monomial& l) {
            for (std::size_t i = 0; i < g; ++i) {
                if (l[i] > 0 && !(mask & (1u << i))) return false;
            }
            return true;
        });
        if (free) best = size;
    }
    return best;
}

namespace {

// Span of the ideal (seq) inside R_d, as vectors over standard_basis(d).
SpanBasis ideal_piece(const QuotientRing& r, const std::vector<Polynomial>& seq, int d) {
    const MonomialIndex& target = r.standard_basis(d);
    SpanBasis span(target.size());
    for (const auto& s : seq) {
        int e = d - s.leading_monomial(r.weights()).degree(r.weights());
        if (e < 0) continue;
        for (const auto& mu : r.standard_basis(e).monomials()) {
            span.insert(r.normal_form(s * mu).to_vector(target));
        }
    }
    return span;
}

}  // namespace

bool is_regular_on_quotient(const QuotientRing& r, const std::vector<Polynomial>& seq, const Polynomial& f,
                            int bound) {
    const int w = f.leading_monomial(r.weights()).degree(r.weights());
    for (int d = 0; d + w <= bound; ++d) {
        const MonomialIndex& src = r.standard_basis(d);
        const MonomialIndex& dst = r.standard_basis(d + w);
        SpanBasis image = ideal_piece(r, seq, d + w);
        const std::size_t ideal_dim = image.dim();
        for (const auto& mu : src.monomials()) image.insert(r.normal_form(f * mu).to_vector(dst));
        const std::size_t kernel_dim = src.size() - (image.dim() - ideal_dim);
        if (kernel_dim != ideal_piece(r, seq, d).dim()) return false;
    }
    return true;
}

DepthInterval depth_interval(const QuotientRing& r, int search_bound, std::uint64_t seed) {
    DepthInterval out;
    out.upper = krull_dimension(r);
    out.seed = seed;
    out.search_bound = search_bound;
    std::mt19937_64 rng(seed);
    std::vector<int> degrees(r.weights().begin(), r.weights().end());
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    constexpr int kTries = 20;
    while (out.sequence.size() < out.upper) {
        bool found = false;
        for (int attempt = 0; attempt < kTries && !found; ++attempt) {
            const int w = degrees[static_cast<std::size_t>(attempt) % degrees.size()];
            Polynomial f(r.nvars());
            for (std::size_t v = 0; v < r.nvars(); ++v) {
                if (r.weights()[v] != w) continue;
                auto c = static_cast<long>(rng() % 7) - 3;
                f.add_term(Monomial::variable(r.nvars(), v), Scalar(c));
            }
            f = r.normal_form(f);
            if (f.is_zero()) continue;
            if (is_regular_on_quotient(r, out.sequence, f, search_bound)) {
                out.sequence.push_back(std::move(f));
                found = true;
            }
        }
        if (!found) break;
    }
    out.lower = out.sequence.size();
    return out;
}

}  // namespace dgpoly
