#include "dgpoly/free_resolution.hpp"

#include "dgpoly/parallel.hpp"
#include "dgpoly/span_basis.hpp"

#include <algorithm>
#include <map>

namespace dgpoly {

std::optional<std::size_t> BettiTable::projective_dimension() const {
    if (!terminated) return std::nullopt;
    return pd_lower_bound();
}

std::size_t BettiTable::pd_lower_bound() const {
    std::size_t last = 0;
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (betti[i] != 0) last = i;
    }
    return last;
}

namespace {

// Degree-d piece of a graded free module with generators in `degrees`:
// basis pairs (generator, standard monomial of degree d - deg generator).
class FreePiece {
public:
    FreePiece(const QuotientRing& r, const std::vector<int>& degrees, int d) {
        for (std::size_t j = 0; j < degrees.size(); ++j) {
            int e = d - degrees[j];
            if (e < 0) continue;
            for (const auto& mu : r.standard_basis(e).monomials()) {
                index_.emplace(std::make_pair(j, mu), static_cast<std::uint32_t>(basis_.size()));
                basis_.emplace_back(j, mu);
            }
        }
    }

    std::size_t size() const { return basis_.size(); }
    const std::pair<std::size_t, Monomial>& operator[](std::size_t k) const { return basis_[k]; }
    std::uint32_t index(std::size_t gen, const Monomial& mu) const { return index_.at({gen, mu}); }

    /// Vector of sum_j poly_j e_j where each poly_j is in normal form.
    SparseVector vector_of(const std::map<std::size_t, Polynomial>& parts) const {
        SparseVector v;
        for (const auto& [j, p] : parts) {
            for (const auto& [mu, c] : p.terms()) v.emplace_back(index(j, mu), c);
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    std::map<std::size_t, Polynomial> parts_of(const SparseVector& v, std::size_t nvars) const {
        std::map<std::size_t, Polynomial> parts;
        for (const auto& [k, c] : v) {
            const auto& [j, mu] = basis_[k];
            auto [it, fresh] = parts.try_emplace(j, nvars);
            it->second.add_term(mu, c);
        }
        return parts;
    }

private:
    std::vector<std::pair<std::size_t, Monomial>> basis_;
    std::map<std::pair<std::size_t, Monomial>, std::uint32_t> index_;
};

}  // namespace

BettiTable minimal_free_resolution_of_k(const QuotientRing& r, int steps, int internal_degree_bound) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    const int D = internal_degree_bound;
    const std::size_t g = r.nvars();
    BettiTable table;
    table.internal_degree_bound = D;
    table.generator_degrees.push_back({0});
    table.betti.push_back(1);
    table.maps.emplace_back();

    for (int i = 0; i <= steps; ++i) {
        const std::vector<int>& cur = table.generator_degrees[static_cast<std::size_t>(i)];
        const auto depth = static_cast<std::size_t>(D + 1);
        std::vector<FreePiece> pieces;
        pieces.reserve(depth);
        for (int d = 0; d <= D; ++d) pieces.emplace_back(r, cur, d);

        // Kernel of F_i -> F_{i-1} in each degree; degrees are independent.
        std::vector<std::vector<SparseVector>> kernels(depth);
        if (i == 0) {
            for (int d = 1; d <= D; ++d) {
                for (std::size_t k = 0; k < pieces[static_cast<std::size_t>(d)].size(); ++k) {
                    kernels[static_cast<std::size_t>(d)].push_back({{static_cast<std::uint32_t>(k), Scalar(1)}});
                }
            }
        } else {
            const auto& prev_degrees = table.generator_degrees[static_cast<std::size_t>(i - 1)];
            const auto& images = table.maps[static_cast<std::size_t>(i)];
            parallel_for(depth, [&](std::size_t d) {
                FreePiece rows(r, prev_degrees, static_cast<int>(d));
                const FreePiece& cols = pieces[d];
                std::vector<SparseVector> columns;
                columns.reserve(cols.size());
                for (std::size_t k = 0; k < cols.size(); ++k) {
                    const auto& [j, mu] = cols[k];
                    std::map<std::size_t, Polynomial> parts;
                    for (const auto& entry : images[j]) {
                        auto [it, fresh] = parts.try_emplace(entry.target, g);
                        it->second += r.normal_form(entry.value * mu);
                    }
                    columns.push_back(rows.vector_of(parts));
                }
                SpanBasis kernel(cols.size());
                for (const auto& v : sparse_kernel_basis(SparseMatrix::from_columns(rows.size(), std::move(columns)))) {
                    kernel.insert(v);
                }
                kernels[d] = kernel.vectors();
            });
        }

        bool empty = std::all_of(kernels.begin(), kernels.end(), [](const auto& k) { return k.empty(); });
        if (empty) {
            const int top = cur.empty() ? 0 : *std::max_element(cur.begin(), cur.end());
            if (cur.empty() || g == 0 || D >= top + r.max_weight()) {
                table.terminated = true;
                return table;
            }
            throw BoundTooSmall("internal degree bound " + std::to_string(D) + " leaves no room above step " +
                                std::to_string(i) + " generators in degree " + std::to_string(top));
        }
        if (i == steps) return table;

        // Minimal generators: kernel modulo m * kernel, degree by degree.
        std::vector<int> next_degrees;
        std::vector<std::vector<FreeEntry>> next_maps;
        for (int d = 1; d <= D; ++d) {
            const FreePiece& piece = pieces[static_cast<std::size_t>(d)];
            SpanBasis decomposable(piece.size());
            for (std::size_t v = 0; v < g; ++v) {
                const int e = d - r.weights()[v];
                if (e < 1) continue;
                const FreePiece& lower = pieces[static_cast<std::size_t>(e)];
                const Monomial xv = Monomial::variable(g, v);
                for (const auto& kv : kernels[static_cast<std::size_t>(e)]) {
                    auto parts = lower.parts_of(kv, g);
                    for (auto& [j, p] : parts) p = r.normal_form(p * xv);
                    decomposable.insert(piece.vector_of(parts));
                }
            }
            for (const auto& kv : kernels[static_cast<std::size_t>(d)]) {
                if (!decomposable.insert(kv)) continue;
                std::vector<FreeEntry> image;
                for (auto& [j, p] : piece.parts_of(kv, g)) {
                    if (!p.is_zero()) image.push_back({j, std::move(p)});
                }
                next_degrees.push_back(d);
                next_maps.push_back(std::move(image));
            }
        }
        table.betti.push_back(next_degrees.size());
        table.generator_degrees.push_back(std::move(next_degrees));
        table.maps.push_back(std::move(next_maps));
    }
    return table;
}

}  // namespace dgpoly
