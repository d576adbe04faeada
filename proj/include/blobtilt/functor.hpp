#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "blobtilt/elimination.hpp"
#include "blobtilt/rep.hpp"

namespace blobtilt {

/**
 * Idempotent: the heredity idempotent eps = U_{n-1} / [2]_q acting on the
 * level-n tensor space.  Localization is F: M -> eps M; it relates level n
 * to level n-2.  Field coefficients only (the construction divides).
 */
template <class F>
struct Idempotent {
    AlgebraKind kind;
    int n = 0;
    SparseOperator<F> op;
};

template <class F>
Idempotent<F> make_epsilon(const GeneratorSet<F>& g) {
    if (g.n < 2) throw std::out_of_range("make_epsilon: need n >= 2");
    const F two_q = g.params.two_q();
    if (two_q.is_zero())
        throw DegenerateParameter("make_epsilon: [2]_q = 0 under specialization");
    auto eps = g.U(g.n - 1).scaled(two_q.inverse());
    if (!(eps * eps == eps))
        throw std::logic_error("make_epsilon: projector is not idempotent");
    return Idempotent<F>{g.kind, g.n, std::move(eps)};
}

template <class F>
SparseVector<F> F_apply(const Idempotent<F>& eps, const SparseVector<F>& v) {
    return eps.op.apply(v);
}

namespace detail {

// Kernel basis of a small dense matrix, by exact row reduction.
template <class F>
std::vector<std::vector<F>> dense_kernel(std::vector<std::vector<F>> rows,
                                         const F& one, const F& zero) {
    const size_t ncols = rows.empty() ? 0 : rows.front().size();
    std::vector<long> pivot_of_col(ncols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const F inv = rows[rank][col].inverse();
        for (auto& v : rows[rank]) v = v * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const F c = rows[r][col];
            for (size_t k = 0; k < ncols; ++k)
                rows[r][k] = rows[r][k] - c * rows[rank][k];
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<std::vector<F>> kernel;
    for (size_t col = 0; col < ncols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<F> v(ncols, zero);
        v[col] = one;
        for (size_t c2 = 0; c2 < ncols; ++c2)
            if (pivot_of_col[c2] >= 0)
                v[c2] = -rows[static_cast<size_t>(pivot_of_col[c2])][col];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// The [2]_p eigenvector of U^p on V^(x)2, normalized to coefficient p on
// the word 12.  Solved exactly, not hard-coded.
template <class F>
SparseVector<F> site_eigenvector(const F& p, const F& one, const F& zero) {
    const F two_p = qnum(2, p);
    auto U = site_operator(2, 1, SiteMatrix<F>::u_matrix(p, zero));
    std::vector<std::vector<F>> rows(4, std::vector<F>(4, zero));
    for (std::uint32_t j = 0; j < 4; ++j)
        for (const auto& [i, c] : U.column_entries(j)) rows[i][j] = c;
    for (std::uint32_t d = 0; d < 4; ++d) rows[d][d] = rows[d][d] - two_p;
    auto kernel = dense_kernel(std::move(rows), one, zero);
    if (kernel.size() != 1)
        throw std::logic_error("site_eigenvector: eigenspace is not one-dimensional");
    // index 1 = word 12
    const F scale = p * kernel[0][1].inverse();
    SparseVector<F> v(4);
    for (std::uint32_t i = 0; i < 4; ++i) v.add_term(i, kernel[0][i] * scale);
    return v;
}

}  // namespace detail

// The eigenvalue-one eigenvectors of the two site projectors making up the
// blob idempotent: ev_1 for U^s (s 12 + 21) and ev_2 for U^t (t 12 + 21).
template <class F>
std::pair<SparseVector<F>, SparseVector<F>> eigenvector_pair(
    const ParamBundle<F>& params) {
    return {detail::site_eigenvector(params.s, params.one, params.zero),
            detail::site_eigenvector(params.t, params.one, params.zero)};
}

// The 2-site block of eps has spectrum {1, 0, 0, 0}: it is idempotent of
// rank one.  Checked exactly on the site projectors themselves.
template <class F>
bool site_projector_spectrum_ok(const ParamBundle<F>& params, AlgebraKind kind) {
    auto check = [&](const F& p) {
        const F two_p = qnum(2, p);
        if (two_p.is_zero()) return false;
        auto P = site_operator(2, 1, SiteMatrix<F>::u_matrix(p, params.zero))
                     .scaled(two_p.inverse());
        if (!(P * P == P)) return false;
        std::vector<SparseVector<F>> cols;
        for (std::uint32_t j = 0; j < 4; ++j) cols.push_back(P.column(j));
        return rank_of(cols) == 1;
    };
    if (kind == AlgebraKind::tl) return check(params.q);
    return check(params.s) && check(params.t);
}

/**
 * Embedding: the isomorphism of the level-(n-2) tensor space onto the image
 * of eps at level n.  TL appends w_2 = q 12 + 21 at the last pair; the blob
 * map is w -> ev_1 (x) w (x) ev_2.
 */
template <class F>
struct Embedding {
    AlgebraKind kind;
    int n = 0;  // target level
    std::optional<SparseVector<F>> left;  // blob only: ev_1
    SparseVector<F> right;                // blob: ev_2; tl: w_2

    std::uint32_t source_sites() const {
        return kind == AlgebraKind::tl ? static_cast<std::uint32_t>(n - 2)
                                       : static_cast<std::uint32_t>(2 * (n - 2));
    }
    std::uint32_t source_dim() const { return 1u << source_sites(); }
    std::uint32_t target_dim() const {
        return kind == AlgebraKind::tl ? (1u << n) : (1u << (2 * n));
    }

    SparseVector<F> apply(const SparseVector<F>& w) const {
        if (w.dim() != source_dim())
            throw std::invalid_argument("Embedding: dimension mismatch");
        SparseVector<F> out(target_dim());
        const std::uint32_t mid = source_sites();
        for (const auto& [idx, c] : w.entries()) {
            for (const auto& [ridx, rc] : right.entries()) {
                if (left) {
                    for (const auto& [lidx, lc] : left->entries())
                        out.add_term((lidx << (mid + 2)) | (idx << 2) | ridx,
                                     lc * c * rc);
                } else {
                    out.add_term((idx << 2) | ridx, c * rc);
                }
            }
        }
        return out;
    }
};

template <class F>
Embedding<F> make_embedding(AlgebraKind kind, int n, const ParamBundle<F>& params) {
    if (n < 2) throw std::out_of_range("make_embedding: need n >= 2");
    if (kind == AlgebraKind::tl) {
        // w_2 = q v_1 (x) v_2 + v_2 (x) v_1, cross-checked against the exact
        // eigenvector solve
        SparseVector<F> w2(4);
        w2.add_term(1, params.q);
        w2.add_term(2, params.one);
        if (!(w2 == detail::site_eigenvector(params.q, params.one, params.zero)))
            throw std::logic_error("make_embedding: w_2 is not the eigenvector");
        return Embedding<F>{kind, n, std::nullopt, std::move(w2)};
    }
    auto [ev1, ev2] = eigenvector_pair(params);
    return Embedding<F>{kind, n, std::move(ev1), std::move(ev2)};
}

struct EmbeddingReport {
    bool injective = false;
    bool eps_fixes_image = false;
    long rank_eps = 0;
    long rank_iota = 0;
    bool image_contained = false;

    bool pass() const {
        return injective && eps_fixes_image && rank_eps == rank_iota &&
               image_contained;
    }
};

// image(iota) = image(eps): iota is injective, eps fixes iota(w) pointwise,
// the ranks agree, and every eps column lies in the iota span.
template <class F>
EmbeddingReport check_embedding(const Idempotent<F>& eps, const Embedding<F>& emb,
                                const ParamBundle<F>& params) {
    EmbeddingReport rep;
    rep.injective = true;
    rep.eps_fixes_image = true;
    EliminationBasis<F> iota_span(emb.target_dim());
    for (std::uint32_t j = 0; j < emb.source_dim(); ++j) {
        auto col = emb.apply(SparseVector<F>::unit(emb.source_dim(), j, params.one));
        if (!(eps.op.apply(col) == col)) rep.eps_fixes_image = false;
        if (!iota_span.insert(col)) rep.injective = false;
    }
    rep.rank_iota = iota_span.rank();
    EliminationBasis<F> eps_span(emb.target_dim());
    rep.image_contained = true;
    for (std::uint32_t j = 0; j < eps.op.dim(); ++j) {
        auto col = eps.op.column(j);
        eps_span.insert(col);
        if (!iota_span.contains(col)) rep.image_contained = false;
    }
    rep.rank_eps = eps_span.rank();
    return rep;
}

struct IntertwiningReport {
    std::vector<RelationCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/**
 * The embedded copy of the level-(n-2) algebra (blob: e, U_1..U_{n-3};
 * TL: U_1..U_{n-3}) commutes with eps, and on the image of iota acts
 * exactly as the level-(n-2) representation:  rho_n(g) iota = iota rho_{n-2}(g).
 */
template <class F>
IntertwiningReport check_intertwining(const GeneratorSet<F>& gens_n,
                                      const GeneratorSet<F>& gens_nm2,
                                      const Embedding<F>& emb) {
    if (gens_nm2.n != gens_n.n - 2 || gens_nm2.kind != gens_n.kind)
        throw std::invalid_argument("check_intertwining: level mismatch");
    IntertwiningReport rep;
    auto check_gen = [&](const std::string& name, const SparseOperator<F>& top,
                         const SparseOperator<F>& bottom) {
        bool ok = true;
        for (std::uint32_t j = 0; j < emb.source_dim() && ok; ++j) {
            auto basis = SparseVector<F>::unit(emb.source_dim(), j,
                                               gens_n.params.one);
            ok = top.apply(emb.apply(basis)) == emb.apply(bottom.apply(basis));
        }
        rep.checks.push_back({name, ok});
    };
    if (gens_n.kind == AlgebraKind::blob) check_gen("e", gens_n.e(), gens_nm2.e());
    for (int i = 1; i <= gens_nm2.n - 1; ++i)
        check_gen("U" + std::to_string(i), gens_n.U(i), gens_nm2.U(i));
    return rep;
}

struct SectorCompatReport {
    std::vector<RelationCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/**
 * F respects the manifest weight decomposition: eps maps the weight-r
 * sector span onto (the iota image of) the matching lower-level sector,
 * and kills the extreme sectors (TL: r in {0, n}; blob: r in {0, 1, 2n-1, 2n}).
 */
template <class F>
SectorCompatReport check_sector_compat(const Idempotent<F>& eps,
                                       const Embedding<F>& emb,
                                       const ParamBundle<F>& params) {
    SectorCompatReport rep;
    const int n_sites = eps.kind == AlgebraKind::tl ? eps.n : 2 * eps.n;
    const int pair_shift = eps.kind == AlgebraKind::tl ? 1 : 2;
    const int inner_sites = n_sites - 2 * pair_shift;
    for (int r = 0; r <= n_sites; ++r) {
        auto sector = enumerate_sector(n_sites, r);
        EliminationBasis<F> image(eps.op.dim());
        for (const auto& w : sector.words)
            image.insert(eps.op.apply(
                SparseVector<F>::unit(eps.op.dim(), w.rank(), params.one)));
        const int r_inner = r - pair_shift;
        long expected = 0;
        if (r_inner >= 0 && r_inner <= inner_sites)
            expected = binomial(inner_sites, r_inner).get_si();
        bool ok = image.rank() == expected;
        // containment in the iota image of the matching lower sector
        if (ok && expected > 0) {
            EliminationBasis<F> target(emb.target_dim());
            auto inner = enumerate_sector(inner_sites, r_inner);
            for (const auto& w : inner.words)
                target.insert(emb.apply(SparseVector<F>::unit(
                    1u << inner_sites, w.rank(), params.one)));
            for (const auto& w : sector.words) {
                if (!target.contains(eps.op.apply(SparseVector<F>::unit(
                        eps.op.dim(), w.rank(), params.one)))) {
                    ok = false;
                    break;
                }
            }
        }
        rep.checks.push_back({"sector r=" + std::to_string(r), ok});
    }
    return rep;
}

}  // namespace blobtilt
