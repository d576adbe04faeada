#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "blobtilt/elimination.hpp"
#include "blobtilt/rep.hpp"
#include "blobtilt/tables.hpp"
#include "blobtilt/words.hpp"

namespace blobtilt {

// r_n = dim G o F (rho(n)):  r_1 = 0, r_2 = 2,
// r_n = 4 r_{n-1} + 4^{n-2} - r_{n-2}.
inline Int rn(int n) {
    if (n < 1) throw std::out_of_range("rn: n must be >= 1");
    Int prev2 = 0, prev1 = 2;  // r_1, r_2
    if (n == 1) return prev2;
    if (n == 2) return prev1;
    Int pow4 = 1;  // 4^{k-2} at k = 3 is 4
    for (int k = 3; k <= n; ++k) {
        pow4 = k == 3 ? Int(4) : pow4 * 4;
        Int cur = 4 * prev1 + pow4 - prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

/**
 * TL underline vector: ..1̲2.. at pair (k, k+1) of an n-letter host word is
 * U_k applied to the host with 12 there, i.e. q (..12..) + (..21..).
 */
template <class T>
SparseVector<T> tl_underline(int n, const Word& host, int k, const ParamBundle<T>& p) {
    if (host.letter(k) != 1 || host.letter(k + 1) != 2)
        throw std::invalid_argument("tl_underline: host must carry 12 at the mark");
    SparseVector<T> v(1u << n);
    v.add_term(host.rank(), p.q);
    v.add_term(host.with_letter(k, 2).with_letter(k + 1, 1).rank(), p.one);
    return v;
}

/**
 * Blob seed 1̲2 w 1̲2 on 2n letters: the s-type pair on the left end, the
 * t-type pair on the right end,
 *   st 12w12 + s 12w21 + t 21w12 + 21w21.
 */
template <class T>
SparseVector<T> blob_seed(int n, std::uint32_t w_bits, const ParamBundle<T>& p) {
    const int mid = 2 * n - 4;
    SparseVector<T> v(1u << (2 * n));
    auto idx = [&](std::uint32_t l, std::uint32_t r) {
        return (l << (mid + 2)) | (w_bits << 2) | r;
    };
    // pair bits: 12 -> 01, 21 -> 10
    v.add_term(idx(1u, 1u), p.s * p.t);
    v.add_term(idx(1u, 2u), p.s);
    v.add_term(idx(2u, 1u), p.t);
    v.add_term(idx(2u, 2u), p.one);
    return v;
}

struct TlSectorResult {
    int n = 0, r = 0;
    long n_vectors = 0;
    long rank = 0;
    long expected = 0;

    bool pass() const { return rank == expected; }
};

/**
 * Realize the spanning set S^r of the phi_n image inside the weight-r
 * sector (every single-underline vector) and compute its exact rank.
 * Expected: C(n,r) - 1 on interior sectors, 0 at r in {0, n}.
 */
template <class F>
TlSectorResult tl_phi_sector(int n, int r, const ParamBundle<F>& p,
                             std::vector<SparseVector<F>>* out_vectors = nullptr) {
    TlSectorResult res;
    res.n = n;
    res.r = r;
    res.expected = (0 < r && r < n) ? binomial(n, r).get_si() - 1 : 0;
    EliminationBasis<F> basis(1u << n);
    for (const auto& w : enumerate_sector(n, r).words) {
        for (int k = 1; k <= n - 1; ++k) {
            if (w.letter(k) == 1 && w.letter(k + 1) == 2) {
                auto v = tl_underline(n, w, k, p);
                if (out_vectors) out_vectors->push_back(v);
                basis.insert(std::move(v));
                ++res.n_vectors;
            }
        }
    }
    res.rank = basis.rank();
    return res;
}

struct TlSprimeResult {
    int n = 0, r = 0;
    long sprime_size = 0;
    long expected_size = 0;
    long rank_with_generator = 0;
    long sector_dim = 0;

    bool pass() const {
        return sprime_size == expected_size && rank_with_generator == sector_dim;
    }
};

/**
 * S': the underline vectors with no adjacent pair 12 strictly before the
 * mark.  |S'| = C(n,r) - 1 and S' together with the sector generator
 * v(r,n) = 1^r 2^{n-r} is a basis of the whole sector.
 */
template <class F>
TlSprimeResult tl_sprime_basis(int n, int r, const ParamBundle<F>& p) {
    if (r <= 0 || r >= n)
        throw std::out_of_range("tl_sprime_basis: need 0 < r < n");
    TlSprimeResult res;
    res.n = n;
    res.r = r;
    res.sector_dim = binomial(n, r).get_si();
    res.expected_size = res.sector_dim - 1;
    EliminationBasis<F> basis(1u << n);
    for (const auto& w : enumerate_sector(n, r).words) {
        for (int k = 1; k <= n - 1; ++k) {
            if (w.letter(k) != 1 || w.letter(k + 1) != 2) continue;
            bool earlier12 = false;
            for (int j = 1; j <= k - 2; ++j)
                if (w.letter(j) == 1 && w.letter(j + 1) == 2) earlier12 = true;
            if (earlier12) continue;
            basis.insert(tl_underline(n, w, k, p));
            ++res.sprime_size;
        }
    }
    basis.insert(SparseVector<F>::unit(1u << n, Word::sector_generator(n, r).rank(),
                                       p.one));
    res.rank_with_generator = basis.rank();
    return res;
}

/**
 * The blob spanning set B_n realized on tensor space: for every
 * w in seq_{2n-4}{1,2} the chain
 *   seed,  U_{n-2} seed,  U_{n-3} U_{n-2} seed, ..., U_0 U_1 .. U_{n-2} seed
 * with U_0 = a^2 e.  Returns the n * 4^{n-2} image vectors in a fixed order.
 */
template <class F>
std::vector<SparseVector<F>> blob_phi_image(const GeneratorSet<F>& g) {
    if (g.kind != AlgebraKind::blob)
        throw std::invalid_argument("blob_phi_image: blob generators required");
    const int n = g.n;
    if (n < 2) throw std::out_of_range("blob_phi_image: need n >= 2");
    std::vector<SparseVector<F>> out;
    const std::uint32_t n_words = 1u << (2 * n - 4);
    out.reserve(static_cast<size_t>(n) * n_words);
    for (std::uint32_t w = 0; w < n_words; ++w) {
        SparseVector<F> v = blob_seed(n, w, g.params);
        out.push_back(v);
        for (int j = n - 2; j >= 1; --j) {
            v = g.U(j).apply(v);
            out.push_back(v);
        }
        v = g.e().apply(v).scaled(g.params.a2);
        out.push_back(v);
    }
    return out;
}

struct PhiRankResult {
    int n = 0;
    BlobVariant variant = BlobVariant::rho;
    long n_vectors = 0;
    long rank = 0;
    std::optional<Int> expected;       // r_n for rho; none for rho'
    std::optional<bool> injective;     // rank == r_n certificate; none for rho'
};

/**
 * Exact rank of the phi_n image.  For rho, full rank r_n at one valid
 * specialization certifies generic injectivity of the adjointness map
 * (rank can only drop under base change).  For rho' the rank is reported
 * with no verdict: tilting for rho' is open.
 */
template <class F>
PhiRankResult blob_phi_rank(const GeneratorSet<F>& g) {
    PhiRankResult res;
    res.n = g.n;
    res.variant = g.variant;
    auto vectors = blob_phi_image(g);
    res.n_vectors = static_cast<long>(vectors.size());
    EliminationBasis<F> basis(g.dim());
    for (auto& v : vectors) basis.insert(std::move(v));
    res.rank = basis.rank();
    if (g.variant == BlobVariant::rho) {
        res.expected = rn(g.n);
        res.injective = Int(res.rank) == *res.expected;
    }
    return res;
}

/**
 * EnBasis: the recursively defined basis of the phi_n image,
 *   E_2 = { 1̲2 1̲2,  a^2 rho(e) (1̲2 1̲2) },
 *   E_n^1 = { 1x1, 1x2, 2x1, 2x2 : x in E_{n-1} },
 *   E_n^2 = { 1̲2 w 1̲2 : w in seq_{2n-4} \ u(E_{n-2}) },
 * together with the u-words of its elements.
 */
template <class F>
struct EnBasis {
    int n = 0;
    std::vector<SparseVector<F>> e1, e2;    // empty / split parts (n >= 3)
    std::vector<SparseVector<F>> elements;  // all of E_n
    std::vector<Word> u_words;              // u per element, same order
    std::size_t e1_size = 0;
};

namespace detail {

// 1-letter wrap a x b of a vector on 2k letters.
template <class F>
SparseVector<F> wrap_vector(const SparseVector<F>& v, int letters,
                            std::uint32_t a_letter, std::uint32_t b_letter) {
    SparseVector<F> out(v.dim() << 2);
    const std::uint32_t hi = (a_letter - 1u) << (letters + 1);
    for (const auto& [idx, c] : v.entries())
        out.add_term(hi | (idx << 1) | (b_letter - 1u), c);
    return out;
}

}  // namespace detail

template <class F>
EnBasis<F> build_En(int n, const ParamBundle<F>& params) {
    if (n < 2) throw std::out_of_range("build_En: need n >= 2");
    std::vector<EnBasis<F>> levels;
    levels.reserve(static_cast<size_t>(n - 1));
    auto g2 = build_blob(2, params, BlobVariant::rho);
    {
        EnBasis<F> e;
        e.n = 2;
        auto seed = blob_seed(2, 0u, params);
        e.elements.push_back(seed);
        e.elements.push_back(g2.e().apply(seed).scaled(params.a2));
        for (const auto& v : e.elements) e.u_words.push_back(u_map(v, 4));
        levels.push_back(std::move(e));
    }
    for (int k = 3; k <= n; ++k) {
        EnBasis<F> e;
        e.n = k;
        const EnBasis<F>& prev = levels[static_cast<size_t>(k - 3)];
        for (const auto& x : prev.elements)
            for (std::uint32_t aL = 1; aL <= 2; ++aL)
                for (std::uint32_t bR = 1; bR <= 2; ++bR)
                    e.e1.push_back(
                        detail::wrap_vector(x, 2 * (k - 1), aL, bR));
        std::set<std::uint32_t> excluded;
        if (k - 2 >= 2)
            for (const auto& w : levels[static_cast<size_t>(k - 4)].u_words)
                excluded.insert(w.rank());
        for (std::uint32_t w = 0; w < (1u << (2 * k - 4)); ++w)
            if (!excluded.count(w)) e.e2.push_back(blob_seed(k, w, params));
        e.e1_size = e.e1.size();
        e.elements = e.e1;
        e.elements.insert(e.elements.end(), e.e2.begin(), e.e2.end());
        for (const auto& v : e.elements) e.u_words.push_back(u_map(v, 2 * k));
        levels.push_back(std::move(e));
    }
    return std::move(levels.back());
}

struct EnClaims {
    int n = 0;
    long size = 0;
    Int expected_size;       // r_n
    bool size_ok = false;    // claim i
    bool independent = false;
    bool in_image_span = false;  // with independence: claim ii
    bool u_injective = false;    // claim iii
    bool u_parts_disjoint = false;  // claim iv
    bool triangular = false;     // expansion over lex-ordered u(E_n)

    bool all_pass() const {
        return size_ok && independent && in_image_span && u_injective &&
               u_parts_disjoint && triangular;
    }
};

template <class F>
EnClaims check_En_claims(const EnBasis<F>& basis, const GeneratorSet<F>& g) {
    EnClaims c;
    c.n = basis.n;
    c.size = static_cast<long>(basis.elements.size());
    c.expected_size = rn(basis.n);
    c.size_ok = Int(c.size) == c.expected_size;

    EliminationBasis<F> span(1u << (2 * basis.n));
    c.independent = true;
    for (const auto& v : basis.elements)
        if (!span.insert(v)) c.independent = false;

    EliminationBasis<F> image(g.dim());
    for (auto& v : blob_phi_image(g)) image.insert(std::move(v));
    c.in_image_span = true;
    for (const auto& v : basis.elements)
        if (!image.contains(v)) c.in_image_span = false;

    std::set<std::uint32_t> u_all;
    for (const auto& w : basis.u_words) u_all.insert(w.rank());
    c.u_injective = u_all.size() == basis.u_words.size();

    std::set<std::uint32_t> u1, u2;
    for (std::size_t i = 0; i < basis.u_words.size(); ++i)
        (i < basis.e1_size ? u1 : u2).insert(basis.u_words[i].rank());
    c.u_parts_disjoint = true;
    for (auto w : u2)
        if (u1.count(w)) c.u_parts_disjoint = false;
    if (basis.n == 2) c.u_parts_disjoint = true;  // no split at the base level

    // sort elements by u-word; lower triangularity with nonzero diagonal
    std::vector<std::size_t> order(basis.elements.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return basis.u_words[a].rank() < basis.u_words[b].rank();
    });
    c.triangular = c.u_injective;
    for (std::size_t jj = 0; jj < order.size() && c.triangular; ++jj) {
        const auto& vec = basis.elements[order[jj]];
        if (!vec.coeff(basis.u_words[order[jj]].rank())) c.triangular = false;
        for (std::size_t ii = 0; ii < jj; ++ii)
            if (vec.coeff(basis.u_words[order[ii]].rank())) c.triangular = false;
    }
    return c;
}

struct QuotientDimResult {
    int n = 0;
    Int tensor_dim;   // 4^n
    long rank = 0;
    Int v_plus, v_minus;
    bool pass = false;
};

// dim V^(x)2n - rank(phi_n) = v(n) + v(-n): the cokernel consists of the
// extreme-weight standards only.
inline QuotientDimResult quotient_dims(int n, long rank) {
    QuotientDimResult res;
    res.n = n;
    res.rank = rank;
    res.tensor_dim = int_pow(4, static_cast<unsigned long>(n));
    auto v = v_table(n);
    res.v_plus = v.at(n);
    res.v_minus = v.at(-n);
    res.pass = res.tensor_dim - Int(rank) == res.v_plus + res.v_minus;
    return res;
}

}  // namespace blobtilt
