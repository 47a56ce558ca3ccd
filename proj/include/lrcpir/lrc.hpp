#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lrcpir/code.hpp"

namespace lrcpir {

/// Derived parameters and coordinate partitions of an [n,k] code with
/// locality (r,delta). Coordinates are laid out as L_c groups of
/// n_c = r+delta-1 (r systematic symbols then delta-1 local parities each),
/// followed by the a = n - L_c*n_c global parities.
struct LocalityProfile {
    std::size_t n = 0, k = 0, r = 0, delta = 0;
    std::size_t n_c = 0;    // local code block length
    std::size_t l_c = 0;    // number of local codes, k/r
    std::size_t l = 0;      // floor(n / n_c)
    std::size_t r_bar = 0;  // n mod n_c
    std::size_t a = 0;      // number of global parities

    std::vector<IndexSet> parity_sets;  // P_1..P_{L+1}; P_{L+1} may be empty
    std::vector<IndexSet> local_sets;   // S_1..S_{L_c}

    std::size_t dmin_bound() const { return n - k + 1 - (l_c - 1) * (delta - 1); }
};

inline LocalityProfile locality_profile(std::size_t n, std::size_t k, std::size_t r,
                                        std::size_t delta) {
    if (k == 0 || r == 0 || delta < 2) throw ParameterMismatch("need k >= 1, r >= 1, delta >= 2");
    if (k % r != 0) throw IndivisibleLocality("locality r must divide k");
    LocalityProfile p;
    p.n = n;
    p.k = k;
    p.r = r;
    p.delta = delta;
    p.n_c = r + delta - 1;
    p.l_c = k / r;
    if (p.n_c > n || p.l_c * p.n_c > n) throw InconsistentLength("n too short for the local codes");
    if (k >= n) throw InconsistentLength("need k < n");
    p.l = n / p.n_c;
    p.r_bar = n % p.n_c;
    p.a = n - p.l_c * p.n_c;

    for (std::size_t j = 1; j <= p.l + 1; ++j) {
        IndexSet set;
        if (j <= p.l_c) {
            for (std::size_t i = (j - 1) * p.n_c + r + 1; i <= j * p.n_c; ++i) set.push_back(i);
        } else if (j <= p.l) {
            for (std::size_t i = (j - 1) * p.n_c + 1; i <= j * p.n_c; ++i) set.push_back(i);
        } else {
            for (std::size_t i = p.l * p.n_c + 1; i <= n; ++i) set.push_back(i);
        }
        p.parity_sets.push_back(std::move(set));
    }
    for (std::size_t j = 1; j <= p.l_c; ++j) {
        IndexSet set;
        for (std::size_t i = (j - 1) * p.n_c + 1; i <= j * p.n_c; ++i) set.push_back(i);
        p.local_sets.push_back(std::move(set));
    }

    std::size_t parity_total = 0;
    for (const auto& set : p.parity_sets) parity_total += set.size();
    if (parity_total != n - k) throw InconsistentLength("parity partition does not cover n-k");
    return p;
}

/// A distance-optimal (r,delta) information locality code: per-group parity
/// blocks P_j ((delta-1) x r), global blocks M_j (a x r), the assembled
/// parity-check matrix, and the stitched-together parity check of the
/// underlying [n',k] MDS code.
struct LrcCode {
    LocalityProfile profile;
    std::vector<Matrix> p_blocks;  // L_c entries
    std::vector<Matrix> m_blocks;  // L_c entries, empty when a == 0
    Matrix h;
    LinearCode code;
    Matrix h_mds;
    std::size_t n_prime = 0;
};

namespace detail {

inline Matrix assemble_lrc_parity(const FieldPtr& f, const LocalityProfile& p,
                                  const std::vector<Matrix>& pb, const std::vector<Matrix>& mb) {
    Matrix h(f, p.n - p.k, p.n);
    for (std::size_t j = 0; j < p.l_c; ++j) {
        const std::size_t row0 = j * (p.delta - 1);
        const std::size_t col0 = j * p.n_c;
        for (std::size_t i = 0; i < p.delta - 1; ++i) {
            for (std::size_t c = 0; c < p.r; ++c) h.set_raw(row0 + i, col0 + c, pb[j].raw(i, c));
            h.set_raw(row0 + i, col0 + p.r + i, 1);
        }
    }
    const std::size_t grow = p.l_c * (p.delta - 1);
    for (std::size_t i = 0; i < p.a; ++i) {
        for (std::size_t j = 0; j < p.l_c; ++j)
            for (std::size_t c = 0; c < p.r; ++c)
                h.set_raw(grow + i, j * p.n_c + c, mb[j].raw(i, c));
        h.set_raw(grow + i, p.l_c * p.n_c + i, 1);
    }
    return h;
}

}  // namespace detail

/// Assembles an LrcCode from its parameter profile and blocks. M blocks are
/// required exactly when there are global parities.
inline LrcCode make_lrc(const FieldPtr& f, std::size_t n, std::size_t k, std::size_t r,
                        std::size_t delta, std::vector<Matrix> p_blocks,
                        std::vector<Matrix> m_blocks) {
    LocalityProfile p = locality_profile(n, k, r, delta);
    if (p_blocks.size() != p.l_c) throw ParameterMismatch("need one P block per local code");
    for (const Matrix& b : p_blocks)
        if (b.rows() != p.delta - 1 || b.cols() != r || b.field() != f)
            throw ParameterMismatch("P block must be (delta-1) x r over the code field");
    if (p.a == 0) {
        if (!m_blocks.empty()) throw ParameterMismatch("no global parities, M blocks must be absent");
    } else {
        if (m_blocks.size() != p.l_c) throw ParameterMismatch("need one M block per local code");
        for (const Matrix& b : m_blocks)
            if (b.rows() != p.a || b.cols() != r || b.field() != f)
                throw ParameterMismatch("M block must be a x r over the code field");
    }

    Matrix h = detail::assemble_lrc_parity(f, p, p_blocks, m_blocks);

    // parity check of the parent MDS code: (P_1 .. P_Lc ; M_1 .. M_Lc | I)
    Matrix left = hconcat(p_blocks);
    if (p.a > 0) left = vconcat({left, hconcat(m_blocks)});
    Matrix h_mds = hconcat({left, Matrix::identity(f, p.delta - 1 + p.a)});

    LrcCode c{std::move(p), std::move(p_blocks), std::move(m_blocks), h, from_parity_check(h),
              std::move(h_mds), 0};
    c.n_prime = c.profile.n - (c.profile.l_c - 1) * (c.profile.delta - 1);
    return c;
}

/// Parity-splitting construction: takes a systematic [n',k] MDS parent with
/// parity check (A | I), splits the first delta-1 rows of A column-wise into
/// the local parity blocks and the remaining rows into the global blocks.
inline LrcCode build_from_mds_parent(const LinearCode& parent, std::size_t r, std::size_t delta) {
    const std::size_t np = parent.n(), k = parent.k();
    if (k == 0 || r == 0 || r > k || k % r != 0) throw ParameterMismatch("locality must divide k");
    if (delta < 2 || delta - 1 > np - k) throw ParameterMismatch("not enough parity rows to split");
    const Matrix& h = parent.parity_check();
    for (std::size_t i = 0; i < np - k; ++i)
        for (std::size_t j = 0; j < np - k; ++j)
            if (h.raw(i, k + j) != (i == j ? 1u : 0u))
                throw NotSystematic("parent parity check must end in an identity block");
    if (!is_mds(parent)) throw NotMds("parent code is not MDS");

    const std::size_t l_c = k / r, a = np - k - (delta - 1);
    std::vector<Matrix> pb, mb;
    for (std::size_t j = 0; j < l_c; ++j) {
        Matrix p(parent.field(), delta - 1, r);
        for (std::size_t i = 0; i < delta - 1; ++i)
            for (std::size_t c = 0; c < r; ++c) p.set_raw(i, c, h.raw(i, j * r + c));
        pb.push_back(std::move(p));
        if (a > 0) {
            Matrix m(parent.field(), a, r);
            for (std::size_t i = 0; i < a; ++i)
                for (std::size_t c = 0; c < r; ++c) m.set_raw(i, c, h.raw(delta - 1 + i, j * r + c));
            mb.push_back(std::move(m));
        }
    }
    const std::size_t n = np + (l_c - 1) * (delta - 1);
    LrcCode c = make_lrc(parent.field(), n, k, r, delta, std::move(pb), std::move(mb));
    if (c.h_mds != h) throw Error("parent parity check did not round-trip");
    return c;
}

/// Systematic Reed-Solomon [n,k] code with Vandermonde evaluation points
/// 1, z, z^2, ...; MDS whenever n <= q-1.
inline LinearCode rs_code(const FieldPtr& f, std::size_t n, std::size_t k) {
    if (n > f->size() - 1) throw ParameterMismatch("RS length exceeds q-1 distinct points");
    if (k == 0 || k > n) throw ParameterMismatch("need 1 <= k <= n");
    Matrix g(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) g.set_raw(i, j, f->pow(f->exp_element(j).value(), i));
    Matrix sys = rref(g);
    if (k == n) return LinearCode(sys, std::nullopt);
    Matrix h(f, n - k, n);
    for (std::size_t i = 0; i < n - k; ++i) {
        for (std::size_t j = 0; j < k; ++j) h.set_raw(i, j, f->neg(sys.raw(j, k + i)));
        h.set_raw(i, k + i, 1);
    }
    return LinearCode(sys, h);
}

// --- compliance -------------------------------------------------------------

struct ComplianceReport {
    bool group_sizes_ok = false;      // |S_j| <= r+delta-1
    bool local_distance_ok = false;   // d_min of each local code >= delta
    bool information_rank_ok = false; // rank(G restricted to all S_j) = k
    bool locals_mds = false;          // each local code is [r+delta-1, r] MDS
    bool layout_ok = false;           // H matches the block template
    bool hmds_mds = false;            // stitched parity check defines an MDS code

    std::optional<std::size_t> dmin;  // enumerated when q^k is desk-scale
    std::size_t dmin_bound = 0;
    std::optional<bool> distance_optimal;

    bool ok() const {
        return group_sizes_ok && local_distance_ok && information_rank_ok && locals_mds &&
               layout_ok && hmds_mds;
    }
};

/// Runs the structural checks. The overall minimum distance is enumerated
/// only when `with_dmin` is set and q^k is inside the guard; it reports on
/// distance optimality and plays no part in ok().
inline ComplianceReport check_compliance(const LrcCode& c, bool with_dmin = true) {
    const LocalityProfile& p = c.profile;
    ComplianceReport rep;
    rep.dmin_bound = p.dmin_bound();

    rep.group_sizes_ok = true;
    for (const IndexSet& s : p.local_sets) rep.group_sizes_ok &= s.size() <= p.n_c;

    rep.local_distance_ok = true;
    rep.locals_mds = true;
    for (const IndexSet& s : p.local_sets) {
        LinearCode local = puncture(c.code, s);
        rep.locals_mds &= local.k() == p.r && is_mds(local);
        rep.local_distance_ok &= dmin_bruteforce(local) >= p.delta;
    }

    IndexSet all_locals;
    for (const IndexSet& s : p.local_sets) all_locals.insert(all_locals.end(), s.begin(), s.end());
    rep.information_rank_ok = rank(restrict_cols(c.code.generator(), all_locals)) == p.k;

    rep.layout_ok = c.h == detail::assemble_lrc_parity(c.code.field(), p, c.p_blocks, c.m_blocks) &&
                    c.h == c.code.parity_check();

    rep.hmds_mds = is_mds(from_parity_check(c.h_mds));

    std::uint64_t total = 1;
    bool enumerable = with_dmin;
    for (std::size_t i = 0; i < p.k && enumerable; ++i) {
        total *= c.code.field()->size();
        enumerable = total <= kEnumerationGuard;
    }
    if (enumerable) {
        rep.dmin = dmin_bruteforce(c.code);
        rep.distance_optimal = *rep.dmin == rep.dmin_bound;
    }
    return rep;
}

// --- simultaneous local-erasure correction ----------------------------------

enum class Lemma3Status { holds, fails, not_applicable };

struct Lemma3Result {
    Lemma3Status status = Lemma3Status::not_applicable;
    std::optional<ErasurePattern> counterexample;
    std::uint64_t patterns_checked = 0;
};

/// Checks, by exhaustive enumeration, that every pattern with exactly
/// delta-1+nu_j erasures inside each local group (and none elsewhere) is
/// correctable. Applicable only when sum(nu) does not exceed the number of
/// global parities.
inline Lemma3Result lemma3_check(const LrcCode& c, const std::vector<std::size_t>& nu,
                                 std::uint64_t pattern_guard = 1'000'000) {
    const LocalityProfile& p = c.profile;
    if (nu.size() != p.l_c) throw WrongSize("need one surplus per local code");

    Lemma3Result res;
    std::size_t total_nu = 0;
    for (std::size_t v : nu) total_nu += v;
    if (total_nu > p.a) return res;  // hypothesis violated

    auto choose = [](std::size_t n, std::size_t r) {
        if (r > n) return std::uint64_t(0);
        std::uint64_t v = 1;
        for (std::size_t i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
        return v;
    };
    std::uint64_t total_patterns = 1;
    for (std::size_t j = 0; j < p.l_c; ++j) {
        std::uint64_t cnt = choose(p.n_c, p.delta - 1 + nu[j]);
        if (cnt == 0) {  // no pattern fits in the group: vacuously true
            res.status = Lemma3Status::holds;
            return res;
        }
        total_patterns *= cnt;
        if (total_patterns > pattern_guard) throw TooLarge("pattern space exceeds the guard");
    }

    ErasurePattern pattern(p.n);
    std::function<bool(std::size_t)> walk = [&](std::size_t j) -> bool {
        if (j == p.l_c) {
            ++res.patterns_checked;
            if (!is_correctable(c.code, pattern)) {
                res.counterexample = pattern;
                return false;
            }
            return true;
        }
        const IndexSet& s = p.local_sets[j];
        return detail::for_each_combination(s.size(), p.delta - 1 + nu[j],
                                            [&](const IndexSet& pick) {
                                                for (std::size_t i : pick)
                                                    pattern.set_erased(s[i - 1], true);
                                                bool cont = walk(j + 1);
                                                for (std::size_t i : pick)
                                                    pattern.set_erased(s[i - 1], false);
                                                return cont;
                                            });
    };
    res.status = walk(0) ? Lemma3Status::holds : Lemma3Status::fails;
    return res;
}

}  // namespace lrcpir
