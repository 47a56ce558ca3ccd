#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lrcpir/lrc.hpp"

namespace lrcpir {

/// Seed layout for the initial row-regular matrix: the block-circulant core
/// is tiled from L circulant blocks of order n_c with row/column weights
/// rho_1..rho_L summing to n-k. Each block is the circulant whose rows carry
/// ones at the offsets in `supports[l]` relative to the diagonal; any
/// support of size rho_l yields a rho_l-regular block.
struct CirculantSeedConfig {
    std::size_t m = 0;   // floor((n-k)/L)
    std::size_t m1 = 0;  // m+1
    std::size_t t = 0;   // (n-k) mod L; the first t blocks get weight m+1
    std::vector<std::size_t> rho;
    std::vector<std::vector<std::size_t>> supports;  // defaults to 0..rho_l-1
};

/// Binary n x n matrix partitioned into L row/column groups of n_c plus a
/// trailing group of r_bar. Views: the block-circulant core, the bottom
/// strip over it, and the last r_bar columns.
struct EMatrix {
    BinaryMatrix e;
    std::size_t n_c = 0, l = 0, r_bar = 0;

    std::size_t core_size() const { return n_c * l; }

    BinaryMatrix core() const { return slice(0, core_size(), 0, core_size()); }
    BinaryMatrix bottom_strip() const { return slice(core_size(), r_bar, 0, core_size()); }
    BinaryMatrix right_strip() const { return slice(0, core_size(), core_size(), r_bar); }
    BinaryMatrix corner() const { return slice(core_size(), r_bar, core_size(), r_bar); }

  private:
    BinaryMatrix slice(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
        BinaryMatrix s(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) s.set(i, j, e.at(r0 + i, c0 + j));
        return s;
    }
};

/// One element move: the 1 at (row, from_col) went to (row, to_col).
/// All indices 1-based and global.
struct SwapRecord {
    std::size_t row = 0, from_col = 0, to_col = 0;
};

struct PartitionSwaps {
    std::size_t partition = 0;    // row partition index, 1-based
    std::size_t block = 0;        // active column partition
    std::vector<int> s;           // selection vector over the L column partitions
    std::vector<std::size_t> rows;  // chosen rows, global 1-based
    std::vector<SwapRecord> swaps;
};

struct IterationSwaps {
    std::size_t iteration = 0;  // 1..r_bar
    std::vector<PartitionSwaps> partitions;
};

struct SwapTrace {
    std::vector<std::vector<std::size_t>> seed_supports;  // chosen circulant offsets
    std::vector<IterationSwaps> iterations;
};

/// Optional forced choices for the rebalancing pass, one entry per
/// iteration: the column partition selected for the first row partition and
/// the donor rows (global 1-based) per row partition.
struct SwapPlan {
    struct Iteration {
        std::size_t s1_block = 0;
        std::vector<std::vector<std::size_t>> rows_per_partition;
    };
    std::vector<Iteration> iterations;
};

inline CirculantSeedConfig seed_config(const LocalityProfile& p) {
    CirculantSeedConfig cfg;
    const std::size_t nk = p.n - p.k;
    cfg.m = nk / p.l;
    cfg.m1 = cfg.m + 1;
    cfg.t = nk % p.l;
    for (std::size_t l = 0; l < p.l; ++l) {
        std::size_t rho = l < cfg.t ? cfg.m1 : cfg.m;
        if (rho > p.n_c) throw InfeasibleRho("circulant weight exceeds block order");
        cfg.rho.push_back(rho);
        std::vector<std::size_t> sup(rho);
        for (std::size_t i = 0; i < rho; ++i) sup[i] = i;
        cfg.supports.push_back(std::move(sup));
    }
    return cfg;
}

/// Builds the initial matrix for a given seed: a block-circulant core (each
/// block row is the previous one rotated right), a zero right strip, and
/// bottom rows with ones exactly on the parity coordinates. Every row has
/// weight n-k.
inline EMatrix init_row_regular(const LocalityProfile& p, const CirculantSeedConfig& cfg) {
    EMatrix em;
    em.n_c = p.n_c;
    em.l = p.l;
    em.r_bar = p.r_bar;
    em.e = BinaryMatrix(p.n, p.n);

    // core block (i,h) holds the circulant seeded by supports[(h-i) mod L]
    for (std::size_t bi = 0; bi < p.l; ++bi)
        for (std::size_t bh = 0; bh < p.l; ++bh) {
            const auto& sup = cfg.supports[(bh + p.l - bi) % p.l];
            for (std::size_t x = 0; x < p.n_c; ++x)
                for (std::size_t d : sup)
                    em.e.set(bi * p.n_c + x, bh * p.n_c + (x + d) % p.n_c, 1);
        }

    for (std::size_t i = 0; i < p.r_bar; ++i)
        for (const IndexSet& ps : p.parity_sets)
            for (std::size_t c : ps) em.e.set(p.n_c * p.l + i, c - 1, 1);

    return em;
}

inline std::pair<EMatrix, CirculantSeedConfig> init_row_regular(const LocalityProfile& p) {
    CirculantSeedConfig cfg = seed_config(p);
    EMatrix em = init_row_regular(p, cfg);
    return {std::move(em), std::move(cfg)};
}

/// Signed slack of the swap-count condition: how many donor coordinates the
/// selection guards leave available per row partition, minus the r_bar
/// iterations that need one each.
inline long long swap_feasibility_margin(const CirculantSeedConfig& cfg,
                                         const LocalityProfile& p) {
    long long lhs = 0;
    for (std::size_t j = 0; j < p.l_c; ++j)
        lhs += static_cast<long long>(cfg.rho[j]) - static_cast<long long>(p.delta - 1);
    for (std::size_t j = p.l_c; j < p.l; ++j)
        lhs += static_cast<long long>(cfg.m) - static_cast<long long>(p.delta - 1);
    return lhs - static_cast<long long>(p.r_bar);
}

namespace detail {

// Deterministic augmenting-path matching: rows and columns tried in
// ascending order, so the matching is reproducible across runs.
class BipartiteMatcher {
  public:
    explicit BipartiteMatcher(std::size_t cols) : match_col_(cols, kNone) {}

    // adj[r] lists admissible column indices for row r, ascending.
    bool perfect(const std::vector<std::vector<std::size_t>>& adj) {
        std::fill(match_col_.begin(), match_col_.end(), kNone);
        for (std::size_t r = 0; r < adj.size(); ++r) {
            std::vector<bool> seen(match_col_.size(), false);
            if (!augment(adj, r, seen)) return false;
        }
        return true;
    }

    // column assigned per row after a successful perfect() call
    std::vector<std::size_t> row_assignment(std::size_t rows) const {
        std::vector<std::size_t> out(rows, kNone);
        for (std::size_t c = 0; c < match_col_.size(); ++c)
            if (match_col_[c] != kNone) out[match_col_[c]] = c;
        return out;
    }

    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  private:
    bool augment(const std::vector<std::vector<std::size_t>>& adj, std::size_t r,
                 std::vector<bool>& seen) {
        for (std::size_t c : adj[r]) {
            if (seen[c]) continue;
            seen[c] = true;
            if (match_col_[c] == kNone || augment(adj, match_col_[c], seen)) {
                match_col_[c] = r;
                return true;
            }
        }
        return false;
    }

    std::vector<std::size_t> match_col_;
};

// Column-rebalancing pass. Moves one 1 per affected row from the parity
// columns of the core into the zero right strip until every column weight
// is n-k. Choices are deterministic; a depth-first search over the
// per-iteration block selection backs out of dead ends.
class Rebalancer {
  public:
    Rebalancer(EMatrix& em, const LrcCode& code, const SwapPlan* plan)
        : em_(em), code_(code), plan_(plan), p_(code.profile), cfg_(seed_config(p_)) {}

    SwapTrace run() {
        trace_.iterations.clear();
        if (p_.r_bar > 0 && !solve(0))
            throw SwapExhausted("no valid swap schedule exists for this code");
        return std::move(trace_);
    }

  private:
    struct PartitionChoice {
        std::size_t block = 0;                // 1-based active column partition
        std::vector<std::size_t> rows;        // global 0-based donor rows
        std::vector<std::size_t> parity_cols; // global 0-based donor columns
    };

    bool solve(std::size_t iter) {
        if (iter == p_.r_bar) return true;
        const SwapPlan::Iteration* forced = nullptr;
        if (plan_) {
            if (plan_->iterations.size() != p_.r_bar)
                throw ParameterMismatch("swap plan must cover every iteration");
            forced = &plan_->iterations[iter];
        }
        for (std::size_t j1 = 1; j1 <= p_.l; ++j1) {
            if (forced && forced->s1_block != j1) continue;
            std::vector<PartitionChoice> choices;
            if (!pick_all_partitions(j1, forced, choices)) continue;
            apply(iter, choices);
            if (all_rows_correctable() && solve(iter + 1)) return true;
            undo(iter, choices);
        }
        return false;
    }

    // Select donors for every row partition under the weight guards; the
    // selection vector of partition i is the (i-1)-th right rotation of the
    // partition-1 selection.
    bool pick_all_partitions(std::size_t j1, const SwapPlan::Iteration* forced,
                             std::vector<PartitionChoice>& out) {
        for (std::size_t i = 1; i <= p_.l; ++i) {
            std::size_t block = (j1 - 1 + i - 1) % p_.l + 1;
            PartitionChoice choice;
            choice.block = block;
            const std::vector<std::size_t>* forced_rows = nullptr;
            if (forced && !forced->rows_per_partition.empty()) {
                if (forced->rows_per_partition.size() != p_.l)
                    throw ParameterMismatch("swap plan needs one row set per partition");
                forced_rows = &forced->rows_per_partition[i - 1];
            }
            if (!pick_partition(i, block, forced_rows, choice)) return false;
            out.push_back(std::move(choice));
        }
        return true;
    }

    bool pick_partition(std::size_t partition, std::size_t block,
                        const std::vector<std::size_t>* forced_rows, PartitionChoice& choice) {
        const std::size_t row0 = (partition - 1) * p_.n_c;
        const IndexSet& parity = p_.parity_sets[block - 1];

        std::vector<std::size_t> rows;  // candidate donor rows, global 0-based
        std::size_t need = parity.size();
        if (block <= p_.l_c) {
            // local block: donors must keep more than delta-1 ones in it
            for (std::size_t x = 0; x < p_.n_c; ++x)
                if (block_weight(row0 + x, block) > p_.delta - 1) rows.push_back(row0 + x);
            if (rows.size() < need) return false;
        } else {
            // full global block: every row donates and must hold at least
            // max(1, m-(delta-1)) ones before the swap
            std::size_t floor_w = cfg_.m >= p_.delta ? cfg_.m - (p_.delta - 1) : 1;
            for (std::size_t x = 0; x < p_.n_c; ++x) {
                if (block_weight(row0 + x, block) < floor_w) return false;
                rows.push_back(row0 + x);
            }
        }

        if (forced_rows) {
            std::vector<std::size_t> picked;
            for (std::size_t gr : *forced_rows) picked.push_back(gr - 1);
            std::sort(picked.begin(), picked.end());
            if (picked.size() != need) return false;
            for (std::size_t r : picked)
                if (std::find(rows.begin(), rows.end(), r) == rows.end()) return false;
            return try_match(picked, parity, choice);
        }

        if (block > p_.l_c) return try_match(rows, parity, choice);

        // smallest eligible row set (ascending) that admits a matching
        bool found = false;
        for_each_combination(rows.size(), need, [&](const IndexSet& pick) {
            std::vector<std::size_t> subset;
            for (std::size_t idx : pick) subset.push_back(rows[idx - 1]);
            if (try_match(subset, parity, choice)) {
                found = true;
                return false;
            }
            return true;
        });
        return found;
    }

    // Assign a distinct donor column with a 1 to every chosen row.
    bool try_match(const std::vector<std::size_t>& rows, const IndexSet& parity,
                   PartitionChoice& choice) {
        std::vector<std::vector<std::size_t>> adj(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < parity.size(); ++c)
                if (em_.e.at(rows[r], parity[c] - 1)) adj[r].push_back(c);
        BipartiteMatcher matcher(parity.size());
        if (!matcher.perfect(adj)) return false;
        choice.rows = rows;
        choice.parity_cols.clear();
        for (std::size_t c : matcher.row_assignment(rows.size()))
            choice.parity_cols.push_back(parity[c] - 1);
        return true;
    }

    std::size_t block_weight(std::size_t row, std::size_t block) const {
        std::size_t w = 0;
        for (std::size_t c = (block - 1) * p_.n_c; c < block * p_.n_c; ++c) w += em_.e.at(row, c);
        return w;
    }

    void apply(std::size_t iter, const std::vector<PartitionChoice>& choices) {
        IterationSwaps rec;
        rec.iteration = iter + 1;
        const std::size_t zcol = p_.n_c * p_.l + iter;
        for (std::size_t i = 0; i < choices.size(); ++i) {
            const PartitionChoice& ch = choices[i];
            PartitionSwaps ps;
            ps.partition = i + 1;
            ps.block = ch.block;
            ps.s.assign(p_.l, 0);
            ps.s[ch.block - 1] = 1;
            for (std::size_t r = 0; r < ch.rows.size(); ++r) {
                em_.e.set(ch.rows[r], ch.parity_cols[r], 0);
                em_.e.set(ch.rows[r], zcol, 1);
                ps.rows.push_back(ch.rows[r] + 1);
                ps.swaps.push_back({ch.rows[r] + 1, ch.parity_cols[r] + 1, zcol + 1});
            }
            rec.partitions.push_back(std::move(ps));
        }
        trace_.iterations.push_back(std::move(rec));
    }

    void undo(std::size_t iter, const std::vector<PartitionChoice>& choices) {
        const std::size_t zcol = p_.n_c * p_.l + iter;
        for (const PartitionChoice& ch : choices)
            for (std::size_t r = 0; r < ch.rows.size(); ++r) {
                em_.e.set(ch.rows[r], ch.parity_cols[r], 1);
                em_.e.set(ch.rows[r], zcol, 0);
            }
        trace_.iterations.pop_back();
    }

    bool all_rows_correctable() const {
        for (std::size_t i = 0; i < em_.e.rows(); ++i) {
            ErasurePattern pat(em_.e.cols());
            for (std::size_t j = 0; j < em_.e.cols(); ++j) pat.set_erased(j + 1, em_.e.at(i, j));
            if (!is_correctable(code_.code, pat)) return false;
        }
        return true;
    }

    EMatrix& em_;
    const LrcCode& code_;
    const SwapPlan* plan_;
    const LocalityProfile& p_;
    CirculantSeedConfig cfg_;
    SwapTrace trace_;
};

}  // namespace detail

/// Runs the swap pass on an initialized matrix until it is (n-k)-regular.
/// Every intermediate state is re-verified row by row against the code.
inline SwapTrace rebalance_columns(EMatrix& em, const LrcCode& code,
                                   const SwapPlan* plan = nullptr) {
    return detail::Rebalancer(em, code, plan).run();
}

// --- validation --------------------------------------------------------------

struct ValidationReport {
    std::size_t n = 0;
    std::size_t expected_weight = 0;
    std::vector<std::size_t> row_weights, col_weights;
    std::vector<bool> row_correctable;
    bool weights_ok = false;
    bool rows_ok = false;
    bool verdict = false;
};

/// Checks the witness condition directly: every row and column weight must
/// equal n-k and every row must be a correctable erasure pattern.
inline ValidationReport validate_ematrix(const BinaryMatrix& e, const LinearCode& code) {
    if (e.rows() != code.n() || e.cols() != code.n())
        throw DimensionMismatch("matrix must be n x n for the code");
    ValidationReport rep;
    rep.n = code.n();
    rep.expected_weight = code.n() - code.k();
    rep.weights_ok = true;
    rep.rows_ok = true;
    for (std::size_t i = 0; i < e.rows(); ++i) {
        rep.row_weights.push_back(e.row_weight(i));
        rep.weights_ok &= rep.row_weights.back() == rep.expected_weight;
    }
    for (std::size_t j = 0; j < e.cols(); ++j) {
        rep.col_weights.push_back(e.col_weight(j));
        rep.weights_ok &= rep.col_weights.back() == rep.expected_weight;
    }
    for (std::size_t i = 0; i < e.rows(); ++i) {
        ErasurePattern pat(code.n());
        for (std::size_t j = 0; j < e.cols(); ++j) pat.set_erased(j + 1, e.at(i, j));
        rep.row_correctable.push_back(is_correctable(code, pat));
        rep.rows_ok = rep.rows_ok && rep.row_correctable.back();
    }
    rep.verdict = rep.weights_ok && rep.rows_ok;
    return rep;
}

struct Construction {
    EMatrix em;
    CirculantSeedConfig seed;
    SwapTrace trace;
};

/// Full construction: compliance gate, then a deterministic search over
/// circulant seed supports (the canonical consecutive run first) and swap
/// schedules until every row is a correctable pattern and the matrix is
/// (n-k)-regular. Seeds whose initial rows are already uncorrectable for
/// this particular code are skipped; the weight structure alone does not
/// decide correctability.
inline Construction construct_ematrix(const LrcCode& code, const SwapPlan* plan = nullptr) {
    if (!check_compliance(code, /*with_dmin=*/false).ok())
        throw NonCompliantCode("code fails the locality compliance checks");
    const LocalityProfile& p = code.profile;
    CirculantSeedConfig cfg = seed_config(p);

    std::vector<std::vector<std::vector<std::size_t>>> candidates(p.l);
    for (std::size_t l = 0; l < p.l; ++l)
        detail::for_each_combination(p.n_c, cfg.rho[l], [&](const IndexSet& pick) {
            std::vector<std::size_t> sup;
            for (std::size_t i : pick) sup.push_back(i - 1);
            candidates[l].push_back(std::move(sup));
            return true;
        });

    auto rows_correctable = [&](const EMatrix& em) {
        for (std::size_t i = 0; i < em.e.rows(); ++i) {
            ErasurePattern pat(em.e.cols());
            for (std::size_t j = 0; j < em.e.cols(); ++j) pat.set_erased(j + 1, em.e.at(i, j));
            if (!is_correctable(code.code, pat)) return false;
        }
        return true;
    };

    std::vector<std::size_t> pick(p.l, 0);
    while (true) {
        for (std::size_t l = 0; l < p.l; ++l) cfg.supports[l] = candidates[l][pick[l]];
        EMatrix em = init_row_regular(p, cfg);
        if (rows_correctable(em)) {
            bool swapped = true;
            SwapTrace trace;
            try {
                trace = rebalance_columns(em, code, plan);
            } catch (const SwapExhausted&) {
                swapped = false;
            }
            if (swapped && validate_ematrix(em.e, code.code).verdict) {
                trace.seed_supports = cfg.supports;
                return {std::move(em), std::move(cfg), std::move(trace)};
            }
        }
        // advance the odometer, last block fastest
        std::size_t l = p.l;
        while (l > 0) {
            if (++pick[l - 1] < candidates[l - 1].size()) break;
            pick[l - 1] = 0;
            --l;
        }
        if (l == 0) break;
    }
    throw SwapExhausted("no circulant seed admits a valid swap schedule for this code");
}

// --- brute-force existence oracle --------------------------------------------

struct SearchResult {
    enum class Status { found, not_found, budget_exceeded };
    Status status = Status::not_found;
    std::optional<BinaryMatrix> witness;
    std::uint64_t nodes = 0;
};

/// Backtracking search for any valid witness matrix: rows are drawn from
/// the correctable weight-(n-k) patterns in lexicographic order (repeats
/// allowed), column sums capped at n-k. Returns the lexicographically first
/// witness, exhaustion, or budget overrun.
inline SearchResult search_ematrix(const LinearCode& code, std::uint64_t node_budget = 5'000'000) {
    const std::size_t n = code.n(), nk = code.n() - code.k();
    std::vector<std::vector<std::uint8_t>> candidates;
    detail::for_each_combination(n, nk, [&](const IndexSet& supp) {
        if (is_correctable(code, ErasurePattern::from_support(n, supp))) {
            std::vector<std::uint8_t> bits(n, 0);
            for (std::size_t i : supp) bits[i - 1] = 1;
            candidates.push_back(std::move(bits));
        }
        return true;
    });
    std::sort(candidates.begin(), candidates.end());

    SearchResult res;
    std::vector<std::size_t> colsum(n, 0), chosen;
    bool exceeded = false;

    std::function<bool(std::size_t, std::size_t)> dfs = [&](std::size_t depth,
                                                            std::size_t first) -> bool {
        if (depth == n) {
            for (std::size_t c = 0; c < n; ++c)
                if (colsum[c] != nk) return false;
            return true;
        }
        for (std::size_t idx = first; idx < candidates.size(); ++idx) {
            if (++res.nodes > node_budget) {
                exceeded = true;
                return false;
            }
            const auto& row = candidates[idx];
            bool fits = true;
            for (std::size_t c = 0; c < n && fits; ++c) {
                std::size_t s = colsum[c] + row[c];
                fits = s <= nk && nk - s <= n - depth - 1;
            }
            if (!fits) continue;
            for (std::size_t c = 0; c < n; ++c) colsum[c] += row[c];
            chosen.push_back(idx);
            if (dfs(depth + 1, idx)) return true;
            if (exceeded) return false;
            chosen.pop_back();
            for (std::size_t c = 0; c < n; ++c) colsum[c] -= row[c];
        }
        return false;
    };

    if (dfs(0, 0)) {
        BinaryMatrix e(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) e.set(i, j, candidates[chosen[i]][j]);
        res.status = SearchResult::Status::found;
        res.witness = std::move(e);
    } else {
        res.status = exceeded ? SearchResult::Status::budget_exceeded
                              : SearchResult::Status::not_found;
    }
    return res;
}

}  // namespace lrcpir
