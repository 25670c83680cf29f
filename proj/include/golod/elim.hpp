#pragma once

// Shared sparse Gauss-Jordan engine. koszul and resolution feed it matrices in
// their own indexings; the public sparse.hpp functions wrap it once.

#include <map>
#include <optional>
#include <vector>

#include "golod/errors.hpp"

namespace golod::detail {

template <class Ops>
class GaussJordan {
public:
    using Elem = typename Ops::Elem;
    using Row = std::map<int, Elem>;

    GaussJordan(Ops ops, int cols) : ops_(ops), cols_(cols) {}

    void add_row(Row row) {
        for (auto it = row.begin(); it != row.end();)
            it = ops_.is_zero(it->second) ? row.erase(it) : std::next(it);
        rows_.push_back(std::move(row));
    }

    int cols() const { return cols_; }

    /// Full Jordan elimination. Pivot choice is Markowitz-style (least fill
    /// estimate), ties broken on (row, col). Columns >= first_forbidden_col
    /// are never chosen as pivots (used for augmented solves).
    void run(int first_forbidden_col = -1) {
        if (first_forbidden_col < 0) first_forbidden_col = cols_;
        std::vector<long> col_count(static_cast<size_t>(cols_), 0);
        used_.assign(rows_.size(), false);
        for (const auto& row : rows_)
            for (const auto& [c, v] : row) col_count[static_cast<size_t>(c)]++;
        for (;;) {
            long best_score = -1;
            int best_r = -1, best_c = -1;
            for (size_t r = 0; r < rows_.size(); ++r) {
                if (used_[r] || rows_[r].empty()) continue;
                long rw = static_cast<long>(rows_[r].size()) - 1;
                for (const auto& [c, v] : rows_[r]) {
                    if (c >= first_forbidden_col) continue;
                    long score = rw * (col_count[static_cast<size_t>(c)] - 1);
                    if (best_r < 0 || score < best_score ||
                        (score == best_score &&
                         (static_cast<int>(r) < best_r ||
                          (static_cast<int>(r) == best_r && c < best_c)))) {
                        best_score = score;
                        best_r = static_cast<int>(r);
                        best_c = c;
                    }
                }
            }
            if (best_r < 0) break;
            eliminate(static_cast<size_t>(best_r), best_c, col_count);
        }
    }

    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::vector<std::pair<int, int>>& pivots() const { return pivots_; }

    bool is_pivot_col(int c) const {
        for (const auto& [r, pc] : pivots_)
            if (pc == c) return true;
        return false;
    }

    std::vector<int> free_cols(int limit_col = -1) const {
        if (limit_col < 0) limit_col = cols_;
        std::vector<bool> piv(static_cast<size_t>(cols_), false);
        for (const auto& [r, pc] : pivots_) piv[static_cast<size_t>(pc)] = true;
        std::vector<int> out;
        for (int c = 0; c < limit_col; ++c)
            if (!piv[static_cast<size_t>(c)]) out.push_back(c);
        return out;
    }

    /// Kernel vector with 1 at the given free column, 0 at the other free
    /// columns. Valid after run(); `f` must not be a pivot column.
    std::vector<Elem> kernel_vector(int f) const {
        std::vector<Elem> v(static_cast<size_t>(cols_), ops_.zero());
        v[static_cast<size_t>(f)] = ops_.one();
        for (const auto& [r, pc] : pivots_) {
            const Row& row = rows_[static_cast<size_t>(r)];
            auto it = row.find(f);
            if (it == row.end()) continue;
            v[static_cast<size_t>(pc)] = ops_.neg(ops_.div(it->second, row.at(pc)));
        }
        return v;
    }

    /// True if some row reduced to entries only in forbidden columns
    /// (an inconsistent augmented system).
    bool has_unpivoted_nonzero_row() const {
        for (size_t r = 0; r < rows_.size(); ++r)
            if (!used_[r] && !rows_[r].empty()) return true;
        return false;
    }

private:
    void eliminate(size_t pr, int pc, std::vector<long>& col_count) {
        used_[pr] = true;
        pivots_.emplace_back(static_cast<int>(pr), pc);
        const Elem pivot = rows_[pr].at(pc);
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (r == pr) continue;
            auto hit = rows_[r].find(pc);
            if (hit == rows_[r].end()) continue;
            Elem factor = ops_.div(hit->second, pivot);
            for (const auto& [c, v] : rows_[pr]) {
                auto [it, inserted] = rows_[r].try_emplace(c, ops_.zero());
                if (inserted) col_count[static_cast<size_t>(c)]++;
                it->second = ops_.sub(it->second, ops_.mul(factor, v));
                if (ops_.is_zero(it->second)) {
                    rows_[r].erase(it);
                    col_count[static_cast<size_t>(c)]--;
                }
            }
        }
    }

    Ops ops_;
    int cols_;
    std::vector<Row> rows_;
    std::vector<bool> used_;
    std::vector<std::pair<int, int>> pivots_;
};

/// Accumulates row vectors in reduced form; insert() reports whether the row
/// enlarged the span. Deterministic given insertion order.
template <class Ops>
class SpanBuilder {
public:
    using Elem = typename Ops::Elem;
    using Row = std::map<int, Elem>;

    explicit SpanBuilder(Ops ops) : ops_(ops) {}

    int dim() const { return static_cast<int>(rows_.size()); }

    /// Reduces `row` against the current span (leading-column echelon).
    Row reduce(Row row) const {
        for (const auto& [lead, stored] : rows_) {
            auto it = row.find(lead);
            if (it == row.end()) continue;
            Elem factor = ops_.div(it->second, stored.at(lead));
            for (const auto& [c, v] : stored) {
                auto [jt, inserted] = row.try_emplace(c, ops_.zero());
                jt->second = ops_.sub(jt->second, ops_.mul(factor, v));
                if (ops_.is_zero(jt->second)) row.erase(jt);
            }
        }
        return row;
    }

    bool insert(Row row) {
        row = reduce(std::move(row));
        if (row.empty()) return false;
        int lead = row.begin()->first;
        rows_.emplace(lead, std::move(row));
        return true;
    }

    bool contains(Row row) const { return reduce(std::move(row)).empty(); }

private:
    Ops ops_;
    std::map<int, Row> rows_;  // leading col -> reduced row
};

}  // namespace golod::detail
