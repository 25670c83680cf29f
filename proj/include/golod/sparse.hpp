#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "golod/field.hpp"
#include "golod/numbers.hpp"

namespace golod {

/// Exact sparse matrix; entries are rationals (canonical representatives when
/// a prime field is in play). Zero entries are never stored.
class SparseMatrix {
public:
    SparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    void set(int r, int c, Rat v);
    void add(int r, int c, const Rat& v);
    Rat get(int r, int c) const;
    size_t nnz() const { return entries_.size(); }
    const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }

private:
    void check(int r, int c) const;
    int rows_, cols_;
    std::map<std::pair<int, int>, Rat> entries_;
};

int rank(const SparseMatrix& M, const FieldSpec& f);

/// Basis of the right null space; size cols - rank.
std::vector<std::vector<Rat>> kernel_basis(const SparseMatrix& M, const FieldSpec& f);

/// Some x with Mx = b, or nothing. Free coordinates are set to zero, so the
/// result is deterministic but otherwise arbitrary among solutions.
std::optional<std::vector<Rat>> solve_right(const SparseMatrix& M, const std::vector<Rat>& b,
                                            const FieldSpec& f);

}  // namespace golod
