#include "golod/sparse.hpp"

#include "golod/elim.hpp"
#include "golod/errors.hpp"

namespace golod {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error(errc::domain, "negative matrix dimension");
}

void SparseMatrix::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw Error(errc::dimension_mismatch, "matrix index out of range");
}

void SparseMatrix::set(int r, int c, Rat v) {
    check(r, c);
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(v);
}

void SparseMatrix::add(int r, int c, const Rat& v) {
    check(r, c);
    auto it = entries_.find({r, c});
    Rat next = (it == entries_.end() ? Rat(0) : it->second) + v;
    set(r, c, std::move(next));
}

Rat SparseMatrix::get(int r, int c) const {
    check(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rat(0) : it->second;
}

namespace {

template <class Ops>
detail::GaussJordan<Ops> load(const SparseMatrix& M, Ops ops, int extra_cols) {
    detail::GaussJordan<Ops> gj(ops, M.cols() + extra_cols);
    std::vector<typename detail::GaussJordan<Ops>::Row> rows(static_cast<size_t>(M.rows()));
    for (const auto& [rc, v] : M.entries()) {
        auto e = ops.from_rat(v);
        if (!ops.is_zero(e)) rows[static_cast<size_t>(rc.first)][rc.second] = e;
    }
    for (auto& r : rows) gj.add_row(std::move(r));
    return gj;
}

}  // namespace

int rank(const SparseMatrix& M, const FieldSpec& f) {
    return with_field(f, [&](auto ops) {
        auto gj = load(M, ops, 0);
        gj.run();
        return gj.rank();
    });
}

std::vector<std::vector<Rat>> kernel_basis(const SparseMatrix& M, const FieldSpec& f) {
    return with_field(f, [&](auto ops) {
        auto gj = load(M, ops, 0);
        gj.run();
        std::vector<std::vector<Rat>> out;
        for (int c : gj.free_cols()) {
            auto v = gj.kernel_vector(c);
            std::vector<Rat> w(v.size());
            for (size_t i = 0; i < v.size(); ++i) w[i] = ops.to_rat(v[i]);
            out.push_back(std::move(w));
        }
        return out;
    });
}

std::optional<std::vector<Rat>> solve_right(const SparseMatrix& M, const std::vector<Rat>& b,
                                            const FieldSpec& f) {
    if (static_cast<int>(b.size()) != M.rows())
        throw Error(errc::dimension_mismatch, "right-hand side length must equal row count");
    return with_field(f, [&](auto ops) -> std::optional<std::vector<Rat>> {
        // Augment with -b; a solution is a kernel vector with last coordinate 1.
        detail::GaussJordan<decltype(ops)> aug(ops, M.cols() + 1);
        {
            std::vector<typename detail::GaussJordan<decltype(ops)>::Row> rows(
                static_cast<size_t>(M.rows()));
            for (const auto& [rc, v] : M.entries()) {
                auto e = ops.from_rat(v);
                if (!ops.is_zero(e)) rows[static_cast<size_t>(rc.first)][rc.second] = e;
            }
            for (int r = 0; r < M.rows(); ++r) {
                auto e = ops.from_rat(b[static_cast<size_t>(r)]);
                if (!ops.is_zero(e)) rows[static_cast<size_t>(r)][M.cols()] = ops.neg(e);
            }
            for (auto& r : rows) aug.add_row(std::move(r));
        }
        aug.run(M.cols());
        if (aug.has_unpivoted_nonzero_row()) return std::nullopt;
        auto v = aug.kernel_vector(M.cols());
        std::vector<Rat> x(static_cast<size_t>(M.cols()));
        for (int c = 0; c < M.cols(); ++c) x[static_cast<size_t>(c)] = ops.to_rat(v[static_cast<size_t>(c)]);
        return x;
    });
}

}  // namespace golod
