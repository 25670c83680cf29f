#include "golod/resolution.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "golod/elim.hpp"
#include "golod/errors.hpp"

namespace golod {

FreeResolution::FreeResolution(RingContext ctx, FieldSpec field,
                               std::vector<GradedFreeModule> modules,
                               std::vector<std::vector<Column>> differentials)
    : ctx_(std::move(ctx)),
      field_(field),
      modules_(std::move(modules)),
      diffs_(std::move(differentials)) {
    if (modules_.empty() || diffs_.size() + 1 != modules_.size())
        throw Error(errc::domain, "malformed resolution shape");
}

Monomial FreeResolution::entry_monomial(int i, int row, int col) const {
    const Multidegree& src = module(i).gens.at(static_cast<size_t>(col));
    const Multidegree& tgt = module(i - 1).gens.at(static_cast<size_t>(row));
    Multidegree d(src.size());
    for (size_t v = 0; v < src.size(); ++v) {
        if (src[v] < tgt[v])
            throw Error(errc::internal_inconsistency, "entry multidegree is negative");
        d[v] = src[v] - tgt[v];
    }
    return Monomial(std::move(d));
}

bool FreeResolution::is_minimal() const {
    for (int i = 1; i <= length(); ++i) {
        const auto& cols = differential(i);
        for (size_t c = 0; c < cols.size(); ++c)
            for (const auto& e : cols[c])
                if (module(i).gens[c] == module(i - 1).gens[static_cast<size_t>(e.row)])
                    return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Taylor complex.

FreeResolution taylor_resolution(const MonomialIdeal& I, int gen_cap, const FieldSpec& f) {
    if (I.is_unit()) throw Error(errc::unit_ideal, "Taylor complex needs a proper ideal");
    int t = I.gen_count();
    if (t > gen_cap)
        throw Error(errc::size_cap, "taylor resolution refused: " + std::to_string(t) +
                                        " generators exceed the cap of " +
                                        std::to_string(gen_cap) + " (2^t blow-up)");
    int n = I.ctx().var_count();

    std::vector<GradedFreeModule> modules(static_cast<size_t>(t) + 1);
    std::vector<std::vector<uint32_t>> masks(static_cast<size_t>(t) + 1);
    std::vector<std::unordered_map<uint32_t, int>> index(static_cast<size_t>(t) + 1);
    modules[0].gens = {Multidegree(static_cast<size_t>(n), 0)};
    masks[0] = {0u};
    index[0][0u] = 0;
    for (uint32_t m = 1; m < (1u << t); ++m) {
        int i = std::popcount(m);
        index[static_cast<size_t>(i)][m] = static_cast<int>(masks[static_cast<size_t>(i)].size());
        masks[static_cast<size_t>(i)].push_back(m);
        Multidegree lcm(static_cast<size_t>(n), 0);
        for (int j = 0; j < t; ++j)
            if ((m >> j) & 1u)
                for (int v = 0; v < n; ++v)
                    lcm[static_cast<size_t>(v)] =
                        std::max(lcm[static_cast<size_t>(v)], I.gens()[static_cast<size_t>(j)][v]);
        modules[static_cast<size_t>(i)].gens.push_back(std::move(lcm));
    }
    // Masks are enumerated in increasing numeric order, so generator order is
    // deterministic.
    std::vector<std::vector<FreeResolution::Column>> diffs(static_cast<size_t>(t));
    for (int i = 1; i <= t; ++i) {
        auto& cols = diffs[static_cast<size_t>(i - 1)];
        cols.resize(masks[static_cast<size_t>(i)].size());
        for (size_t c = 0; c < cols.size(); ++c) {
            uint32_t m = masks[static_cast<size_t>(i)][c];
            int pos = 0;
            for (uint32_t rest = m; rest;) {
                int j = std::countr_zero(rest);
                rest &= rest - 1;
                ++pos;
                int row = index[static_cast<size_t>(i - 1)].at(m & ~(1u << j));
                cols[c].push_back({row, Rat(pos % 2 == 1 ? 1 : -1)});
            }
        }
    }
    return FreeResolution(I.ctx(), f, std::move(modules), std::move(diffs));
}

// ---------------------------------------------------------------------------
// Minimalization: cancel unit entries (equal source/target multidegree) by
// Gauss pivots. Cancelling pivot (r, c) of d_i only rewrites d_i itself and
// deletes a column of d_{i-1} and a row of d_{i+1}, so one ascending pass
// over the differentials minimizes the whole complex.

namespace {

template <class Ops>
FreeResolution minimize_impl(const FreeResolution& F, Ops ops) {
    using Elem = typename Ops::Elem;
    int len = F.length();
    int n = F.ctx().var_count();

    std::vector<std::vector<char>> alive(static_cast<size_t>(len) + 1);
    for (int i = 0; i <= len; ++i)
        alive[static_cast<size_t>(i)].assign(static_cast<size_t>(F.module(i).rank()), 1);

    // Matrix i (1..len): col -> (row -> coeff) plus row -> cols adjacency.
    struct Mat {
        std::vector<std::unordered_map<int, Elem>> col_rows;
        std::vector<std::unordered_set<int>> row_cols;
    };
    std::vector<Mat> mats(static_cast<size_t>(len) + 1);
    for (int i = 1; i <= len; ++i) {
        Mat& m = mats[static_cast<size_t>(i)];
        m.col_rows.resize(static_cast<size_t>(F.module(i).rank()));
        m.row_cols.resize(static_cast<size_t>(F.module(i - 1).rank()));
        const auto& cols = F.differential(i);
        for (size_t c = 0; c < cols.size(); ++c) {
            for (const auto& e : cols[c]) {
                Elem v = ops.from_rat(e.coeff);
                if (ops.is_zero(v)) continue;
                m.col_rows[c][e.row] = v;
                m.row_cols[static_cast<size_t>(e.row)].insert(static_cast<int>(c));
            }
        }
    }

    for (int i = 1; i <= len; ++i) {
        Mat& m = mats[static_cast<size_t>(i)];
        const auto& src = F.module(i).gens;
        const auto& tgt = F.module(i - 1).gens;
        auto is_unit = [&](int r, int c) { return src[static_cast<size_t>(c)] == tgt[static_cast<size_t>(r)]; };

        // Min-heap of (fill score, row, col); entries may be stale and are
        // revalidated on pop.
        using HeapItem = std::tuple<long, int, int>;
        std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
        auto score_of = [&](int r, int c) {
            return (static_cast<long>(m.row_cols[static_cast<size_t>(r)].size()) - 1) *
                   (static_cast<long>(m.col_rows[static_cast<size_t>(c)].size()) - 1);
        };
        for (size_t c = 0; c < m.col_rows.size(); ++c)
            for (const auto& [r, v] : m.col_rows[c])
                if (is_unit(r, static_cast<int>(c)))
                    heap.emplace(score_of(r, static_cast<int>(c)), r, static_cast<int>(c));

        while (!heap.empty()) {
            auto [score, r, c] = heap.top();
            heap.pop();
            if (!alive[static_cast<size_t>(i)][static_cast<size_t>(c)] ||
                !alive[static_cast<size_t>(i - 1)][static_cast<size_t>(r)])
                continue;
            auto pivot_it = m.col_rows[static_cast<size_t>(c)].find(r);
            if (pivot_it == m.col_rows[static_cast<size_t>(c)].end()) continue;
            long fresh = score_of(r, c);
            if (fresh != score) {
                heap.emplace(fresh, r, c);
                continue;
            }
            // Cancel pivot (r, c).
            Elem pinv = ops.inv(pivot_it->second);
            std::vector<std::pair<int, Elem>> col_other, row_other;
            for (const auto& [s, v] : m.col_rows[static_cast<size_t>(c)])
                if (s != r) col_other.emplace_back(s, v);
            for (int j : m.row_cols[static_cast<size_t>(r)])
                if (j != c) row_other.emplace_back(j, m.col_rows[static_cast<size_t>(j)].at(r));
            for (const auto& [s, vs] : col_other) {
                Elem factor = ops.mul(vs, pinv);
                for (const auto& [j, vj] : row_other) {
                    auto& col = m.col_rows[static_cast<size_t>(j)];
                    auto [it, inserted] = col.try_emplace(s, ops.zero());
                    it->second = ops.sub(it->second, ops.mul(factor, vj));
                    if (ops.is_zero(it->second)) {
                        col.erase(it);
                        m.row_cols[static_cast<size_t>(s)].erase(j);
                    } else {
                        if (inserted) m.row_cols[static_cast<size_t>(s)].insert(j);
                        if (is_unit(s, j)) heap.emplace(score_of(s, j), s, j);
                    }
                }
            }
            // Remove row r and column c from this matrix.
            for (const auto& [j, vj] : row_other) m.col_rows[static_cast<size_t>(j)].erase(r);
            m.row_cols[static_cast<size_t>(r)].clear();
            for (const auto& [s, vs] : col_other) m.row_cols[static_cast<size_t>(s)].erase(c);
            m.col_rows[static_cast<size_t>(c)].clear();
            alive[static_cast<size_t>(i)][static_cast<size_t>(c)] = 0;
            alive[static_cast<size_t>(i - 1)][static_cast<size_t>(r)] = 0;
            // The cancelled pair detaches from the neighbours without any
            // arithmetic: drop column r of d_{i-1} and row c of d_{i+1}.
            if (i - 1 >= 1) {
                Mat& left = mats[static_cast<size_t>(i - 1)];
                for (const auto& [s, v] : left.col_rows[static_cast<size_t>(r)])
                    left.row_cols[static_cast<size_t>(s)].erase(r);
                left.col_rows[static_cast<size_t>(r)].clear();
            }
            if (i + 1 <= len) {
                Mat& right = mats[static_cast<size_t>(i + 1)];
                for (int j : right.row_cols[static_cast<size_t>(c)])
                    right.col_rows[static_cast<size_t>(j)].erase(c);
                right.row_cols[static_cast<size_t>(c)].clear();
            }
        }
    }

    // Compact surviving generators.
    std::vector<std::vector<int>> new_index(static_cast<size_t>(len) + 1);
    std::vector<GradedFreeModule> modules;
    for (int i = 0; i <= len; ++i) {
        new_index[static_cast<size_t>(i)].assign(static_cast<size_t>(F.module(i).rank()), -1);
        GradedFreeModule mod;
        for (int j = 0; j < F.module(i).rank(); ++j) {
            if (!alive[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
            new_index[static_cast<size_t>(i)][static_cast<size_t>(j)] = mod.rank();
            mod.gens.push_back(F.module(i).gens[static_cast<size_t>(j)]);
        }
        modules.push_back(std::move(mod));
    }
    int new_len = len;
    while (new_len > 0 && modules[static_cast<size_t>(new_len)].rank() == 0) --new_len;
    modules.resize(static_cast<size_t>(new_len) + 1);

    std::vector<std::vector<FreeResolution::Column>> diffs(static_cast<size_t>(new_len));
    for (int i = 1; i <= new_len; ++i) {
        auto& cols = diffs[static_cast<size_t>(i - 1)];
        cols.resize(static_cast<size_t>(modules[static_cast<size_t>(i)].rank()));
        Mat& m = mats[static_cast<size_t>(i)];
        for (size_t c = 0; c < m.col_rows.size(); ++c) {
            int nc = new_index[static_cast<size_t>(i)][c];
            if (nc < 0) continue;
            std::vector<FreeResolution::Entry> entries;
            for (const auto& [r, v] : m.col_rows[c]) {
                int nr = new_index[static_cast<size_t>(i - 1)][static_cast<size_t>(r)];
                entries.push_back({nr, ops.to_rat(v)});
            }
            std::sort(entries.begin(), entries.end(),
                      [](const auto& a, const auto& b) { return a.row < b.row; });
            cols[static_cast<size_t>(nc)] = std::move(entries);
        }
    }
    (void)n;
    return FreeResolution(F.ctx(), F.field(), std::move(modules), std::move(diffs));
}

}  // namespace

FreeResolution minimize_resolution(const FreeResolution& F) {
    return with_field(F.field(), [&](auto ops) { return minimize_impl(F, ops); });
}

// ---------------------------------------------------------------------------
// Betti tables.

void BettiTable::add(int i, int total_degree, Int count) {
    auto key = std::make_pair(i, total_degree);
    auto it = graded_.find(key);
    if (it == graded_.end())
        graded_.emplace(key, std::move(count));
    else
        it->second += count;
}

Int BettiTable::total(int i) const {
    Int s = 0;
    for (const auto& [key, v] : graded_)
        if (key.first == i) s += v;
    return s;
}

Int BettiTable::graded(int i, int total_degree) const {
    auto it = graded_.find({i, total_degree});
    return it == graded_.end() ? Int(0) : it->second;
}

int BettiTable::max_index() const {
    int m = -1;
    for (const auto& [key, v] : graded_) m = std::max(m, key.first);
    return m;
}

BettiTable betti_over_S(const MonomialIdeal& I, const FieldSpec& f) {
    FreeResolution minimal = minimize_resolution(taylor_resolution(I, 20, f));
    BettiTable table;
    for (int i = 0; i <= minimal.length(); ++i)
        for (const auto& g : minimal.module(i).gens) table.add(i, total_degree(g));
    return table;
}

// ---------------------------------------------------------------------------
// Minimal resolution of k over R = S/I, built per multidegree.

namespace {

struct StandardMonomials {
    const MonomialIdeal& I;
    int n;
    std::vector<std::vector<Multidegree>> by_degree;

    const std::vector<Multidegree>& degree(int d) {
        while (static_cast<int>(by_degree.size()) <= d) {
            int e = static_cast<int>(by_degree.size());
            std::vector<Multidegree> out;
            Multidegree cur(static_cast<size_t>(n), 0);
            // All exponent vectors of total degree e, lex order.
            enumerate(cur, 0, e, out);
            by_degree.push_back(std::move(out));
        }
        return by_degree[static_cast<size_t>(d)];
    }

    void enumerate(Multidegree& cur, int var, int left, std::vector<Multidegree>& out) {
        if (var == n - 1) {
            cur[static_cast<size_t>(var)] = left;
            if (!I.contains(Monomial(cur))) out.push_back(cur);
            cur[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<size_t>(var)] = e;
            enumerate(cur, var + 1, left - e, out);
        }
        cur[static_cast<size_t>(var)] = 0;
    }
};

bool ideal_is_artinian(const MonomialIdeal& I) {
    int n = I.ctx().var_count();
    for (int v = 0; v < n; ++v) {
        bool pure = false;
        for (const auto& g : I.gens()) {
            bool only_v = g[v] > 0;
            for (int w = 0; w < n && only_v; ++w)
                if (w != v && g[w] > 0) only_v = false;
            if (only_v) pure = true;
        }
        if (!pure) return false;
    }
    return true;
}

template <class Ops>
KResolveResult resolve_impl(const MonomialIdeal& I, int max_h, int max_deg, bool artinian,
                            Ops ops) {
    using Elem = typename Ops::Elem;
    using Row = typename detail::GaussJordan<Ops>::Row;
    int n = I.ctx().var_count();
    StandardMonomials std_monos{I, n, {}};

    struct Step {
        std::vector<Multidegree> gen_mdeg;
        std::vector<int> gen_deg;
        // phi_i columns: generator j of F_i as a sparse vector over F_{i-1}.
        std::vector<std::vector<std::pair<int, Elem>>> cols;
    };
    std::vector<Step> steps(static_cast<size_t>(max_h) + 1);
    steps[0].gen_mdeg = {Multidegree(static_cast<size_t>(n), 0)};
    steps[0].gen_deg = {0};

    KResolveResult result;
    result.max_deg_used = max_deg;
    result.artinian = artinian;
    result.certified.assign(static_cast<size_t>(max_h) + 1, false);
    result.certified[0] = true;
    result.table.add(0, 0);

    for (int i = 1; i <= max_h; ++i) {
        const Step& prev = steps[static_cast<size_t>(i - 1)];
        Step cur;
        bool gen_at_max_deg = false;
        int min_d = *std::min_element(prev.gen_deg.begin(), prev.gen_deg.end());
        int max_prev_d = *std::max_element(prev.gen_deg.begin(), prev.gen_deg.end());

        for (int d = min_d; d <= max_deg; ++d) {
            // Multidegrees where (F_{i-1})_d is nonzero.
            std::set<Multidegree> cands;
            for (size_t j = 0; j < prev.gen_mdeg.size(); ++j) {
                int rest = d - prev.gen_deg[j];
                if (rest < 0) continue;
                for (const auto& m : std_monos.degree(rest)) {
                    Multidegree mu = prev.gen_mdeg[j];
                    for (int v = 0; v < n; ++v) mu[static_cast<size_t>(v)] += m[static_cast<size_t>(v)];
                    cands.insert(std::move(mu));
                }
            }
            if (cands.empty()) {
                // An Artinian quotient has contiguous degrees 0..s, so pieces
                // above every generator degree stay empty forever; below the
                // top generator there can still be gaps.
                if (artinian && d > max_prev_d) break;
                continue;
            }
            for (const auto& mu : cands) {
                auto shift_is_standard = [&](const Multidegree& gen) {
                    Multidegree rest(static_cast<size_t>(n));
                    for (int v = 0; v < n; ++v) {
                        if (gen[static_cast<size_t>(v)] > mu[static_cast<size_t>(v)]) return false;
                        rest[static_cast<size_t>(v)] =
                            mu[static_cast<size_t>(v)] - gen[static_cast<size_t>(v)];
                    }
                    return !I.contains(Monomial(rest));
                };

                std::vector<int> cols;
                for (size_t j = 0; j < prev.gen_mdeg.size(); ++j)
                    if (shift_is_standard(prev.gen_mdeg[j])) cols.push_back(static_cast<int>(j));
                if (cols.empty()) continue;
                std::unordered_map<int, int> col_local;
                for (size_t j = 0; j < cols.size(); ++j) col_local[cols[j]] = static_cast<int>(j);

                // Rows: basis of (F_{i-2})_mu; for i = 1 the target is k.
                std::vector<Row> mat;
                if (i == 1) {
                    mat.resize(total_degree(mu) == 0 ? 1 : 0);
                    if (!mat.empty()) mat[0][0] = ops.one();
                } else {
                    const Step& prev2 = steps[static_cast<size_t>(i - 2)];
                    std::unordered_map<int, int> row_local;
                    for (size_t l = 0; l < prev2.gen_mdeg.size(); ++l) {
                        Multidegree rest(static_cast<size_t>(n));
                        bool ok = true;
                        for (int v = 0; v < n && ok; ++v) {
                            if (prev2.gen_mdeg[l][static_cast<size_t>(v)] > mu[static_cast<size_t>(v)])
                                ok = false;
                            else
                                rest[static_cast<size_t>(v)] =
                                    mu[static_cast<size_t>(v)] -
                                    prev2.gen_mdeg[l][static_cast<size_t>(v)];
                        }
                        if (ok && !I.contains(Monomial(rest)))
                            row_local.emplace(static_cast<int>(l),
                                              static_cast<int>(row_local.size()));
                    }
                    mat.resize(row_local.size());
                    for (size_t jl = 0; jl < cols.size(); ++jl) {
                        for (const auto& [l, v] : prev.cols[static_cast<size_t>(cols[jl])]) {
                            auto it = row_local.find(l);
                            if (it == row_local.end()) continue;  // entry dies in R
                            mat[static_cast<size_t>(it->second)][static_cast<int>(jl)] = v;
                        }
                    }
                }

                detail::GaussJordan<Ops> gj(ops, static_cast<int>(cols.size()));
                for (auto& r : mat) gj.add_row(std::move(r));
                gj.run();
                auto free_cols = gj.free_cols();
                if (free_cols.empty()) continue;

                // Span of shifts of this step's generators at lower multidegrees.
                detail::SpanBuilder<Ops> span(ops);
                for (size_t g = 0; g < cur.gen_mdeg.size(); ++g) {
                    if (cur.gen_mdeg[g] == mu || !dominates(mu, cur.gen_mdeg[g])) continue;
                    Row shifted;
                    for (const auto& [j, v] : cur.cols[g]) {
                        auto it = col_local.find(j);
                        if (it != col_local.end()) shifted[it->second] = v;
                    }
                    span.insert(std::move(shifted));
                }
                for (int fcol : free_cols) {
                    auto v = gj.kernel_vector(fcol);
                    Row sparse;
                    for (size_t c = 0; c < v.size(); ++c)
                        if (!ops.is_zero(v[c])) sparse[static_cast<int>(c)] = v[c];
                    if (!span.insert(sparse)) continue;
                    // New minimal generator of the i-th syzygy module.
                    std::vector<std::pair<int, Elem>> col;
                    for (size_t c = 0; c < v.size(); ++c)
                        if (!ops.is_zero(v[c]))
                            col.emplace_back(cols[c], v[c]);
                    cur.gen_mdeg.push_back(mu);
                    cur.gen_deg.push_back(d);
                    cur.cols.push_back(std::move(col));
                    if (d == max_deg) gen_at_max_deg = true;
                }
            }
        }
        for (size_t g = 0; g < cur.gen_deg.size(); ++g)
            result.table.add(i, cur.gen_deg[g]);
        result.certified[static_cast<size_t>(i)] =
            result.certified[static_cast<size_t>(i - 1)] && !gen_at_max_deg;
        if (cur.gen_mdeg.empty()) {
            // Kernel is zero: the resolution stopped (only happens over S).
            for (int j = i; j <= max_h; ++j)
                result.certified[static_cast<size_t>(j)] = result.certified[static_cast<size_t>(i)];
            break;
        }
        steps[static_cast<size_t>(i)] = std::move(cur);
    }

    // Classical smoke test: for I inside m^2, beta_1 = n and
    // beta_2 = C(n,2) + (number of minimal generators).
    bool in_m2 = true;
    for (const auto& g : I.gens())
        if (g.degree() < 2) in_m2 = false;
    if (in_m2 && !I.is_zero()) {
        if (max_h >= 1 && result.certified[1] && result.table.total(1) != n)
            throw Error(errc::internal_inconsistency, "beta_1 smoke test failed");
        if (max_h >= 2 && result.certified[2] &&
            result.table.total(2) != Int(n) * (n - 1) / 2 + I.gen_count())
            throw Error(errc::internal_inconsistency, "beta_2 smoke test failed");
    }
    return result;
}

}  // namespace

bool KResolveResult::certified_through(int i) const {
    for (int j = 0; j <= i; ++j)
        if (j >= static_cast<int>(certified.size()) || !certified[static_cast<size_t>(j)])
            return false;
    return true;
}

KResolveResult resolve_k_over_R(const MonomialIdeal& I, int max_h, std::optional<int> max_deg,
                                const FieldSpec& f) {
    if (I.is_unit()) throw Error(errc::unit_ideal, "cannot resolve k over the zero ring");
    if (max_h < 0) throw Error(errc::domain, "max_h must be non-negative");
    bool artinian = ideal_is_artinian(I);
    int md;
    if (max_deg) {
        md = *max_deg;
        if (md < 1) throw Error(errc::domain, "max_deg must be positive");
    } else if (artinian) {
        StandardMonomials sm{I, I.ctx().var_count(), {}};
        int s = 0;
        while (!sm.degree(s + 1).empty()) ++s;
        md = max_h * (s + 1);
    } else {
        throw Error(errc::domain,
                    "max_deg is required: the quotient is not Artinian, so no default bound applies");
    }
    return with_field(f, [&](auto ops) { return resolve_impl(I, max_h, md, artinian, ops); });
}

PoincareResult poincare_truncation(const MonomialIdeal& I, int N, std::optional<int> max_deg,
                                   const FieldSpec& f) {
    KResolveResult r = resolve_k_over_R(I, N, max_deg, f);
    std::vector<Int> coeffs(static_cast<size_t>(N) + 1, Int(0));
    for (int i = 0; i <= N; ++i) coeffs[static_cast<size_t>(i)] = r.table.total(i);
    PoincareResult out{TruncatedSeries(std::move(coeffs)), -1};
    for (int i = 0; i <= N && r.certified_through(i); ++i) out.certified_through = i;
    return out;
}

}  // namespace golod
