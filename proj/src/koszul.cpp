#include "golod/koszul.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>

#include "golod/elim.hpp"
#include "golod/errors.hpp"
#include "golod/threads.hpp"

namespace golod {

int mask_size(WedgeMask m) { return std::popcount(m); }

Multidegree mask_multidegree(int n, WedgeMask m) {
    Multidegree d(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1u) d[static_cast<size_t>(i)] = 1;
    return d;
}

std::string mask_str(const RingContext& ctx, WedgeMask m) {
    std::string out = "e[";
    bool first = true;
    for (int i = 0; i < ctx.var_count(); ++i) {
        if (!((m >> i) & 1u)) continue;
        if (!first) out += ",";
        out += ctx.name(i);
        first = false;
    }
    return out + "]";
}

namespace {

Rat canon(const Rat& c, const FieldSpec& f) {
    if (!f.is_prime_field()) return c;
    FpOps ops{f.characteristic()};
    return ops.to_rat(ops.from_rat(c));
}

// Sign of sorting the concatenation (T1 ascending, T2 ascending): the parity
// of #{(a,b) : a in T1, b in T2, a > b}.
int shuffle_sign(WedgeMask t1, WedgeMask t2) {
    int inversions = 0;
    for (WedgeMask rest = t1; rest;) {
        int a = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(t2 & ((1u << a) - 1u));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

void KoszulElement::put(WedgeMask mask, const Monomial& mono, const Rat& c, const FieldSpec& f) {
    Key key{mask, mono};
    auto it = terms_.find(key);
    Rat next = canon((it == terms_.end() ? Rat(0) : it->second) + c, f);
    if (next == 0) {
        if (it != terms_.end()) terms_.erase(it);
    } else {
        terms_[key] = std::move(next);
    }
}

KoszulElement KoszulElement::term(WedgeMask mask, Monomial coeff_monomial, Rat coeff,
                                  const FieldSpec& f) {
    KoszulElement e;
    e.put(mask, coeff_monomial, coeff, f);
    return e;
}

int KoszulElement::hom_degree() const {
    if (terms_.empty()) return -1;
    int deg = mask_size(terms_.begin()->first.first);
    for (const auto& [key, c] : terms_)
        if (mask_size(key.first) != deg)
            throw Error(errc::malformed_element, "mixed homological degrees in one element");
    return deg;
}

bool KoszulElement::is_multihomogeneous(int n) const {
    if (terms_.empty()) return true;
    Multidegree first;
    for (const auto& [key, c] : terms_) {
        if (key.second.size() != n)
            throw Error(errc::dimension_mismatch, "coefficient monomial does not match the ring");
        Multidegree d = mask_multidegree(n, key.first);
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] += key.second[i];
        if (first.empty())
            first = d;
        else if (d != first)
            return false;
    }
    return true;
}

Multidegree KoszulElement::multidegree(int n) const {
    if (terms_.empty())
        throw Error(errc::malformed_element, "the zero element has no multidegree");
    if (!is_multihomogeneous(n))
        throw Error(errc::malformed_element, "element is not multihomogeneous");
    const auto& [key, c] = *terms_.begin();
    Multidegree d = mask_multidegree(n, key.first);
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] += key.second[i];
    return d;
}

KoszulElement KoszulElement::plus(const KoszulElement& other, const FieldSpec& f) const {
    if (!is_zero() && !other.is_zero() && hom_degree() != other.hom_degree())
        throw Error(errc::malformed_element, "adding elements of different homological degrees");
    KoszulElement out = *this;
    for (const auto& [key, c] : other.terms_) out.put(key.first, key.second, c, f);
    return out;
}

KoszulElement KoszulElement::scaled(const Rat& c, const FieldSpec& f) const {
    KoszulElement out;
    for (const auto& [key, v] : terms_) out.put(key.first, key.second, v * c, f);
    return out;
}

KoszulElement KoszulElement::wedge(const KoszulElement& other, const MonomialIdeal& I,
                                   const FieldSpec& f) const {
    KoszulElement out;
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : other.terms_) {
            if (k1.first & k2.first) continue;  // e_t ^ e_t = 0
            Monomial m = k1.second.times(k2.second);
            if (I.contains(m)) continue;
            int sign = shuffle_sign(k1.first, k2.first);
            out.put(k1.first | k2.first, m, c1 * c2 * sign, f);
        }
    }
    return out;
}

KoszulElement KoszulElement::reduced(const MonomialIdeal& I, const FieldSpec& f) const {
    KoszulElement out;
    for (const auto& [key, c] : terms_)
        if (!I.contains(key.second)) out.put(key.first, key.second, c, f);
    return out;
}

std::string KoszulElement::str(const RingContext& ctx) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*" + mask_str(ctx, key.first) + "(x)" + key.second.str(ctx);
    }
    return out;
}

KoszulElement koszul_differential(const KoszulElement& e, const MonomialIdeal& I,
                                  const FieldSpec& f) {
    e.hom_degree();  // validates homogeneity of wedge sizes
    int n = I.ctx().var_count();
    KoszulElement out;
    for (const auto& [key, c] : e.terms_) {
        int pos = 0;
        for (WedgeMask rest = key.first; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            ++pos;
            if (v >= n) throw Error(errc::dimension_mismatch, "wedge index outside the ring");
            Monomial m = key.second.times(Monomial::variable(n, v));
            if (I.contains(m)) continue;
            out.put(key.first & ~(1u << v), m, (pos % 2 == 1) ? c : -c, f);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Homology engine: multigraded pieces of K_*(R) and their ker/im bases.

namespace {

template <class Ops>
class HomologyEngine {
public:
    using Elem = typename Ops::Elem;
    using Row = typename detail::GaussJordan<Ops>::Row;

    HomologyEngine(const MonomialIdeal& I, const FieldSpec& f, Ops ops)
        : I_(I), f_(f), ops_(ops), n_(I.ctx().var_count()) {}

    bool is_standard(const Multidegree& m) {
        auto it = std_cache_.find(m);
        if (it != std_cache_.end()) return it->second;
        bool std_m = !I_.contains(Monomial(m));
        std_cache_.emplace(m, std_m);
        return std_m;
    }

    // Basis of K_i(R) in multidegree mu: wedge masks T inside supp(mu) with
    // x^(mu - T) standard (at most one standard-monomial coefficient per T).
    const std::vector<WedgeMask>& basis(int i, const Multidegree& mu) {
        auto key = std::make_pair(i, mu);
        auto it = basis_cache_.find(key);
        if (it != basis_cache_.end()) return it->second;
        std::vector<int> supp;
        for (int v = 0; v < n_; ++v)
            if (mu[static_cast<size_t>(v)] >= 1) supp.push_back(v);
        std::vector<WedgeMask> out;
        if (i >= 0 && i <= static_cast<int>(supp.size())) {
            std::vector<int> idx(static_cast<size_t>(i));
            for (int k = 0; k < i; ++k) idx[static_cast<size_t>(k)] = k;
            for (;;) {
                WedgeMask m = 0;
                for (int k : idx) m |= (1u << supp[static_cast<size_t>(k)]);
                Multidegree rest = mu;
                for (int k : idx) rest[static_cast<size_t>(supp[static_cast<size_t>(k)])] -= 1;
                if (is_standard(rest)) out.push_back(m);
                if (i == 0) break;
                int k = i - 1;
                while (k >= 0 && idx[static_cast<size_t>(k)] ==
                                     static_cast<int>(supp.size()) - i + k)
                    --k;
                if (k < 0) break;
                idx[static_cast<size_t>(k)]++;
                for (int l = k + 1; l < i; ++l)
                    idx[static_cast<size_t>(l)] = idx[static_cast<size_t>(l - 1)] + 1;
            }
        }
        std::sort(out.begin(), out.end());
        return basis_cache_.emplace(std::move(key), std::move(out)).first->second;
    }

    // delta_i at mu as rows over basis(i-1, mu), columns over basis(i, mu).
    std::vector<Row> differential_rows(int i, const Multidegree& mu) {
        const auto& cols = basis(i, mu);
        const auto& rows = basis(i - 1, mu);
        std::unordered_map<WedgeMask, int> row_index;
        for (size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = static_cast<int>(r);
        std::vector<Row> out(rows.size());
        for (size_t c = 0; c < cols.size(); ++c) {
            int pos = 0;
            for (WedgeMask rest = cols[c]; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                ++pos;
                auto it = row_index.find(cols[c] & ~(1u << v));
                if (it == row_index.end()) continue;  // coefficient landed in I
                Elem val = ops_.from_int(pos % 2 == 1 ? 1 : -1);
                out[static_cast<size_t>(it->second)][static_cast<int>(c)] = val;
            }
        }
        return out;
    }

    KoszulElement element_from_coords(int i, const Multidegree& mu, const std::vector<Elem>& v) {
        const auto& cols = basis(i, mu);
        KoszulElement e;
        for (size_t c = 0; c < cols.size(); ++c) {
            if (ops_.is_zero(v[c])) continue;
            Multidegree rest = mu;
            for (int var = 0; var < n_; ++var)
                if ((cols[c] >> var) & 1u) rest[static_cast<size_t>(var)] -= 1;
            e = e.plus(KoszulElement::term(cols[c], Monomial(rest), ops_.to_rat(v[c]), f_), f_);
        }
        return e;
    }

    std::optional<Row> coords_of(const KoszulElement& z, int i, const Multidegree& mu) {
        const auto& cols = basis(i, mu);
        std::unordered_map<WedgeMask, int> col_index;
        for (size_t c = 0; c < cols.size(); ++c) col_index[cols[c]] = static_cast<int>(c);
        Row out;
        for (const auto& [key, c] : z.terms()) {
            auto it = col_index.find(key.first);
            if (it == col_index.end()) return std::nullopt;
            Elem e = ops_.from_rat(c);
            if (!ops_.is_zero(e)) out[it->second] = e;
        }
        return out;
    }

    // Cycle representatives completing the boundary space to the cycle space.
    std::vector<KoszulElement> homology_basis(int i, const Multidegree& mu) {
        const auto& cols = basis(i, mu);
        std::vector<KoszulElement> classes;
        if (cols.empty()) return classes;
        detail::GaussJordan<Ops> gj(ops_, static_cast<int>(cols.size()));
        for (auto& row : differential_rows(i, mu)) gj.add_row(std::move(row));
        gj.run();

        detail::SpanBuilder<Ops> image(ops_);
        {
            const auto& above = basis(i + 1, mu);
            auto rows_above = differential_rows(i + 1, mu);
            // rows_above maps basis(i+1) columns to basis(i) rows; collect the
            // image columns as sparse vectors over basis(i).
            std::vector<Row> cols_above(above.size());
            for (size_t r = 0; r < rows_above.size(); ++r)
                for (const auto& [c, v] : rows_above[r])
                    cols_above[static_cast<size_t>(c)][static_cast<int>(r)] = v;
            for (auto& col : cols_above) image.insert(std::move(col));
        }
        int boundary_rank = image.dim();
        for (int fcol : gj.free_cols()) {
            std::vector<Elem> v = gj.kernel_vector(fcol);
            Row sparse;
            for (size_t c = 0; c < v.size(); ++c)
                if (!ops_.is_zero(v[c])) sparse[static_cast<int>(c)] = v[c];
            if (image.insert(sparse)) classes.push_back(element_from_coords(i, mu, v));
        }
        int nullity = static_cast<int>(cols.size()) - gj.rank();
        if (static_cast<int>(classes.size()) != nullity - boundary_rank)
            throw Error(errc::internal_inconsistency, "homology dimension bookkeeping failed");
        return classes;
    }

    // Is z (given in coordinates at (i, mu)) a boundary?
    bool is_boundary(const Row& z_coords, int i, const Multidegree& mu) {
        const auto& cols_i = basis(i, mu);
        const auto& above = basis(i + 1, mu);
        auto rows_above = differential_rows(i + 1, mu);
        // Solve delta_{i+1} x = z: augment with -z, forbid the last column.
        int acols = static_cast<int>(above.size());
        detail::GaussJordan<Ops> gj(ops_, acols + 1);
        std::vector<Row> rows(cols_i.size());
        for (size_t r = 0; r < rows_above.size(); ++r) rows[r] = rows_above[r];
        for (const auto& [r, v] : z_coords) rows[static_cast<size_t>(r)][acols] = ops_.neg(v);
        for (auto& r : rows) gj.add_row(std::move(r));
        gj.run(acols);
        return !gj.has_unpivoted_nonzero_row();
    }

    const MonomialIdeal& ideal() const { return I_; }
    int vars() const { return n_; }

private:
    const MonomialIdeal& I_;
    FieldSpec f_;
    Ops ops_;
    int n_;
    std::unordered_map<Multidegree, bool, MultidegreeHash> std_cache_;
    std::map<std::pair<int, Multidegree>, std::vector<WedgeMask>> basis_cache_;
};

std::vector<Multidegree> lcm_lattice(const MonomialIdeal& I) {
    std::set<Multidegree> seen;
    seen.insert(Multidegree(static_cast<size_t>(I.ctx().var_count()), 0));
    for (const auto& g : I.gens()) {
        std::set<Multidegree> next = seen;
        for (const auto& s : seen) {
            Multidegree l = s;
            for (size_t v = 0; v < l.size(); ++v)
                l[v] = std::max(l[v], g.exponents()[v]);
            next.insert(std::move(l));
        }
        seen.swap(next);
    }
    return {seen.begin(), seen.end()};
}

void require_proper_nonzero(const MonomialIdeal& I) {
    if (I.is_unit()) throw Error(errc::unit_ideal, "the unit ideal is rejected here");
    if (I.is_zero()) throw Error(errc::zero_ideal, "the zero ideal is rejected here");
}

}  // namespace

void HomologyTable::add_class(HomologyClass c) { classes_.push_back(std::move(c)); }

Int HomologyTable::dim(int i) const {
    Int d = 0;
    for (const auto& c : classes_)
        if (c.hom_degree == i) ++d;
    return d;
}

std::map<int, Int> HomologyTable::dims() const {
    std::map<int, Int> out;
    for (int i = 1; i <= max_i_; ++i) out[i] = 0;
    for (const auto& c : classes_) out[c.hom_degree] += 1;
    return out;
}

HomologyTable homology_table(const MonomialIdeal& I, int max_i, const FieldSpec& f) {
    require_proper_nonzero(I);
    int n = I.ctx().var_count();
    bool clamped = max_i > n;
    int mi = std::min(max_i, n);
    HomologyTable table(mi, clamped);

    auto lattice = lcm_lattice(I);
    with_field(f, [&](auto ops) {
        HomologyEngine<decltype(ops)> engine(I, f, ops);
        struct Slot {
            int i;
            const Multidegree* mu;
            std::vector<KoszulElement> classes;
        };
        std::vector<Slot> slots;
        for (int i = 1; i <= mi; ++i)
            for (const auto& mu : lattice)
                if (total_degree(mu) >= i) slots.push_back({i, &mu, {}});
        // Pieces are independent; the table is merged in slot order below.
        parallel_for(slots.size(), [&](size_t a, size_t b) {
            HomologyEngine<decltype(ops)> local(I, f, ops);
            for (size_t s = a; s < b; ++s)
                slots[s].classes = local.homology_basis(slots[s].i, *slots[s].mu);
        });
        for (auto& slot : slots) {
            int index = 0;
            for (auto& cls : slot.classes)
                table.add_class({slot.i, *slot.mu, std::move(cls), index++});
        }
        return 0;
    });
    return table;
}

std::optional<HomologyClass> multiply_classes(const HomologyClass& a, const HomologyClass& b,
                                              const MonomialIdeal& I, const FieldSpec& f) {
    require_proper_nonzero(I);
    int n = I.ctx().var_count();
    if (a.hom_degree + b.hom_degree > n) return std::nullopt;  // K vanishes there
    KoszulElement prod = a.representative.wedge(b.representative, I, f);
    if (prod.is_zero()) return std::nullopt;
    Multidegree mu = prod.multidegree(n);
    int deg = a.hom_degree + b.hom_degree;
    bool boundary = with_field(f, [&](auto ops) {
        HomologyEngine<decltype(ops)> engine(I, f, ops);
        auto coords = engine.coords_of(prod, deg, mu);
        if (!coords)
            throw Error(errc::internal_inconsistency, "product has a non-standard coefficient");
        return engine.is_boundary(*coords, deg, mu);
    });
    if (boundary) return std::nullopt;
    return HomologyClass{deg, std::move(mu), std::move(prod), -1};
}

WeakGolodReport is_weakly_golod(const MonomialIdeal& I, const FieldSpec& f) {
    require_proper_nonzero(I);
    int n = I.ctx().var_count();
    HomologyTable table = homology_table(I, n, f);
    const auto& classes = table.classes();
    WeakGolodReport report;
    report.verdict = true;
    with_field(f, [&](auto ops) {
        HomologyEngine<decltype(ops)> engine(I, f, ops);
        for (size_t x = 0; x < classes.size() && report.verdict; ++x) {
            for (size_t y = x; y < classes.size() && report.verdict; ++y) {
                const auto& A = classes[x];
                const auto& B = classes[y];
                if (A.hom_degree + B.hom_degree > n) continue;
                KoszulElement prod = A.representative.wedge(B.representative, I, f);
                if (prod.is_zero()) continue;
                Multidegree mu = prod.multidegree(n);
                auto coords = engine.coords_of(prod, A.hom_degree + B.hom_degree, mu);
                if (!coords)
                    throw Error(errc::internal_inconsistency,
                                "product has a non-standard coefficient");
                if (!engine.is_boundary(*coords, A.hom_degree + B.hom_degree, mu)) {
                    report.verdict = false;
                    report.witness = std::make_pair(A, B);
                    report.witness_product =
                        HomologyClass{A.hom_degree + B.hom_degree, mu, prod, -1};
                }
            }
        }
        return 0;
    });
    return report;
}

// ---------------------------------------------------------------------------
// Cycle lifting through a minimal free resolution of S/I over S.

std::vector<Rat> lift_cycle(const KoszulElement& z, const FreeResolution& F,
                            const MonomialIdeal& I) {
    if (F.ctx() != I.ctx())
        throw Error(errc::context_mismatch, "resolution and ideal live in different rings");
    if (!F.is_minimal())
        throw Error(errc::domain, "lift_cycle needs a minimal resolution");
    if (z.is_zero()) throw Error(errc::malformed_element, "cannot lift the zero element");
    int n = I.ctx().var_count();
    int i = z.hom_degree();
    if (i > F.length())
        throw Error(errc::domain, "resolution is shorter than the cycle's homological degree");
    Multidegree mu = z.multidegree(n);

    return with_field(F.field(), [&](auto ops) {
        using Ops = decltype(ops);
        using Elem = typename Ops::Elem;
        // State: coefficient of (wedge mask T, generator j of F_t); the
        // implicit monomial is x^(mu - T - a_j).
        std::map<std::pair<WedgeMask, int>, Elem> state;
        for (const auto& [key, c] : z.terms()) {
            Elem e = ops.from_rat(c);
            if (!ops.is_zero(e)) state[{key.first, 0}] = e;
        }
        for (int t = 1; t <= i; ++t) {
            // Koszul differential over S (no reduction).
            std::map<std::pair<WedgeMask, int>, Elem> image;
            for (const auto& [key, c] : state) {
                int pos = 0;
                for (WedgeMask rest = key.first; rest;) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    ++pos;
                    auto k = std::make_pair(key.first & ~(1u << v), key.second);
                    auto [it, inserted] = image.try_emplace(k, ops.zero());
                    Elem add = (pos % 2 == 1) ? c : ops.neg(c);
                    it->second = ops.add(it->second, add);
                    if (ops.is_zero(it->second)) image.erase(it);
                }
            }
            // Solve (1 (x) phi_t) c_t = image, independently per wedge mask.
            const auto& src = F.module(t).gens;
            const auto& tgt = F.module(t - 1).gens;
            const auto& cols_phi = F.differential(t);
            std::map<std::pair<WedgeMask, int>, Elem> next;
            std::set<WedgeMask> masks;
            for (const auto& [key, c] : image) masks.insert(key.first);
            for (WedgeMask T : masks) {
                Multidegree nu = mu;
                for (int v = 0; v < n; ++v)
                    if ((T >> v) & 1u) nu[static_cast<size_t>(v)] -= 1;
                std::vector<int> cols, rows;
                for (size_t j = 0; j < src.size(); ++j)
                    if (dominates(nu, src[j])) cols.push_back(static_cast<int>(j));
                std::vector<int> row_of(tgt.size(), -1);
                for (size_t l = 0; l < tgt.size(); ++l)
                    if (dominates(nu, tgt[l])) {
                        row_of[l] = static_cast<int>(rows.size());
                        rows.push_back(static_cast<int>(l));
                    }
                int ncols = static_cast<int>(cols.size());
                detail::GaussJordan<Ops> gj(ops, ncols + 1);
                std::vector<typename detail::GaussJordan<Ops>::Row> mat(rows.size());
                for (int jl = 0; jl < ncols; ++jl) {
                    for (const auto& entry : cols_phi[static_cast<size_t>(cols[jl])]) {
                        Elem e = ops.from_rat(entry.coeff);
                        if (ops.is_zero(e)) continue;
                        int rl = row_of[static_cast<size_t>(entry.row)];
                        if (rl < 0)
                            throw Error(errc::internal_inconsistency,
                                        "resolution entry violates multidegrees");
                        mat[static_cast<size_t>(rl)][jl] = e;
                    }
                }
                for (const auto& [key, c] : image) {
                    if (key.first != T) continue;
                    int rl = row_of[static_cast<size_t>(key.second)];
                    if (rl < 0)
                        throw Error(errc::internal_inconsistency,
                                    "staircase image violates multidegrees");
                    mat[static_cast<size_t>(rl)][ncols] = ops.neg(c);
                }
                for (auto& r : mat) gj.add_row(std::move(r));
                gj.run(ncols);
                if (gj.has_unpivoted_nonzero_row())
                    throw Error(errc::internal_inconsistency,
                                "staircase step has no solution (non-cycle or non-resolution)");
                auto sol = gj.kernel_vector(ncols);
                for (int jl = 0; jl < ncols; ++jl)
                    if (!ops.is_zero(sol[static_cast<size_t>(jl)]))
                        next[{T, cols[static_cast<size_t>(jl)]}] = sol[static_cast<size_t>(jl)];
            }
            state.swap(next);
        }
        // Augmentation S -> k keeps exactly the coordinates at multidegree mu.
        std::vector<Rat> residue(static_cast<size_t>(F.module(i).rank()), Rat(0));
        for (const auto& [key, c] : state) {
            if (key.first != 0u)
                throw Error(errc::internal_inconsistency, "staircase left a wedge factor");
            if (F.module(i).gens[static_cast<size_t>(key.second)] == mu)
                residue[static_cast<size_t>(key.second)] = ops.to_rat(c);
        }
        return residue;
    });
}

}  // namespace golod
