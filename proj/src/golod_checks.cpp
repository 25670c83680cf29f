#include "golod/golod_checks.hpp"

#include <algorithm>
#include <set>

#include "golod/errors.hpp"

namespace golod {

namespace {

void require_proper_nonzero(const MonomialIdeal& I) {
    if (I.is_unit()) throw Error(errc::unit_ideal, "the unit ideal is rejected here");
    if (I.is_zero()) throw Error(errc::zero_ideal, "the zero ideal is rejected here");
}

// Shared scan for the strongly Golod family. `restrict_to` (when present)
// skips products not dividing it; `modified` skips i == j.
GolodReport derivative_product_scan(const MonomialIdeal& I, bool modified,
                                    const std::optional<Monomial>& restrict_to) {
    GolodReport report;
    report.verdict = true;
    const auto& gens = I.gens();
    int n = I.ctx().var_count();
    for (const auto& u : gens) {
        for (int i = 0; i < n && report.verdict; ++i) {
            if (u[i] == 0) continue;
            for (const auto& v : gens) {
                if (!report.verdict) break;
                for (int j = 0; j < n; ++j) {
                    if (v[j] == 0) continue;
                    if (modified && i == j) continue;
                    Multidegree e = u.exponents();
                    for (int w = 0; w < n; ++w) e[static_cast<size_t>(w)] += v[w];
                    e[static_cast<size_t>(i)] -= 1;
                    e[static_cast<size_t>(j)] -= 1;
                    Monomial prod(std::move(e));
                    if (restrict_to && !prod.divides(*restrict_to)) continue;
                    if (!I.contains(prod)) {
                        report.verdict = false;
                        report.product_witness = DerivativeProductWitness{u, i, v, j, prod};
                        break;
                    }
                }
            }
        }
        if (!report.verdict) break;
    }
    return report;
}

}  // namespace

GolodReport is_strongly_golod(const MonomialIdeal& I, bool modified) {
    require_proper_nonzero(I);
    return derivative_product_scan(I, modified, std::nullopt);
}

GolodReport is_lcm_strongly_golod(const MonomialIdeal& I, bool modified) {
    require_proper_nonzero(I);
    return derivative_product_scan(I, modified, I.lcm_of_gens());
}

MonomialIdeal strongly_golod_closure(const MonomialIdeal& I) {
    // The unit ideal is its own closure, which keeps closure idempotent when
    // derivative squares climb out of every proper ideal (e.g. (x,y)).
    if (I.is_unit() || I.is_zero()) return I;
    MonomialIdeal d = derivative_ideal(I);
    return sum(I, product(d, d));
}

GolodReport is_strongly_golod_pair(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_proper_nonzero(I);
    require_proper_nonzero(J);
    if (I.ctx() != J.ctx()) throw Error(errc::context_mismatch, "pair in different rings");
    GolodReport report;
    report.verdict = true;
    const MonomialIdeal* pair[2] = {&I, &J};
    for (int side = 0; side < 2 && report.verdict; ++side) {
        const MonomialIdeal& A = *pair[side];
        const MonomialIdeal& B = *pair[1 - side];
        MonomialIdeal dA = derivative_ideal(A);
        MonomialIdeal dA2 = product(dA, dA);
        MonomialIdeal target = colon(A, B);
        for (const auto& g : dA2.gens()) {
            if (!target.contains(g)) {
                report.verdict = false;
                report.colon_witness = ColonWitness{side, g};
                break;
            }
        }
    }
    return report;
}

GolodReport is_strongly_golod_tuple(const std::vector<MonomialIdeal>& ideals) {
    if (ideals.size() < 2)
        throw Error(errc::domain, "a strongly Golod tuple needs at least two ideals");
    for (const auto& I : ideals) {
        require_proper_nonzero(I);
        if (I.ctx() != ideals[0].ctx())
            throw Error(errc::context_mismatch, "tuple in different rings");
    }
    MonomialIdeal all = ideals[0];
    for (size_t k = 1; k < ideals.size(); ++k) all = product(all, ideals[k]);
    GolodReport report;
    report.verdict = true;
    for (size_t i = 0; i < ideals.size() && report.verdict; ++i) {
        MonomialIdeal rest = MonomialIdeal::unit(ideals[0].ctx());
        for (size_t j = 0; j < ideals.size(); ++j)
            if (j != i) rest = product(rest, ideals[j]);
        MonomialIdeal d = derivative_ideal(ideals[i]);
        MonomialIdeal d2 = product(d, d);
        MonomialIdeal target = colon(all, rest);
        for (const auto& g : d2.gens()) {
            if (!target.contains(g)) {
                report.verdict = false;
                report.colon_witness = ColonWitness{static_cast<int>(i), g};
                break;
            }
        }
    }
    return report;
}

MonomialIdeal stabilize_factor(const MonomialIdeal& I, const MonomialIdeal& J,
                               int iteration_cap) {
    require_proper_nonzero(I);
    require_proper_nonzero(J);
    if (I.ctx() != J.ctx()) throw Error(errc::context_mismatch, "ideals in different rings");
    MonomialIdeal cur = I;
    for (int it = 0; it < iteration_cap; ++it) {
        MonomialIdeal next = colon(product(cur, J), J);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    // Noetherian ascent guarantees termination; the cap is a guard rail.
    throw Error(errc::unstabilized, "IJ:J chain did not stabilize within the iteration cap");
}

RatliffRushResult generalized_ratliff_rush(const MonomialIdeal& I, const MonomialIdeal& J,
                                           int n_max) {
    require_proper_nonzero(I);
    require_proper_nonzero(J);
    if (I.ctx() != J.ctx()) throw Error(errc::context_mismatch, "ideals in different rings");
    if (n_max < 0) throw Error(errc::domain, "n_max must be non-negative");
    MonomialIdeal prev = colon(product(power(I, 1), J), MonomialIdeal::unit(I.ctx()));  // n = 0
    for (int nn = 0; nn < n_max; ++nn) {
        MonomialIdeal next = colon(product(power(I, nn + 2), J), power(I, nn + 1));
        if (next == prev) return {prev, nn};
        prev = std::move(next);
    }
    return {prev, std::nullopt};
}

bool is_valid_strong_gcd_order(const MonomialIdeal& I, const std::vector<Monomial>& order) {
    require_proper_nonzero(I);
    std::vector<Monomial> sorted = order;
    std::sort(sorted.begin(), sorted.end(),
              [](const Monomial& a, const Monomial& b) { return Monomial::lex_less(b, a); });
    if (sorted != I.gens()) return false;  // must be a permutation of the minimal generators
    size_t t = order.size();
    for (size_t a = 0; a < t; ++a) {
        for (size_t b = a + 1; b < t; ++b) {
            if (!order[a].coprime(order[b])) continue;
            Monomial uv = order[a].times(order[b]);
            bool found = false;
            for (size_t w = a + 1; w < t && !found; ++w)
                if (order[w] != order[b] && order[w].divides(uv)) found = true;
            if (!found) return false;
        }
    }
    return true;
}

namespace {

struct StrongGcdSearch {
    const std::vector<Monomial>& gens;
    std::vector<int> position;  // generator index -> position, -1 unplaced
    std::vector<int> order;     // positions -> generator index

    bool viable_after_placing(int v) {
        // Placing never invalidates earlier pairs; only the new pairs
        // (placed a, v) can run out of witnesses.
        int pv = position[static_cast<size_t>(v)];
        for (int pa = 0; pa < pv; ++pa) {
            int a = order[static_cast<size_t>(pa)];
            if (!gens[static_cast<size_t>(a)].coprime(gens[static_cast<size_t>(v)])) continue;
            Monomial uv = gens[static_cast<size_t>(a)].times(gens[static_cast<size_t>(v)]);
            bool witness = false;
            for (size_t w = 0; w < gens.size() && !witness; ++w) {
                if (static_cast<int>(w) == v) continue;
                if (!gens[w].divides(uv)) continue;
                int pw = position[w];
                if (pw < 0 || pw > pa) witness = true;  // unplaced counts as later
            }
            if (!witness) return false;
        }
        return true;
    }

    bool search(size_t depth) {
        if (depth == gens.size()) return true;
        for (size_t v = 0; v < gens.size(); ++v) {
            if (position[v] >= 0) continue;
            position[v] = static_cast<int>(depth);
            order[depth] = static_cast<int>(v);
            if (viable_after_placing(static_cast<int>(v)) && search(depth + 1)) return true;
            position[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Monomial>> strong_gcd_order(const MonomialIdeal& I) {
    require_proper_nonzero(I);
    const auto& gens = I.gens();  // canonical order drives the backtracking
    StrongGcdSearch s{gens, std::vector<int>(gens.size(), -1),
                      std::vector<int>(gens.size(), -1)};
    if (!s.search(0)) return std::nullopt;
    std::vector<Monomial> out;
    for (int idx : s.order) out.push_back(gens[static_cast<size_t>(idx)]);
    return out;
}

std::pair<RingContext, MonomialIdeal> polarize(const MonomialIdeal& I) {
    require_proper_nonzero(I);
    int n = I.ctx().var_count();
    std::vector<int> copies(static_cast<size_t>(n), 1);
    for (const auto& g : I.gens())
        for (int v = 0; v < n; ++v)
            copies[static_cast<size_t>(v)] = std::max(copies[static_cast<size_t>(v)], g[v]);

    std::set<std::string> taken(I.ctx().names().begin(), I.ctx().names().end());
    std::vector<std::string> names;
    std::vector<std::vector<int>> slot(static_cast<size_t>(n));  // variable -> its copy slots
    for (int v = 0; v < n; ++v) {
        slot[static_cast<size_t>(v)].push_back(static_cast<int>(names.size()));
        names.push_back(I.ctx().name(v));
        for (int c = 1; c < copies[static_cast<size_t>(v)]; ++c) {
            std::string cand = I.ctx().name(v) + "_" + std::to_string(c);
            while (taken.count(cand)) cand += "_";
            taken.insert(cand);
            slot[static_cast<size_t>(v)].push_back(static_cast<int>(names.size()));
            names.push_back(cand);
        }
    }
    RingContext out_ctx(names);
    int N = out_ctx.var_count();
    std::vector<Monomial> raw;
    for (const auto& g : I.gens()) {
        Multidegree e(static_cast<size_t>(N), 0);
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < g[v]; ++c)
                e[static_cast<size_t>(slot[static_cast<size_t>(v)][static_cast<size_t>(c)])] = 1;
        raw.push_back(Monomial(std::move(e)));
    }
    return {out_ctx, MonomialIdeal(out_ctx, std::move(raw))};
}

}  // namespace golod
