#include "golod/newton.hpp"

#include <algorithm>
#include <numeric>

#include "golod/errors.hpp"

namespace golod {

RationalPoint::RationalPoint(std::vector<Rat> coords) : c_(std::move(coords)) {
    for (const auto& x : c_)
        if (x < 0) throw Error(errc::domain, "rational point has a negative coordinate");
}

RationalPoint RationalPoint::scaled(const Monomial& m, const Rat& factor) {
    std::vector<Rat> c(static_cast<size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i) c[static_cast<size_t>(i)] = factor * m[i];
    return RationalPoint(std::move(c));
}

namespace {

void require_proper_nonzero(const MonomialIdeal& I) {
    if (I.is_unit()) throw Error(errc::unit_ideal, "the unit ideal is rejected here");
    if (I.is_zero()) throw Error(errc::zero_ideal, "the zero ideal is rejected here");
}

// Phase-1 simplex with Bland's rule on the feasibility system
//   sum_k lambda_k v_k + s = a,  sum_k lambda_k + z = 1,  lambda, s, z >= 0,
// minimizing the artificial z. Feasible iff min z = 0. The slacks give an
// immediate starting basis for the first n rows; z starts basic in the last.
bool simplex_feasible(const std::vector<Multidegree>& verts, const std::vector<Rat>& a) {
    int n = static_cast<int>(a.size());
    int t = static_cast<int>(verts.size());
    int rows = n + 1;
    int cols = t + n + 1;  // lambda_1..t, s_1..n, z
    // tableau[r] = row of the dictionary; column `cols` holds the rhs.
    std::vector<std::vector<Rat>> T(static_cast<size_t>(rows),
                                    std::vector<Rat>(static_cast<size_t>(cols) + 1, Rat(0)));
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < t; ++k) T[static_cast<size_t>(r)][static_cast<size_t>(k)] = verts[static_cast<size_t>(k)][static_cast<size_t>(r)];
        T[static_cast<size_t>(r)][static_cast<size_t>(t + r)] = 1;  // slack
        T[static_cast<size_t>(r)][static_cast<size_t>(cols)] = a[static_cast<size_t>(r)];
    }
    for (int k = 0; k < t; ++k) T[static_cast<size_t>(n)][static_cast<size_t>(k)] = 1;
    T[static_cast<size_t>(n)][static_cast<size_t>(t + n)] = 1;  // artificial z
    T[static_cast<size_t>(n)][static_cast<size_t>(cols)] = 1;

    std::vector<int> basis(static_cast<size_t>(rows));
    for (int r = 0; r < n; ++r) basis[static_cast<size_t>(r)] = t + r;
    basis[static_cast<size_t>(n)] = t + n;

    // Objective: minimize z. Reduced costs of the phase-1 objective equal the
    // z-row of the dictionary, so pivot on the basic row of z directly.
    auto pivot = [&](int pr, int pc) {
        Rat piv = T[static_cast<size_t>(pr)][static_cast<size_t>(pc)];
        for (auto& x : T[static_cast<size_t>(pr)]) x /= piv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr) continue;
            Rat f = T[static_cast<size_t>(r)][static_cast<size_t>(pc)];
            if (f == 0) continue;
            for (int c = 0; c <= cols; ++c)
                T[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * T[static_cast<size_t>(pr)][static_cast<size_t>(c)];
        }
        basis[static_cast<size_t>(pr)] = pc;
    };

    for (;;) {
        // Row currently holding the artificial variable; z left the basis or
        // its rhs is zero exactly when the system is feasible.
        int zrow = -1;
        for (int r = 0; r < rows; ++r)
            if (basis[static_cast<size_t>(r)] == t + n) zrow = r;
        if (zrow < 0) return true;
        if (T[static_cast<size_t>(zrow)][static_cast<size_t>(cols)] == 0) return true;

        // Bland: entering column = least index with a positive coefficient in
        // the z-row (decreasing z needs a positive entry there).
        int pc = -1;
        for (int c = 0; c < cols - 1 && pc < 0; ++c)
            if (T[static_cast<size_t>(zrow)][static_cast<size_t>(c)] > 0) pc = c;
        if (pc < 0) return false;  // z is minimal and positive: infeasible

        // Ratio test over rows with positive pivot column entry; Bland
        // tie-break on the least basic variable index.
        int pr = -1;
        Rat best;
        for (int r = 0; r < rows; ++r) {
            const Rat& coef = T[static_cast<size_t>(r)][static_cast<size_t>(pc)];
            if (coef <= 0) continue;
            Rat ratio = T[static_cast<size_t>(r)][static_cast<size_t>(cols)] / coef;
            if (pr < 0 || ratio < best ||
                (ratio == best &&
                 basis[static_cast<size_t>(r)] < basis[static_cast<size_t>(pr)])) {
                pr = r;
                best = ratio;
            }
        }
        if (pr < 0) return false;  // unbounded cannot happen in this system
        // Prefer kicking z out as soon as its row ties the ratio test.
        if (T[static_cast<size_t>(zrow)][static_cast<size_t>(pc)] > 0) {
            Rat zratio = T[static_cast<size_t>(zrow)][static_cast<size_t>(cols)] /
                         T[static_cast<size_t>(zrow)][static_cast<size_t>(pc)];
            if (zratio == best) pr = zrow;
        }
        pivot(pr, pc);
    }
}

}  // namespace

bool np_member(const MonomialIdeal& I, const RationalPoint& a) {
    require_proper_nonzero(I);
    if (a.size() != I.ctx().var_count())
        throw Error(errc::dimension_mismatch, "point does not match the ring");
    std::vector<Multidegree> verts;
    verts.reserve(I.gens().size());
    for (const auto& g : I.gens()) verts.push_back(g.exponents());
    return simplex_feasible(verts, a.coords());
}

namespace {

// Enumerates the search box in increasing total degree and collects minimal
// members; upward closure of membership prunes points already dominated.
MonomialIdeal scaled_region_lattice(const MonomialIdeal& I, const Rat& scale, long box_cap) {
    int n = I.ctx().var_count();
    Multidegree box(static_cast<size_t>(n), 0);
    for (const auto& g : I.gens())
        for (int v = 0; v < n; ++v) box[static_cast<size_t>(v)] = std::max(box[static_cast<size_t>(v)], g[v]);
    long volume = 1;
    for (int v = 0; v < n; ++v) {
        // ceil(M_v / scale): minimal generators cannot exceed this bound.
        Rat bound = Rat(box[static_cast<size_t>(v)]) / scale;
        Int num = numerator(bound), den = denominator(bound);
        Int q = num / den + (num % den == 0 ? 0 : 1);
        box[static_cast<size_t>(v)] = static_cast<int>(q);
        volume *= box[static_cast<size_t>(v)] + 1;
        if (volume > box_cap)
            throw Error(errc::size_cap, "search box exceeds --box-cap; raise the cap to proceed");
    }

    std::vector<Multidegree> points;
    points.push_back(Multidegree(static_cast<size_t>(n), 0));
    for (int v = 0; v < n; ++v) {
        std::vector<Multidegree> next;
        for (const auto& p : points)
            for (int e = 0; e <= box[static_cast<size_t>(v)]; ++e) {
                Multidegree q = p;
                q[static_cast<size_t>(v)] = e;
                next.push_back(std::move(q));
            }
        points.swap(next);
    }
    std::sort(points.begin(), points.end(), [](const Multidegree& x, const Multidegree& y) {
        int dx = total_degree(x), dy = total_degree(y);
        if (dx != dy) return dx < dy;
        return lex_less(x, y);
    });

    std::vector<Monomial> members;
    for (const auto& p : points) {
        bool dominated = false;
        for (const auto& m : members)
            if (dominates(p, m.exponents())) {
                dominated = true;
                break;
            }
        if (dominated) continue;  // membership is upward closed
        std::vector<Rat> scaled(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) scaled[static_cast<size_t>(v)] = scale * p[static_cast<size_t>(v)];
        if (np_member(I, RationalPoint(std::move(scaled)))) members.push_back(Monomial(p));
    }
    return MonomialIdeal(I.ctx(), std::move(members));
}

}  // namespace

MonomialIdeal rational_power(const MonomialIdeal& I, int p, int q, long box_cap) {
    require_proper_nonzero(I);
    if (p <= 0 || q <= 0) throw Error(errc::domain, "rational power needs positive p and q");
    // x^a lies in I^{p/q} iff (q/p) a lies in NP(I).
    return scaled_region_lattice(I, Rat(q) / Rat(p), box_cap);
}

MonomialIdeal integral_closure(const MonomialIdeal& I, long box_cap) {
    require_proper_nonzero(I);
    return rational_power(I, 1, 1, box_cap);
}

namespace {

// Pareto-minimal sums of exactly d generator exponent vectors, every sum
// clipped to <= bound (componentwise); represents x^bound in I^d tests.
bool sum_of_d_generators_below(const MonomialIdeal& I, int d, const Multidegree& bound) {
    size_t n = bound.size();
    std::vector<Multidegree> front{Multidegree(n, 0)};
    for (int step = 0; step < d; ++step) {
        std::vector<Multidegree> next;
        for (const auto& s : front) {
            for (const auto& g : I.gens()) {
                Multidegree cand = s;
                bool ok = true;
                for (size_t v = 0; v < n && ok; ++v) {
                    cand[v] += g[static_cast<int>(v)];
                    if (cand[v] > bound[v]) ok = false;
                }
                if (ok) next.push_back(std::move(cand));
            }
        }
        if (next.empty()) return false;
        std::sort(next.begin(), next.end(), [](const Multidegree& x, const Multidegree& y) {
            int dx = total_degree(x), dy = total_degree(y);
            if (dx != dy) return dx < dy;
            return lex_less(x, y);
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<Multidegree> pruned;
        for (const auto& c : next) {
            bool covered = false;
            for (const auto& kept : pruned)
                if (dominates(c, kept)) {
                    covered = true;
                    break;
                }
            if (!covered) pruned.push_back(c);
        }
        front.swap(pruned);
    }
    return true;
}

}  // namespace

OracleVerdict power_oracle_member(const MonomialIdeal& I, const Monomial& a, int p, int q,
                                  std::optional<int> r_max) {
    require_proper_nonzero(I);
    if (p <= 0 || q <= 0) throw Error(errc::domain, "power oracle needs positive p and q");
    if (a.size() != I.ctx().var_count())
        throw Error(errc::dimension_mismatch, "monomial does not match the ring");
    int rm;
    if (r_max) {
        rm = *r_max;
    } else {
        long l = 1;
        for (int k = 2; k <= std::max(p, q); ++k) l = std::lcm(l, static_cast<long>(k));
        rm = I.ctx().var_count() * static_cast<int>(l);
    }
    for (int r = 1; r <= rm; ++r) {
        Multidegree bound(a.exponents());
        for (auto& e : bound) e *= q * r;
        if (sum_of_d_generators_below(I, p * r, bound)) return OracleVerdict::member;
    }
    return OracleVerdict::non_member_up_to_bound;
}

}  // namespace golod
