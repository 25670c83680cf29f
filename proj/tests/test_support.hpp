#pragma once

// Shared helpers for the test suites: terse ideal construction, brute-force
// oracles that derive expected values from membership alone (independent of
// the library's algebraic shortcuts), and a seeded random-ideal generator.

#include <random>
#include <string>
#include <vector>

#include "golod/ideal.hpp"
#include "golod/ideal_io.hpp"

namespace testsup {

using namespace golod;

inline RingContext ring(const std::string& names_csv) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : names_csv + ",") {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    return RingContext(names);
}

/// ideal(ctx, "x^2*y, x*y^2") via the document parser.
inline MonomialIdeal ideal(const RingContext& ctx, const std::string& gens_csv) {
    std::string doc = "ring: ";
    for (int i = 0; i < ctx.var_count(); ++i) {
        if (i) doc += ", ";
        doc += ctx.name(i);
    }
    doc += "\ngens: " + gens_csv + "\n";
    return parse_ideal(doc).ideals.at(0);
}

inline Monomial mono(const RingContext& ctx, const std::string& text) {
    return ideal(ctx, text).gens().at(0);
}

/// All monomials of total degree <= max_deg, ascending degree then lex.
inline std::vector<Monomial> box_monomials(const RingContext& ctx, int max_deg) {
    std::vector<Multidegree> all;
    Multidegree cur(static_cast<size_t>(ctx.var_count()), 0);
    struct Rec {
        int n, cap;
        std::vector<Multidegree>* out;
        void go(Multidegree& c, int var, int used) {
            if (var == n) {
                out->push_back(c);
                return;
            }
            for (int e = 0; e + used <= cap; ++e) {
                c[static_cast<size_t>(var)] = e;
                go(c, var + 1, used + e);
            }
            c[static_cast<size_t>(var)] = 0;
        }
    } rec{ctx.var_count(), max_deg, &all};
    rec.go(cur, 0, 0);
    std::sort(all.begin(), all.end(), [](const Multidegree& a, const Multidegree& b) {
        if (total_degree(a) != total_degree(b)) return total_degree(a) < total_degree(b);
        return lex_less(a, b);
    });
    std::vector<Monomial> out;
    for (auto& e : all) out.push_back(Monomial(e));
    return out;
}

/// Minimal generators of { m : predicate(m) } among monomials of degree
/// <= max_deg, assuming the set is upward closed. Independent oracle for
/// colon/intersection/closure-style operations.
template <class Pred>
std::vector<Monomial> minimal_generators_by(const RingContext& ctx, int max_deg, Pred predicate) {
    std::vector<Monomial> mins;
    for (const auto& m : box_monomials(ctx, max_deg)) {
        bool covered = false;
        for (const auto& g : mins)
            if (g.divides(m)) {
                covered = true;
                break;
            }
        if (!covered && predicate(m)) mins.push_back(m);
    }
    return mins;
}

struct RandomIdeals {
    std::mt19937_64 rng;

    explicit RandomIdeals(uint64_t seed) : rng(seed) {}

    int pick(int lo, int hi) {
        return static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1)) + lo;
    }

    /// Proper nonzero monomial ideal: n in [1, max_n] variables, up to
    /// max_gens generators, exponents <= max_exp, every generator nonunit.
    MonomialIdeal next(int max_n = 4, int max_gens = 5, int max_exp = 3, int min_gen_deg = 1) {
        static const char* names[] = {"x", "y", "z", "w", "v", "u"};
        int n = pick(1, max_n);
        RingContext ctx(std::vector<std::string>(names, names + n));
        int t = pick(1, max_gens);
        std::vector<Monomial> gens;
        while (static_cast<int>(gens.size()) < t) {
            Multidegree e(static_cast<size_t>(n), 0);
            for (int v = 0; v < n; ++v) e[static_cast<size_t>(v)] = pick(0, max_exp);
            if (total_degree(e) < min_gen_deg) continue;
            gens.push_back(Monomial(std::move(e)));
        }
        return MonomialIdeal(ctx, std::move(gens));
    }
};

}  // namespace testsup
