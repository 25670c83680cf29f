#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "golod/ideal.hpp"

namespace golod {

/// Witness for a failed derivative-product check: u, v are generators, i, j
/// variable indices with x_i | u, x_j | v, and offending = uv/(x_i x_j) is a
/// monomial outside the required ideal. Always re-checkable by membership.
struct DerivativeProductWitness {
    Monomial u;
    int i;
    Monomial v;
    int j;
    Monomial offending;
};

/// Witness for a failed pair/tuple check: a generator of the derivative-square
/// ideal of ideals[which] missing from the corresponding colon.
struct ColonWitness {
    int which;
    Monomial offending;
};

struct GolodReport {
    bool verdict = false;
    std::optional<DerivativeProductWitness> product_witness;
    std::optional<ColonWitness> colon_witness;
};

/// Strongly Golod test: every uv/(x_i x_j) over minimal generators u, v and
/// variable divisors lies in I. With `modified`, only i != j is required
/// (only those products survive in a wedge).
GolodReport is_strongly_golod(const MonomialIdeal& I, bool modified = false);

/// Same products, but only those dividing lcm(gens(I)) are required to lie
/// in I.
GolodReport is_lcm_strongly_golod(const MonomialIdeal& I, bool modified = false);

/// I + derivative(I)^2: the smallest strongly Golod ideal containing I.
MonomialIdeal strongly_golod_closure(const MonomialIdeal& I);

GolodReport is_strongly_golod_pair(const MonomialIdeal& I, const MonomialIdeal& J);
GolodReport is_strongly_golod_tuple(const std::vector<MonomialIdeal>& ideals);

/// Replaces I by IJ:J until stationary; the result I' satisfies I'J = IJ and
/// I'J:J = I'. The iteration cap exists only as a guard rail.
MonomialIdeal stabilize_factor(const MonomialIdeal& I, const MonomialIdeal& J,
                               int iteration_cap = 32);

struct RatliffRushResult {
    MonomialIdeal ideal;
    std::optional<int> stabilized_at;  // empty: not stabilized within n_max
};

/// Chain I^{n+1}J : I^n for n = 0..n_max; stops at the first n with two equal
/// consecutive terms. Non-stabilization is reported, never truncated silently.
RatliffRushResult generalized_ratliff_rush(const MonomialIdeal& I, const MonomialIdeal& J,
                                           int n_max = 10);

/// A linear order on the minimal generators such that every coprime pair
/// u < v has a witness w != v, placed after u, dividing uv; or nothing.
std::optional<std::vector<Monomial>> strong_gcd_order(const MonomialIdeal& I);
bool is_valid_strong_gcd_order(const MonomialIdeal& I, const std::vector<Monomial>& order);

/// Standard polarization: exponent e of a variable becomes a product of e
/// distinct squarefree copies. Graded Betti numbers are preserved.
std::pair<RingContext, MonomialIdeal> polarize(const MonomialIdeal& I);

}  // namespace golod
