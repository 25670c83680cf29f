#pragma once

#include <optional>
#include <vector>

#include "golod/ideal.hpp"
#include "golod/numbers.hpp"

namespace golod {

/// A point with exact rational coordinates, all >= 0. No floating point.
class RationalPoint {
public:
    explicit RationalPoint(std::vector<Rat> coords);
    static RationalPoint scaled(const Monomial& m, const Rat& factor);

    int size() const { return static_cast<int>(c_.size()); }
    const Rat& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
    const std::vector<Rat>& coords() const { return c_; }

private:
    std::vector<Rat> c_;
};

/// Membership of `a` in NP(I) = conv(generator exponents) + R_{>=0}^n,
/// decided by exact rational phase-1 simplex with Bland's rule.
bool np_member(const MonomialIdeal& I, const RationalPoint& a);

/// All lattice points of NP(I), by minimal generators. Equals
/// rational_power(I, 1, 1).
MonomialIdeal integral_closure(const MonomialIdeal& I, long box_cap = 2000000);

/// I^{p/q}: monomials whose exponent vector lands in (p/q) NP(I). The search
/// box a_i <= ceil((p/q) M_i) is exhaustive for minimal generators.
MonomialIdeal rational_power(const MonomialIdeal& I, int p, int q, long box_cap = 2000000);

enum class OracleVerdict { member, non_member_up_to_bound };

/// Brute-force oracle: (x^a)^{qr} in I^{pr} for some r <= r_max, decided by
/// integer sums of generator vectors (no linear programming anywhere). The
/// default r_max is n * lcm(1..max(p,q)).
OracleVerdict power_oracle_member(const MonomialIdeal& I, const Monomial& a, int p, int q,
                                  std::optional<int> r_max = std::nullopt);

}  // namespace golod
