#pragma once

#include <vector>

#include "golod/monomial.hpp"
#include "golod/ring.hpp"

namespace golod {

/// A monomial ideal, held by its minimal (divisibility-antichain) generating
/// set, canonically sorted in descending lex order. The zero ideal has no
/// generators; the unit ideal is generated by the unit monomial.
class MonomialIdeal {
public:
    /// Minimizes and sorts; this is `minimize_generators`.
    MonomialIdeal(RingContext ctx, std::vector<Monomial> raw_gens);

    static MonomialIdeal zero(RingContext ctx);
    static MonomialIdeal unit(RingContext ctx);

    const RingContext& ctx() const { return ctx_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    int gen_count() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool is_proper() const { return !is_unit(); }

    /// Membership: some generator divides m.
    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const;
    Monomial lcm_of_gens() const;  // requires a nonzero ideal

    bool operator==(const MonomialIdeal& other) const {
        return ctx_ == other.ctx_ && gens_ == other.gens_;
    }
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
    RingContext ctx_;
    std::vector<Monomial> gens_;
};

MonomialIdeal minimize_generators(const RingContext& ctx, std::vector<Monomial> raw);

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, int d);
bool member(const Monomial& m, const MonomialIdeal& I);

/// Ideal generated by all partial derivatives of generators (combinatorial:
/// exponent decrement, coefficients ignored). Zero ideal maps to zero.
MonomialIdeal derivative_ideal(const MonomialIdeal& I);

/// I_m: the part of I generated by its monomials dividing m.
MonomialIdeal divisible_part(const MonomialIdeal& I, const Monomial& m);

}  // namespace golod
