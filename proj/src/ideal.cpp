#include "golod/ideal.hpp"

#include <algorithm>

#include "golod/errors.hpp"

namespace golod {

namespace {

// Remove duplicates and every monomial strictly divisible by another; sort
// descending lex so outputs are deterministic.
std::vector<Monomial> minimize_and_sort(int n, std::vector<Monomial> raw) {
    for (const auto& m : raw)
        if (m.size() != n)
            throw Error(errc::dimension_mismatch, "generator does not match the ring");
    std::sort(raw.begin(), raw.end(),
              [](const Monomial& a, const Monomial& b) { return Monomial::lex_less(b, a); });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Monomial> kept;
    for (size_t i = 0; i < raw.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < raw.size() && !redundant; ++j)
            if (j != i && raw[j].divides(raw[i])) redundant = true;
        // Equal monomials were deduplicated, so divisibility here is strict.
        if (!redundant) kept.push_back(raw[i]);
    }
    return kept;
}

void require_same_ctx(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.ctx() != J.ctx())
        throw Error(errc::context_mismatch, "ideals live in different rings");
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingContext ctx, std::vector<Monomial> raw_gens)
    : ctx_(std::move(ctx)), gens_(minimize_and_sort(ctx_.var_count(), std::move(raw_gens))) {}

MonomialIdeal MonomialIdeal::zero(RingContext ctx) { return MonomialIdeal(std::move(ctx), {}); }

MonomialIdeal MonomialIdeal::unit(RingContext ctx) {
    int n = ctx.var_count();
    return MonomialIdeal(std::move(ctx), {Monomial::unit(n)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.size() != ctx_.var_count())
        throw Error(errc::dimension_mismatch, "monomial does not match the ring");
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    require_same_ctx(*this, other);
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

Monomial MonomialIdeal::lcm_of_gens() const {
    if (is_zero()) throw Error(errc::zero_ideal, "lcm of the zero ideal is undefined");
    Monomial m = gens_[0];
    for (size_t i = 1; i < gens_.size(); ++i) m = m.lcm(gens_[i]);
    return m;
}

MonomialIdeal minimize_generators(const RingContext& ctx, std::vector<Monomial> raw) {
    return MonomialIdeal(ctx, std::move(raw));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ctx(I, J);
    std::vector<Monomial> raw;
    raw.reserve(I.gens().size() * J.gens().size());
    for (const auto& u : I.gens())
        for (const auto& v : J.gens()) raw.push_back(u.times(v));
    return MonomialIdeal(I.ctx(), std::move(raw));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ctx(I, J);
    if (J.is_zero()) throw Error(errc::undefined_colon, "colon by the zero ideal");
    bool first = true;
    MonomialIdeal result = MonomialIdeal::zero(I.ctx());
    for (const auto& v : J.gens()) {
        std::vector<Monomial> raw;
        raw.reserve(I.gens().size());
        for (const auto& u : I.gens()) raw.push_back(u.divided_by(u.gcd(v)));
        MonomialIdeal part(I.ctx(), std::move(raw));
        result = first ? part : intersection(result, part);
        first = false;
    }
    return result;
}

MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ctx(I, J);
    std::vector<Monomial> raw;
    raw.reserve(I.gens().size() * J.gens().size());
    for (const auto& u : I.gens())
        for (const auto& v : J.gens()) raw.push_back(u.lcm(v));
    return MonomialIdeal(I.ctx(), std::move(raw));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ctx(I, J);
    std::vector<Monomial> raw = I.gens();
    raw.insert(raw.end(), J.gens().begin(), J.gens().end());
    return MonomialIdeal(I.ctx(), std::move(raw));
}

MonomialIdeal power(const MonomialIdeal& I, int d) {
    if (d < 0) throw Error(errc::domain, "negative ideal power");
    if (d == 0) return MonomialIdeal::unit(I.ctx());  // by convention
    MonomialIdeal result = I;
    for (int k = 1; k < d; ++k) result = product(result, I);
    return result;
}

bool member(const Monomial& m, const MonomialIdeal& I) { return I.contains(m); }

MonomialIdeal derivative_ideal(const MonomialIdeal& I) {
    if (I.is_unit())
        throw Error(errc::unit_ideal, "derivative ideal of the unit ideal is not defined here");
    std::vector<Monomial> raw;
    for (const auto& u : I.gens()) {
        for (int i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            Multidegree e = u.exponents();
            e[static_cast<size_t>(i)] -= 1;
            raw.push_back(Monomial(std::move(e)));
        }
    }
    return MonomialIdeal(I.ctx(), std::move(raw));
}

MonomialIdeal divisible_part(const MonomialIdeal& I, const Monomial& m) {
    // Any monomial of I dividing m is a multiple of a generator dividing m,
    // so the generators are all that needs scanning.
    std::vector<Monomial> raw;
    for (const auto& g : I.gens())
        if (g.divides(m)) raw.push_back(g);
    return MonomialIdeal(I.ctx(), std::move(raw));
}

}  // namespace golod
