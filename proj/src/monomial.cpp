#include "golod/monomial.hpp"

#include <algorithm>

#include "golod/errors.hpp"

namespace golod {

Monomial::Monomial(Multidegree exponents) : e_(std::move(exponents)) {
    for (Expo x : e_)
        if (x < 0) throw Error(errc::domain, "negative exponent in monomial");
}

Monomial Monomial::unit(int n) { return Monomial(Multidegree(static_cast<size_t>(n), 0)); }

Monomial Monomial::variable(int n, int i) {
    Multidegree e(static_cast<size_t>(n), 0);
    e.at(static_cast<size_t>(i)) = 1;
    return Monomial(std::move(e));
}

int Monomial::degree() const { return total_degree(e_); }

bool Monomial::is_unit() const {
    return std::all_of(e_.begin(), e_.end(), [](Expo x) { return x == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(e_.begin(), e_.end(), [](Expo x) { return x <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
    if (size() != other.size()) throw Error(errc::dimension_mismatch, "monomial sizes differ");
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    if (size() != other.size()) throw Error(errc::dimension_mismatch, "monomial sizes differ");
    Multidegree r(e_);
    for (size_t i = 0; i < r.size(); ++i) r[i] += other.e_[i];
    return Monomial(std::move(r));
}

Monomial Monomial::divided_by(const Monomial& other) const {
    if (!other.divides(*this))
        throw Error(errc::domain, "inexact monomial division");
    Multidegree r(e_);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= other.e_[i];
    return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& other) const {
    if (size() != other.size()) throw Error(errc::dimension_mismatch, "monomial sizes differ");
    Multidegree r(e_);
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], other.e_[i]);
    return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& other) const {
    if (size() != other.size()) throw Error(errc::dimension_mismatch, "monomial sizes differ");
    Multidegree r(e_);
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], other.e_[i]);
    return Monomial(std::move(r));
}

bool lex_less(const Multidegree& a, const Multidegree& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool Monomial::lex_less(const Monomial& a, const Monomial& b) {
    return golod::lex_less(a.e_, b.e_);
}

std::string Monomial::str(const RingContext& ctx) const {
    if (is_unit()) return "1";
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (e_[static_cast<size_t>(i)] == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.name(i);
        if (e_[static_cast<size_t>(i)] > 1) out += "^" + std::to_string(e_[static_cast<size_t>(i)]);
    }
    return out;
}

}  // namespace golod
