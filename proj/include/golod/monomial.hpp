#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "golod/ring.hpp"

namespace golod {

using Expo = int;
using Multidegree = std::vector<Expo>;

/// A monomial as its exponent vector. The unit monomial is the zero vector.
class Monomial {
public:
    explicit Monomial(Multidegree exponents);
    static Monomial unit(int n);
    static Monomial variable(int n, int i);

    int size() const { return static_cast<int>(e_.size()); }
    Expo operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    const Multidegree& exponents() const { return e_; }
    int degree() const;
    bool is_unit() const;
    bool is_squarefree() const;

    bool divides(const Monomial& other) const;
    Monomial times(const Monomial& other) const;
    /// Exact division; throws if `other` does not divide *this.
    Monomial divided_by(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;
    bool coprime(const Monomial& other) const { return gcd(other).is_unit(); }

    /// Lexicographic comparison, first variable most significant.
    static bool lex_less(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return e_ == other.e_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }
    bool operator<(const Monomial& other) const { return lex_less(*this, other); }

    std::string str(const RingContext& ctx) const;

private:
    Multidegree e_;
};

struct MultidegreeHash {
    size_t operator()(const Multidegree& v) const {
        size_t h = v.size();
        for (Expo x : v) h = h * 1000003u + static_cast<size_t>(x) + 0x9e3779b9u;
        return h;
    }
};

inline int total_degree(const Multidegree& v) {
    int d = 0;
    for (Expo x : v) d += x;
    return d;
}

/// Componentwise <=.
inline bool dominates(const Multidegree& big, const Multidegree& small) {
    for (size_t i = 0; i < big.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

bool lex_less(const Multidegree& a, const Multidegree& b);

}  // namespace golod
