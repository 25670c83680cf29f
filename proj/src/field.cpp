#include "golod/field.hpp"

namespace golod {

namespace {
bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
}  // namespace

FieldSpec FieldSpec::prime(int64_t p) {
    if (!is_prime(p) || p >= (int64_t(1) << 31))
        throw Error(errc::bad_field, "characteristic must be 0 or a prime below 2^31");
    return FieldSpec(p);
}

FpOps::Elem FpOps::inv(Elem a) const {
    if (a == 0) throw Error(errc::domain, "division by zero in F_p");
    // extended Euclid
    int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return t < 0 ? t + p : t;
}

FpOps::Elem FpOps::from_rat(const Rat& v) const {
    Int num = numerator(v) % p;
    Int den = denominator(v) % p;
    int64_t n = static_cast<int64_t>(num);
    int64_t d = static_cast<int64_t>(den);
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0)
        throw Error(errc::bad_field, "rational entry has denominator divisible by the field characteristic");
    return mul(n, inv(d));
}

}  // namespace golod
