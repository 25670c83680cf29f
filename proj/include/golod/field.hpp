#pragma once

#include <cstdint>

#include "golod/errors.hpp"
#include "golod/numbers.hpp"

namespace golod {

/// Coefficient field for all elimination work: exact rationals (characteristic
/// 0) or a prime field F_p. Default is F_32003; 32009 is the documented
/// second-prime cross-check, characteristic 0 the certification run.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime(int64_t p);
    static FieldSpec default_spec() { return prime(32003); }

    int64_t characteristic() const { return p_; }
    bool is_prime_field() const { return p_ != 0; }

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

private:
    explicit FieldSpec(int64_t p) : p_(p) {}
    int64_t p_;
};

/// Arithmetic in F_p with canonical representatives in [0, p).
struct FpOps {
    int64_t p;
    using Elem = int64_t;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const {
        Elem c = a + b;
        return c >= p ? c - p : c;
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem from_int(int64_t v) const {
        Elem r = v % p;
        return r < 0 ? r + p : r;
    }
    Elem from_rat(const Rat& r) const;
    Rat to_rat(Elem a) const { return Rat(a); }
};

/// Arithmetic in Q.
struct QQOps {
    using Elem = Rat;

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw Error(errc::domain, "division by zero");
        return Rat(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem from_int(int64_t v) const { return Rat(v); }
    Elem from_rat(const Rat& r) const { return r; }
    Rat to_rat(const Elem& a) const { return a; }
};

/// Runs `fn` with the field-ops object matching `f`.
template <class Fn>
auto with_field(const FieldSpec& f, Fn&& fn) {
    if (f.is_prime_field()) return fn(FpOps{f.characteristic()});
    return fn(QQOps{});
}

}  // namespace golod
