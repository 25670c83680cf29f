#pragma once

#include <optional>
#include <vector>

#include "golod/field.hpp"
#include "golod/ideal.hpp"
#include "golod/numbers.hpp"

namespace golod {

/// Integer power series truncated at a fixed order N (N+1 coefficients).
/// Arithmetic never reads or writes past the declared truncation.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Int> coeffs);
    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(Int c, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Int& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
    const std::vector<Int>& coefficients() const { return c_; }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Int> c_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; the constant term must be +-1 so coefficients stay
/// integral.
TruncatedSeries invert(const TruncatedSeries& a);

/// (1+t)^n truncated at N.
TruncatedSeries binom_pow(int n, int N);

/// Serre's upper bound (1+t)^n / (1 - sum_{i>=1} dim H_i(R) t^{i+1}),
/// homology dimensions taken from the Koszul engine over `f`.
TruncatedSeries serre_bound(const MonomialIdeal& I, int N, const FieldSpec& f = FieldSpec::default_spec());

/// Same, fed precomputed homology dimensions h[i] = dim H_i (h[0] ignored).
TruncatedSeries serre_bound_from_dims(int n, const std::vector<Int>& h, int N);

/// Least index where the series differ, or nothing. Requires equal truncation
/// and validates p <= bound termwise; a violation is a hard error because the
/// bound must hold.
std::optional<int> first_deviation(const TruncatedSeries& p, const TruncatedSeries& bound);

}  // namespace golod
