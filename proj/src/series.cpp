#include "golod/series.hpp"

#include "golod/errors.hpp"
#include "golod/koszul.hpp"

namespace golod {

TruncatedSeries::TruncatedSeries(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error(errc::domain, "a truncated series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::zero(int order) {
    return TruncatedSeries(std::vector<Int>(static_cast<size_t>(order) + 1, Int(0)));
}

TruncatedSeries TruncatedSeries::constant(Int c, int order) {
    std::vector<Int> v(static_cast<size_t>(order) + 1, Int(0));
    v[0] = std::move(c);
    return TruncatedSeries(std::move(v));
}

namespace {
void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw Error(errc::domain, "series have different truncation orders");
}
}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Int> c(a.coefficients());
    for (int i = 0; i <= b.order(); ++i) c[static_cast<size_t>(i)] += b[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Int> c(a.coefficients());
    for (int i = 0; i <= b.order(); ++i) c[static_cast<size_t>(i)] -= b[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    int N = a.order();
    std::vector<Int> c(static_cast<size_t>(N) + 1, Int(0));
    for (int i = 0; i <= N; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) c[static_cast<size_t>(i + j)] += a[i] * b[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries invert(const TruncatedSeries& a) {
    if (a[0] != 1 && a[0] != -1)
        throw Error(errc::domain, "series inverse needs constant term +-1");
    int N = a.order();
    std::vector<Int> b(static_cast<size_t>(N) + 1, Int(0));
    b[0] = a[0];  // 1/(+-1) = +-1
    for (int k = 1; k <= N; ++k) {
        Int s = 0;
        for (int j = 1; j <= k; ++j) s += a[j] * b[static_cast<size_t>(k - j)];
        b[static_cast<size_t>(k)] = -a[0] * s;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries binom_pow(int n, int N) {
    if (n < 0 || N < 0) throw Error(errc::domain, "binom_pow needs non-negative arguments");
    std::vector<Int> c(static_cast<size_t>(N) + 1, Int(0));
    Int v = 1;
    for (int k = 0; k <= N; ++k) {
        if (k <= n) c[static_cast<size_t>(k)] = v;
        if (k < n) v = v * (n - k) / (k + 1);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries serre_bound_from_dims(int n, const std::vector<Int>& h, int N) {
    std::vector<Int> den(static_cast<size_t>(N) + 1, Int(0));
    den[0] = 1;
    for (size_t i = 1; i < h.size(); ++i) {
        size_t k = i + 1;  // dim H_i contributes -h_i t^{i+1}
        if (k <= static_cast<size_t>(N)) den[k] -= h[i];
    }
    return mul(binom_pow(n, N), invert(TruncatedSeries(std::move(den))));
}

TruncatedSeries serre_bound(const MonomialIdeal& I, int N, const FieldSpec& f) {
    if (!I.is_proper()) throw Error(errc::unit_ideal, "Serre bound needs a proper ideal");
    int n = I.ctx().var_count();
    auto table = homology_table(I, n, f);
    std::vector<Int> h(static_cast<size_t>(n) + 1, Int(0));
    for (int i = 1; i <= n; ++i) h[static_cast<size_t>(i)] = table.dim(i);
    return serre_bound_from_dims(n, h, N);
}

std::optional<int> first_deviation(const TruncatedSeries& p, const TruncatedSeries& bound) {
    require_same_order(p, bound);
    std::optional<int> dev;
    for (int i = 0; i <= p.order(); ++i) {
        if (p[i] > bound[i])
            throw Error(errc::invariant_violation,
                        "series exceeds the Serre bound at index " + std::to_string(i));
        if (!dev && p[i] != bound[i]) dev = i;
    }
    return dev;
}

}  // namespace golod
