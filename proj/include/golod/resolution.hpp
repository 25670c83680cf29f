#pragma once

#include <map>
#include <optional>
#include <vector>

#include "golod/field.hpp"
#include "golod/ideal.hpp"
#include "golod/series.hpp"

namespace golod {

/// Free module with one multidegree per generator.
struct GradedFreeModule {
    std::vector<Multidegree> gens;

    int rank() const { return static_cast<int>(gens.size()); }
    int gen_degree(int j) const { return total_degree(gens.at(static_cast<size_t>(j))); }
};

/// A complex of graded free S-modules F_len -> ... -> F_1 -> F_0 with
/// multihomogeneous differentials. An entry at (row, col) is coeff * x^m with
/// m = multidegree(source generator) - multidegree(target generator), so only
/// the coefficient is stored; entry_monomial() recovers m. A unit entry is one
/// with m = 0; a resolution is minimal when it has none.
class FreeResolution {
public:
    struct Entry {
        int row;
        Rat coeff;
    };
    using Column = std::vector<Entry>;

    FreeResolution(RingContext ctx, FieldSpec field, std::vector<GradedFreeModule> modules,
                   std::vector<std::vector<Column>> differentials);

    const RingContext& ctx() const { return ctx_; }
    const FieldSpec& field() const { return field_; }
    int length() const { return static_cast<int>(modules_.size()) - 1; }
    const GradedFreeModule& module(int i) const { return modules_.at(static_cast<size_t>(i)); }
    /// Columns of the differential F_i -> F_{i-1}, i in 1..length().
    const std::vector<Column>& differential(int i) const {
        return diffs_.at(static_cast<size_t>(i - 1));
    }
    Monomial entry_monomial(int i, int row, int col) const;
    bool is_minimal() const;

private:
    RingContext ctx_;
    FieldSpec field_;
    std::vector<GradedFreeModule> modules_;
    std::vector<std::vector<Column>> diffs_;  // diffs_[i-1] : F_i -> F_{i-1}
};

/// The Taylor complex of I: rank C(t,i) in homological degree i, generators at
/// lcm multidegrees. Refuses more than `gen_cap` generators (2^t blow-up).
FreeResolution taylor_resolution(const MonomialIdeal& I, int gen_cap = 20,
                                 const FieldSpec& f = FieldSpec::default_spec());

/// Cancels unit entries (Gauss pivots) until none remain. The output is a
/// homotopy-equivalent minimal resolution; its ranks are the Betti numbers.
FreeResolution minimize_resolution(const FreeResolution& F);

class BettiTable {
public:
    void add(int i, int total_degree, Int count = Int(1));
    Int total(int i) const;
    Int graded(int i, int total_degree) const;
    int max_index() const;
    const std::map<std::pair<int, int>, Int>& entries() const { return graded_; }

private:
    std::map<std::pair<int, int>, Int> graded_;
};

BettiTable betti_over_S(const MonomialIdeal& I, const FieldSpec& f = FieldSpec::default_spec());

/// Minimal graded free resolution of k over R = S/I, built degreewise up to
/// internal degree max_deg. A reported beta_i is certified only if every
/// generator found in step i has degree <= max_deg - 1 and degree max_deg
/// contributed none (and step i-1 was certified).
struct KResolveResult {
    BettiTable table;
    std::vector<bool> certified;  // indexed 0..max_h
    int max_deg_used = 0;
    bool artinian = false;

    bool certified_through(int i) const;
};

/// max_deg may be omitted only when R is Artinian; the default is then
/// max_h * (s + 1) with s the top nonzero degree of R.
KResolveResult resolve_k_over_R(const MonomialIdeal& I, int max_h,
                                std::optional<int> max_deg = std::nullopt,
                                const FieldSpec& f = FieldSpec::default_spec());

struct PoincareResult {
    TruncatedSeries series;
    int certified_through = -1;  // largest i with a certified coefficient
    bool fully_certified() const { return certified_through >= series.order(); }
};

PoincareResult poincare_truncation(const MonomialIdeal& I, int N,
                                   std::optional<int> max_deg = std::nullopt,
                                   const FieldSpec& f = FieldSpec::default_spec());

}  // namespace golod
