#pragma once

#include <map>
#include <string>
#include <vector>

#include "golod/ideal.hpp"

namespace golod {

/// Parsed ideal document. Grammar (whitespace-insensitive, utf-8):
///   ring: x, y, z
///   gens: x^2*y, x*y^2, z^2
///   name: some-label            (optional metadata)
/// `gens:` may repeat; each line is one ideal over the shared ring (pair and
/// tuple commands consume them in order). Generators that reduce to the unit
/// monomial are rejected.
struct IdealDocument {
    RingContext ctx;
    std::vector<MonomialIdeal> ideals;
    std::map<std::string, std::string> metadata;

    const MonomialIdeal& single() const;  // exactly one ideal or usage error
};

/// Parse errors carry 1-based line/column in the message.
IdealDocument parse_ideal(const std::string& text);

/// Canonical document text; parse(serialize(doc)) == doc.
std::string serialize_ideal(const IdealDocument& doc);

std::string monomial_str(const RingContext& ctx, const Monomial& m);

}  // namespace golod
