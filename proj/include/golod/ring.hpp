#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace golod {

/// The ambient polynomial ring k[x_1,...,x_n]: just the variable symbols.
/// The coefficient field is chosen per computation (FieldSpec), not here.
class RingContext {
public:
    /// Names must be distinct, nonempty identifiers ([A-Za-z_][A-Za-z0-9_]*).
    explicit RingContext(std::vector<std::string> names);

    int var_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(std::string_view name) const;

    bool operator==(const RingContext& other) const { return names_ == other.names_; }
    bool operator!=(const RingContext& other) const { return !(*this == other); }

    static bool is_identifier(std::string_view s);

private:
    std::vector<std::string> names_;
};

}  // namespace golod
