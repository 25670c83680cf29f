#include "golod/ring.hpp"

#include <cctype>
#include <set>

#include "golod/errors.hpp"

namespace golod {

bool RingContext::is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s.substr(1))
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw Error(errc::domain, "a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!is_identifier(n))
            throw Error(errc::domain, "invalid variable name '" + n + "'");
        if (!seen.insert(n).second)
            throw Error(errc::domain, "duplicate variable name '" + n + "'");
    }
}

std::optional<int> RingContext::index_of(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

}  // namespace golod
