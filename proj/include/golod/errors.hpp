#pragma once

#include <stdexcept>
#include <string>

namespace golod {

/// Library-wide exception. `code()` is a stable machine-readable string
/// (the CLI prints it verbatim and exits 2).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

namespace errc {
// Error codes used across the library.
inline constexpr const char* dimension_mismatch = "dimension-mismatch";
inline constexpr const char* context_mismatch = "context-mismatch";
inline constexpr const char* undefined_colon = "undefined-colon";
inline constexpr const char* unit_ideal = "unit-ideal";
inline constexpr const char* zero_ideal = "zero-ideal";
inline constexpr const char* domain = "domain-error";
inline constexpr const char* size_cap = "size-cap";
inline constexpr const char* bad_field = "bad-field";
inline constexpr const char* malformed_element = "malformed-element";
inline constexpr const char* internal_inconsistency = "internal-inconsistency";
inline constexpr const char* invariant_violation = "invariant-violation";
inline constexpr const char* unstabilized = "unstabilized";
inline constexpr const char* parse = "parse-error";
inline constexpr const char* usage = "usage-error";
}  // namespace errc

}  // namespace golod
