#pragma once

#include "modann/error.hpp"
#include "modann/module.hpp"
#include "modann/ring.hpp"

#include <string>
#include <string_view>

namespace modann {

/// Parse error carrying the 0-based offset of the offending character.
class SpecSyntaxError : public InvalidInput {
public:
    SpecSyntaxError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// `Z` or `Z/<n>` with n >= 2. Whitespace is ignored.
Ring parseRingSpec(std::string_view text);

/// `term ('+' term)*` with term `C<n>` (n >= 2) or `F<k>` (k >= 1, over Z
/// only, not mixed with C terms). Whitespace is ignored.
Module parseModuleSpec(std::string_view text, const Ring& ring);

/// Comma-separated integers, optionally wrapped in parentheses.
Element parseElement(std::string_view text);

} // namespace modann
