#pragma once

#include <string_view>

namespace linemg::detail {

/// Text of a catalog data file compiled into the library; empty if unknown.
std::string_view builtin_catalog_text(std::string_view name);

}  // namespace linemg::detail
