#pragma once

#include <optional>
#include <string_view>

namespace ludoscene::detail {

// Defined in the build-generated corpus_data.cpp.
std::optional<std::string_view> embedded_fixture(std::string_view name);

}  // namespace ludoscene::detail
