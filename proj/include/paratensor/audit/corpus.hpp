#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paratensor/audit/manifest.hpp"

namespace paratensor::audit {

struct BuiltinEntry {
    std::string_view name;
    std::string_view text;
};

/// Manifests compiled into the library, in a fixed order.
std::span<const BuiltinEntry> builtin_corpus();
std::vector<std::string> builtin_names();
/// Throws Error for an unknown name.
std::string_view builtin_text(std::string_view name);
ManifoldManifest load_builtin(std::string_view name);

}  // namespace paratensor::audit
