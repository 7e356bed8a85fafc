#include "paratensor/audit/corpus.hpp"

#include "paratensor/error.hpp"

namespace paratensor::audit {

namespace detail {
extern const BuiltinEntry kCorpus[];
extern const std::size_t kCorpusSize;
}  // namespace detail

std::span<const BuiltinEntry> builtin_corpus() { return {detail::kCorpus, detail::kCorpusSize}; }

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& e : builtin_corpus()) out.emplace_back(e.name);
    return out;
}

std::string_view builtin_text(std::string_view name) {
    for (const auto& e : builtin_corpus())
        if (e.name == name) return e.text;
    throw Error("unknown builtin manifest '" + std::string(name) + "'");
}

ManifoldManifest load_builtin(std::string_view name) {
    return parse_manifest(builtin_text(name), "builtin:" + std::string(name));
}

}  // namespace paratensor::audit
