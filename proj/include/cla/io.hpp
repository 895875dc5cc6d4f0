#pragma once

#include <string>

#include <json.hpp>

#include "cla/classify.hpp"

namespace cla::io {

using nlohmann::json;

/// "Q", "F_p", a bare prime, or {"p": prime}. Characteristic 2 needs the override.
Field field_from_json(const json& j, bool allow_char_two = false);
json field_to_json(const Field& f);

/// {"dim": n, "field": ..., "label": ..., "bracket1": [[i, j, [[k, "c"], ...]], ...], "bracket2": [...]}
/// with 1-based indices; coefficients are strings ("3/4") or integers.
CompatibleLieAlgebra algebra_from_json(const json& j, bool allow_char_two = false);
json algebra_to_json(const CompatibleLieAlgebra& g);

/// [under, tilde], each the list of coefficients on Δ_{n-1,n}, ..., Δ_{1,2}.
ScalarCocycle cocycle_from_json(const Field& f, std::size_t n, const json& j);
json cocycle_to_json(const ScalarCocycle& omega);

/// {"base": algebra, "cocycle": [component, ...]}
ExtensionSpec extension_from_json(const json& j, bool allow_char_two = false);
json extension_to_json(const ExtensionSpec& spec);

json matrix_to_json(const Matrix& m);
json subspace_to_json(const Subspace& s);

json entry_to_json(const ClassificationEntry& e);
json entries_to_json(const std::vector<ClassificationEntry>& entries);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace cla::io
