#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhopf/rmatrix.hpp"

namespace qhopf {

/// Reference relation tables for n = 2, transcribed once and frozen; each
/// entry is (leading word, replacement) in the shared expression grammar.
/// derive_relations must reproduce them verbatim (canonical string equality).
const std::vector<std::pair<std::string, std::string>>& golden_rules(RelationFamily family);

}  // namespace qhopf
