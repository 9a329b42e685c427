#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "imlab/block.hpp"
#include "imlab/character.hpp"
#include "imlab/functionals.hpp"
#include "imlab/geometry.hpp"
#include "imlab/inequality.hpp"
#include "imlab/matrix.hpp"

namespace imlab {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws Error(Parse) on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);

/// {"rows", "cols", "entries": [[re, im] | number, ...]} row-major.
ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& a);

/// {"m", "n", "blocks": [[matrix, ...], ...]}
BlockMatrix block_from_json(const Json& j);
Json block_to_json(const BlockMatrix& a);

/// {"entries": [[re, im] | number, ...]}
ComplexVector vector_from_json(const Json& j);
Json vector_to_json(const ComplexVector& v);

/// Character table:
///   {"degree": n, "generators": [[1-indexed one-line images], ...],
///    "character": {"by": "cycle_type" | "element" | "partition", ...}}
/// "cycle_type": values keyed by "2,1"-style cycle types.
/// "element":    values keyed by 1-indexed one-line images, e.g. "2,1,3".
/// "partition":  {"partition": [2, 1]}, an S_n irreducible (group must be S_n).
CharacterFunction character_from_json(const Json& j);

/// "tr" | "det" | "per" | "imm:<file>" | "p:<r>" | "e:<r>" | "s:<r>".
/// Relative character-table paths are resolved against `base`.
MatrixFunctional parse_functional_spec(const std::string& spec,
                                       const std::filesystem::path& base = {});

Json trial_report_to_json(const TrialReport& r, bool include_timing = true);
Json geometry_report_to_json(const GeometryReport& r, bool include_timing = true);

}  // namespace imlab
