#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gpc/coefficients.hpp"
#include "gpc/generators.hpp"
#include "gpc/pipeline.hpp"
#include "gpc/plethysm.hpp"
#include "gpc/polytope.hpp"
#include "gpc/states.hpp"

namespace gpc {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
// Directory holding tables/ and states/; GPC_DATA_DIR overrides the built-in path.
std::string default_data_dir();

// Rationals travel as "p/q" strings; plain JSON integers are accepted on input.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from_json(const Json& j);
Json to_json(const std::vector<Integer>& v);
std::vector<Integer> integers_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json to_json(const Permutation& w);

Json to_json(const OccupationInequality& q);
OccupationInequality inequality_from_json(const Json& j);

Json to_json(const WedgeState& s);
WedgeState wedge_state_from_json(const Json& j);

Json to_json(const RationalPolytope& P);
RationalPolytope polytope_from_json(const Json& j);

Json to_json(const InequalityFamily& f);
Json to_json(const std::vector<PlethysmComponent>& components);
Json to_json(const FacetMatch& m);
Json to_json(const PipelineReport& report);
Json to_json(const TableReport& report);

GoldenTable golden_table_from_json(const Json& j);
VertexTable vertex_table_from_json(const Json& j);

struct SchubertTableRow {
  std::string word;  // 0-based one-line notation, e.g. "1032"
  std::string polynomial;
};
std::vector<SchubertTableRow> schubert_table_from_json(const Json& j);
// Permutation from a 0-based one-line word such as "1032".
Permutation permutation_from_word(const std::string& word);
// Parses sums of monomials written as "x^2y+xz" over single-letter variables.
SparsePoly parse_letter_polynomial(const std::string& text, const std::string& letters);

}  // namespace gpc
