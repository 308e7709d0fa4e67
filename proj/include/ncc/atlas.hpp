#ifndef NCC_ATLAS_HPP
#define NCC_ATLAS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncc/lie_core.hpp"

namespace ncc {

class AtlasError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Valuation = std::map<std::string, long>;

/// Integer arithmetic over + - * / (floor division), parentheses, min(a, b),
/// max(a, b) and named variables.
long evaluate_expression(std::string_view expr, const Valuation& vars);

enum class TypeTag { complex, cayley, split, nonsplit };
std::string to_string(TypeTag t);

struct Realization {
  Family family;
  std::vector<std::string> params;  // expressions
  std::string euler;                // label template, "{expr}" is substituted
};

struct AtlasRow {
  std::string id;
  std::string g_name, gc_name, h_name, g1_name;
  TypeTag type_tag = TypeTag::complex;
  std::string root_system;
  std::vector<std::string> euler_labels;
  std::vector<std::string> params;
  std::string constraint;  // informational
  std::string r, s, g1_dim;
  std::vector<Valuation> samples;
  std::optional<Realization> realization;

  long rank_r(const Valuation& v) const { return evaluate_expression(r, v); }
  long rank_s(const Valuation& v) const { return evaluate_expression(s, v); }
  /// Real dimension of g_1.
  long g1_dimension(const Valuation& v) const { return evaluate_expression(g1_dim, v); }
  /// The type-tag rank relation at v.
  bool rank_relation_holds(const Valuation& v) const;
};

/// Parses rows from JSON text; throws AtlasError on malformed data or a
/// violated rank relation (message carries the row id).
std::vector<AtlasRow> parse_atlas(std::string_view json_text);

/// The embedded copy of data/atlas.json.
const std::vector<AtlasRow>& load_atlas();

/// Rows whose g name, type tag or root system matches (case-insensitive,
/// ignoring '_', '{', '}' and spaces).
std::vector<AtlasRow> lookup(std::string_view query);

struct AlgebraDescriptor {
  Family family;
  std::vector<int> params;
  std::string euler_label;
  int dim = 0;
  std::string spec() const;  // "so:2,2"
  AlgebraPtr build(const Tolerances& tol = {}) const;
};

/// Descriptor for rows realized by the sl/so/sp matrix families; absent for
/// complex, quaternionic and exceptional rows.
std::optional<AlgebraDescriptor> realizable(const AtlasRow& row, const Valuation& v);

}  // namespace ncc

#endif  // NCC_ATLAS_HPP
