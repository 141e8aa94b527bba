#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hforge/bifrac.hpp"
#include "hforge/special_values.hpp"

namespace hforge {

/// Field in which both sides of an identity live.
enum class Domain { Q, Qs, Qx, Qsx };

/// "Q", "Q(s)", "Q(x)", "Q(s,x)".
std::string_view to_string(Domain d);
bool domain_has_s(Domain d);
bool domain_has_x(Domain d);

/// Extra integer parameters of an identity (only `m` is used today).
using Params = std::map<std::string, std::int64_t>;

/// "m=2,k=3" (sorted by name), "" when empty.
std::string to_string(const Params& params);

struct ParamSpec {
  std::string name;
  std::int64_t min = 0;
  /// When nonempty, the only admissible values.
  std::vector<std::int64_t> allowed;
  std::vector<std::int64_t> default_grid;
};

enum class Side { Lhs, Rhs };

using SideFn = std::function<BiFrac(const special::SpecialValues&, std::int64_t n, const Params&)>;

/// One printed form of an identity's right-hand side.
struct Variant {
  /// "" for entries with a single form; "printed" / "corrected" otherwise.
  std::string name;
  SideFn rhs;
  /// Rows of this variant for which failure is the documented outcome.
  std::function<bool(const Params&)> expected_fail = [](const Params&) { return false; };
  /// Extra note shown in listings (e.g. where a correction comes from).
  std::string note;
};

struct IdentityEntry {
  /// Tag such as "THM-2.1", "ID-5", "INTRO-2".
  std::string id;
  /// ASCII statement of the identity.
  std::string anchor;
  Domain domain = Domain::Q;
  std::int64_t n_min = 1;
  std::vector<ParamSpec> params;
  SideFn lhs;
  std::vector<Variant> variants;

  /// Throws DomainError naming the constraint when n or params are invalid.
  void validate(std::int64_t n, const Params& p) const;
  /// Cartesian product of the default grids ({{}} when parameterless).
  std::vector<Params> default_param_grid() const;
  /// The named variant; "" selects the first one. Throws DomainError if absent.
  const Variant& variant(std::string_view name) const;
  bool has_variants() const { return variants.size() > 1; }
};

/// All 34 entries, in catalog order. Immutable after first use.
const std::vector<IdentityEntry>& catalog();

/// Throws DomainError for an unknown tag.
const IdentityEntry& lookup(std::string_view id);
bool is_known_id(std::string_view id);

/// Exact value of one side at n (and params). Validates its arguments.
BiFrac eval_side(const IdentityEntry& entry, Side side, std::int64_t n, const Params& params = {},
                 std::string_view variant = {},
                 const special::SpecialValues& values = special::SpecialValues::shared());

}  // namespace hforge
