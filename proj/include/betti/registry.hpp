#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "betti/combinat.hpp"
#include "betti/result.hpp"

namespace betti {

/// Raw parameter values keyed by flag name (without dashes).
using Params = std::map<std::string, std::string>;

class UnknownIdError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EvalOptions {
  bool allow_large = false;
  std::int64_t cap = 16;  // guard on dimensions that drive subset enumerations
};

struct RegistryEntry {
  std::string id;
  std::string summary;
  std::vector<std::string> required;
  std::vector<std::string> optional;
  std::function<BoundResult(const Params&, const EvalOptions&)> eval;
};

const std::vector<RegistryEntry>& bound_registry();
const RegistryEntry& find_bound(const std::string& id);  // throws UnknownIdError
std::vector<std::string> bound_ids();

/// Evaluates one catalog entry. With strict set, parameters the entry does
/// not read are a ShapeError; otherwise they are ignored.
BoundResult evaluate_bound(const std::string& id, const Params& p, const EvalOptions& opts = {}, bool strict = true);

// Typed accessors. A missing required value is a ShapeError.
std::int64_t param_int(const Params& p, const std::string& name);
std::optional<std::int64_t> param_opt_int(const Params& p, const std::string& name);
IntVector parse_int_vector(const std::string& text);  // "1,2,3"
IntMatrix parse_int_matrix(const std::string& text);  // "1,2;3,4"
IntVector param_vec(const Params& p, const std::string& name);
IntMatrix param_mat(const Params& p, const std::string& name);

/// Throws HypothesisError when value > cap and large inputs are not allowed.
void guard_size(std::int64_t value, const std::string& what, const EvalOptions& opts);

}  // namespace betti
