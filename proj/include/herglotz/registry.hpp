#pragma once

// Name -> evaluator table behind the C API and the command line.

#include <functional>
#include <string_view>
#include <vector>

#include "herglotz/types.hpp"

namespace herglotz::registry {

struct FunctionEntry {
  const char* name;
  const char* summary;
  double default_tol;
  std::function<RealResult(double x, double tol)> eval;
};

/// All published functions, in a fixed order.
const std::vector<FunctionEntry>& functions();

/// nullptr when the name is unknown.
const FunctionEntry* find(std::string_view name);

}  // namespace herglotz::registry
