#pragma once

#include <string>
#include <vector>

namespace liegeo {

// Global intern table for parameter names (w12, a, p41, t1, ...).
// Ids are stable for the lifetime of the process; lookups are thread-safe.
namespace params {

int id(const std::string& name);
const std::string& name(int id);
bool known(const std::string& name);

} // namespace params

using ParamList = std::vector<int>;

} // namespace liegeo
