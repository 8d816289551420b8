#pragma once

#include <functional>
#include <string_view>

namespace fapx {

using WarningSink = std::function<void(std::string_view)>;

// Non-fatal notes (suspicious inputs, proof side conditions that do not
// hold). Default sink writes to std::clog; tests install their own.
void warn(std::string_view message);

// Returns the previous sink. Passing an empty function silences warnings.
WarningSink set_warning_sink(WarningSink sink);

} // namespace fapx
