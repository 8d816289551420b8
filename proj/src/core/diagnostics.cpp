#include "frechet_approx/core/diagnostics.hpp"

#include <iostream>
#include <mutex>

namespace fapx {
namespace {

std::mutex& sink_mutex()
{
    static std::mutex m;
    return m;
}

WarningSink& sink()
{
    static WarningSink s = [](std::string_view msg) { std::clog << "warning: " << msg << '\n'; };
    return s;
}

} // namespace

void warn(std::string_view message)
{
    std::lock_guard lock(sink_mutex());
    if (sink())
        sink()(message);
}

WarningSink set_warning_sink(WarningSink next)
{
    std::lock_guard lock(sink_mutex());
    WarningSink previous = std::move(sink());
    sink() = std::move(next);
    return previous;
}

} // namespace fapx
