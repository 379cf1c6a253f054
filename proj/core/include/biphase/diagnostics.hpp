#pragma once

#include <functional>
#include <string_view>

namespace biphase {

using WarningHandler = std::function<void(std::string_view)>;

/// Routes a non-fatal diagnostic (unresolved layer, eps > 1, ...) to the
/// installed handler. The default handler prints to stderr.
void warn(std::string_view message);

/// Installs a new handler and returns the previous one. Passing an empty
/// function restores the stderr default.
WarningHandler set_warning_handler(WarningHandler handler);

/// RAII capture of warnings, mostly for tests.
class ScopedWarningHandler {
public:
    explicit ScopedWarningHandler(WarningHandler handler)
        : previous_(set_warning_handler(std::move(handler))) {}
    ~ScopedWarningHandler() { set_warning_handler(std::move(previous_)); }

    ScopedWarningHandler(const ScopedWarningHandler&) = delete;
    ScopedWarningHandler& operator=(const ScopedWarningHandler&) = delete;

private:
    WarningHandler previous_;
};

}  // namespace biphase
