#include "biphase/diagnostics.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace biphase {

namespace {

std::mutex handler_mutex;

WarningHandler& current_handler() {
    static WarningHandler handler;
    return handler;
}

}  // namespace

void warn(std::string_view message) {
    WarningHandler handler;
    {
        std::lock_guard lock(handler_mutex);
        handler = current_handler();
    }
    if (handler) {
        handler(message);
    } else {
        std::cerr << "warning: " << message << '\n';
    }
}

WarningHandler set_warning_handler(WarningHandler handler) {
    std::lock_guard lock(handler_mutex);
    return std::exchange(current_handler(), std::move(handler));
}

}  // namespace biphase
