#include "blowup/config.hpp"

namespace blowup {

EngineLimits& limits() {
    static EngineLimits instance;
    return instance;
}

} // namespace blowup
