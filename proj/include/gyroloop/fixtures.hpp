#pragma once

#include "gyroloop/cayley_table.hpp"

namespace gyroloop {

/// The order-16 left Bol loop whose gyrator set does not close into a group.
CayleyTable g16_table();

}  // namespace gyroloop
