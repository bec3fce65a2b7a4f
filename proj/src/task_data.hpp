#pragma once

#include <vector>

#include "dla/fixtures.hpp"

namespace dla::fixture_detail {

/// The 100 benchmark tasks: 20 per materialized database, half needing a
/// single table and half joining several. Validated at generation time.
const std::vector<TaskSpec>& authored_tasks();

}  // namespace dla::fixture_detail
