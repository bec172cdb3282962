#pragma once

// Test-local alias onto the bundled catalog fixtures.

#include "fibalg/catalog.hpp"

namespace fibalg {
namespace fix = cat;
}
