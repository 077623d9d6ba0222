#pragma once

#include "en/random.hpp"

namespace en::test {
using namespace en::sample;
}  // namespace en::test
