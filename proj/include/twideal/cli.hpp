#pragma once

#include "twideal/cli/components.hpp"
#include "twideal/cli/report.hpp"
#include "twideal/cli/scene_file.hpp"
