#pragma once

#include "racdraw/core.hpp"
#include "racdraw/drawing_json.hpp"
#include "racdraw/edge_list.hpp"
#include "racdraw/layout.hpp"
#include "racdraw/segment_pair.hpp"
#include "racdraw/svg.hpp"
#include "racdraw/validator.hpp"
