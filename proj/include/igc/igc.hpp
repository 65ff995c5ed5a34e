#pragma once

#include "igc/canonical_form.hpp"
#include "igc/canonizer.hpp"
#include "igc/cliques.hpp"
#include "igc/end_order.hpp"
#include "igc/graph.hpp"
#include "igc/graph_io.hpp"
#include "igc/interval_representation.hpp"
#include "igc/oracle.hpp"
#include "igc/recognizer.hpp"
#include "igc/transforms.hpp"
#include "igc/wl.hpp"
