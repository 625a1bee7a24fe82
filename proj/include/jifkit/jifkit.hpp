#pragma once

// Umbrella header: the whole library except the CLI front end.

#include "jifkit/csv.hpp"
#include "jifkit/indicators.hpp"
#include "jifkit/ingest.hpp"
#include "jifkit/model.hpp"
#include "jifkit/stats.hpp"
