#pragma once

#include "cdrank/aggregate.hpp"
#include "cdrank/analysis.hpp"
#include "cdrank/analyze.hpp"
#include "cdrank/csv.hpp"
#include "cdrank/diagnostics.hpp"
#include "cdrank/distributions.hpp"
#include "cdrank/error.hpp"
#include "cdrank/nemenyi.hpp"
#include "cdrank/probability.hpp"
#include "cdrank/ranking.hpp"
#include "cdrank/report.hpp"
#include "cdrank/svg.hpp"
