#pragma once

#include "bondspan/bonds.hpp"
#include "bondspan/distribution.hpp"
#include "bondspan/enumerate.hpp"
#include "bondspan/errors.hpp"
#include "bondspan/instance.hpp"
#include "bondspan/matroid.hpp"
#include "bondspan/matroid_analysis.hpp"
#include "bondspan/montecarlo.hpp"
#include "bondspan/mst.hpp"
#include "bondspan/multigraph.hpp"
#include "bondspan/report.hpp"
#include "bondspan/rng.hpp"
#include "bondspan/sam.hpp"
#include "bondspan/tight.hpp"
#include "bondspan/union_find.hpp"
#include "bondspan/verify.hpp"
