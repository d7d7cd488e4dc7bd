#pragma once

#include "ordlines/analysis.hpp"
#include "ordlines/boroczky.hpp"
#include "ordlines/canonical.hpp"
#include "ordlines/constructions.hpp"
#include "ordlines/error.hpp"
#include "ordlines/incidence.hpp"
#include "ordlines/point.hpp"
#include "ordlines/point_set.hpp"
#include "ordlines/pointset_io.hpp"
#include "ordlines/predicates.hpp"
#include "ordlines/projection.hpp"
#include "ordlines/random.hpp"
#include "ordlines/scalar.hpp"
#include "ordlines/search.hpp"
