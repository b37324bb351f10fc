#pragma once

#include "rotsurf/error.hpp"
#include "rotsurf/minkowski.hpp"
#include "rotsurf/jet.hpp"
#include "rotsurf/surfaces.hpp"
#include "rotsurf/curvature.hpp"
#include "rotsurf/beltrami.hpp"
#include "rotsurf/mesh.hpp"
#include "rotsurf/audit/transcribed.hpp"
#include "rotsurf/audit/audit.hpp"
#include "rotsurf/audit/report.hpp"
