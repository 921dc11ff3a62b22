#pragma once

#include "eqhilb/abacus.hpp"
#include "eqhilb/analysis.hpp"
#include "eqhilb/coloring.hpp"
#include "eqhilb/errors.hpp"
#include "eqhilb/partition.hpp"
#include "eqhilb/render.hpp"
#include "eqhilb/serialize.hpp"
#include "eqhilb/stabilization.hpp"
#include "eqhilb/tangent.hpp"
