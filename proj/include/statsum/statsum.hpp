#pragma once

#include "statsum/chi_zero.hpp"
#include "statsum/core_fixed.hpp"
#include "statsum/dn_roots.hpp"
#include "statsum/enumerate.hpp"
#include "statsum/graph.hpp"
#include "statsum/io.hpp"
#include "statsum/matrix.hpp"
#include "statsum/matrix_tree.hpp"
#include "statsum/orientations.hpp"
#include "statsum/ring.hpp"
#include "statsum/tutte.hpp"
#include "statsum/unipoly.hpp"
