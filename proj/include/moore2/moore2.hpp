#pragma once

// Umbrella header for the library. The cli module is left out on purpose:
// it drags in the vendored argument parser and JSON library, which only the
// command-line tool needs.

#include "analysis.hpp"
#include "builders.hpp"
#include "difference_sets.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "iso.hpp"
#include "numtheory.hpp"
#include "primitive_cubic.hpp"
#include "report.hpp"
#include "tower.hpp"
