#pragma once

// Closed Dunwoody diagrams, modified Heegaard complexity and first-homology
// lower bounds for the manifolds they present.

#include "dunwoody/params.hpp"
#include "dunwoody/planar.hpp"
#include "dunwoody/diagram.hpp"
#include "dunwoody/surface.hpp"
#include "dunwoody/reduction.hpp"
#include "dunwoody/complexity.hpp"
#include "dunwoody/polynomial.hpp"
#include "dunwoody/smith.hpp"
#include "dunwoody/homology.hpp"
#include "dunwoody/families.hpp"
#include "dunwoody/analysis.hpp"
