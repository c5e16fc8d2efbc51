#pragma once

#include "cmpart/budget.hpp"
#include "cmpart/coloring.hpp"
#include "cmpart/complex.hpp"
#include "cmpart/constructions.hpp"
#include "cmpart/exact_cover.hpp"
#include "cmpart/face.hpp"
#include "cmpart/homology.hpp"
#include "cmpart/io.hpp"
#include "cmpart/partition.hpp"
#include "cmpart/relative.hpp"
#include "cmpart/shelling.hpp"
#include "cmpart/transform.hpp"
#include "cmpart/vectors.hpp"
