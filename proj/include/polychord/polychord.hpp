#pragma once

#include "polychord/bigfloat.hpp"
#include "polychord/catalog.hpp"
#include "polychord/cyclotomic.hpp"
#include "polychord/exactnum.hpp"
#include "polychord/oracle.hpp"
#include "polychord/pairwise.hpp"
#include "polychord/report.hpp"
#include "polychord/spectrum.hpp"
#include "polychord/theorems.hpp"
