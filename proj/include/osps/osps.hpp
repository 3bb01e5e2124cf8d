#pragma once

#include "osps/bundle.hpp"
#include "osps/closure.hpp"
#include "osps/core.hpp"
#include "osps/generate.hpp"
#include "osps/lattice.hpp"
#include "osps/ortho.hpp"
#include "osps/report.hpp"
#include "osps/sps.hpp"
