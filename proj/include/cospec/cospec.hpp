#pragma once

#include "cospec/blocks.hpp"
#include "cospec/connectivity.hpp"
#include "cospec/families.hpp"
#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"
#include "cospec/polynomial.hpp"
#include "cospec/report.hpp"
#include "cospec/spectra.hpp"
#include "cospec/switching.hpp"
