#pragma once

#include "hypergraph.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "cycles.hpp"
#include "chromatic.hpp"
#include "generalized.hpp"
#include "random.hpp"
