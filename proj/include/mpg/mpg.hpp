#pragma once

#include "mpg/automorphism.hpp"
#include "mpg/canonical.hpp"
#include "mpg/catalog.hpp"
#include "mpg/circulant.hpp"
#include "mpg/coloring.hpp"
#include "mpg/generation.hpp"
#include "mpg/graph.hpp"
#include "mpg/io.hpp"
#include "mpg/products.hpp"
#include "mpg/reseminant.hpp"
#include "mpg/verify.hpp"
