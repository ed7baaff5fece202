#pragma once

#include "algebra.hpp"
#include "algebra_json.hpp"
#include "algebra_map.hpp"
#include "cartan.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "homalg.hpp"
#include "langlands.hpp"
#include "linalg.hpp"
#include "quiver.hpp"
#include "rational.hpp"
#include "subsets.hpp"
