#pragma once

#include "linstrand/clutter.hpp"
#include "linstrand/error.hpp"
#include "linstrand/hochster.hpp"
#include "linstrand/ideal.hpp"
#include "linstrand/instance_io.hpp"
#include "linstrand/linalg.hpp"
#include "linstrand/linearity.hpp"
#include "linstrand/lyubeznik.hpp"
#include "linstrand/simplicial.hpp"
#include "linstrand/strand.hpp"
#include "linstrand/verify.hpp"
#include "linstrand/vertex_set.hpp"
