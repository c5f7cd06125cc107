// pencils.hpp -- umbrella header.

#pragma once

#include "pencils/blocking.hpp"
#include "pencils/constructions.hpp"
#include "pencils/gf.hpp"
#include "pencils/gf_ext.hpp"
#include "pencils/json_io.hpp"
#include "pencils/pencil.hpp"
#include "pencils/plane.hpp"
#include "pencils/poly.hpp"
#include "pencils/rng.hpp"
