#pragma once

#include "hfk/builtin.hpp"
#include "hfk/complex.hpp"
#include "hfk/cover.hpp"
#include "hfk/diagram.hpp"
#include "hfk/error.hpp"
#include "hfk/gf2.hpp"
#include "hfk/gradings.hpp"
#include "hfk/intlin.hpp"
#include "hfk/invariants.hpp"
#include "hfk/json_io.hpp"
#include "hfk/laurent.hpp"
#include "hfk/pipeline.hpp"
#include "hfk/poly_f2.hpp"
#include "hfk/tate.hpp"
