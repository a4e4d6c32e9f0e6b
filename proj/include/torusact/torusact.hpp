#pragma once

#include "certificate.hpp"
#include "circle_lift.hpp"
#include "dyadic.hpp"
#include "error.hpp"
#include "finite_order.hpp"
#include "integer.hpp"
#include "io.hpp"
#include "loops.hpp"
#include "matrix.hpp"
#include "obstruction.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "rotation.hpp"
#include "thompson.hpp"
#include "torus.hpp"
#include "words.hpp"
