#pragma once

#include <korthos/codes.hpp>
#include <korthos/crt.hpp>
#include <korthos/error.hpp>
#include <korthos/matrix.hpp>
#include <korthos/ring.hpp>
#include <korthos/search.hpp>
