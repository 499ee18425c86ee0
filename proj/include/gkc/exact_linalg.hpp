#pragma once

#include "gkc/dyadic.hpp"
#include "gkc/int_matrix.hpp"
#include "gkc/integer.hpp"
#include "gkc/smith.hpp"
