#pragma once

#include "permreg/levsort.hpp"
#include "permreg/mle.hpp"
#include "permreg/sqrt_lasso.hpp"
#include "permreg/svt.hpp"
