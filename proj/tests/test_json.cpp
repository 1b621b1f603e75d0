#include <doctest.h>
#include "dp2/search.hpp"
