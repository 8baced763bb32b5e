#include "kleinq/rational.hpp"
// classification module lands after the weier layer
