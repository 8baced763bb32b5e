#include "kleinq/rational.hpp"
// json i/o lands with the cli layer
