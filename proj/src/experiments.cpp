#include "levybridge/experiments.hpp"

namespace levy::experiments {
int placeholder() { return 0; }
}
