#pragma once

namespace levy::experiments {
int placeholder();
}
