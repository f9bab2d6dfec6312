#pragma once

#include "iqg/driver.hpp"
