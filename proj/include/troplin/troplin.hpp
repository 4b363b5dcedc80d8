#pragma once

#include <troplin/io.hpp>
#include <troplin/selftest.hpp>
