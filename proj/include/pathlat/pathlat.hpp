#pragma once

#include "pathlat/characteristic.hpp"
#include "pathlat/io.hpp"
#include "pathlat/order.hpp"
#include "pathlat/paths.hpp"
#include "pathlat/poset.hpp"
#include "pathlat/rankpoly.hpp"
#include "pathlat/spectrum.hpp"
