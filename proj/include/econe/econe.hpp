#pragma once
// Umbrella header.

#include "econe/bigint.hpp"
#include "econe/cache.hpp"
#include "econe/cone.hpp"
#include "econe/config.hpp"
#include "econe/errors.hpp"
#include "econe/field.hpp"
#include "econe/io.hpp"
#include "econe/linalg.hpp"
#include "econe/parallel.hpp"
#include "econe/partition.hpp"
#include "econe/pi.hpp"
#include "econe/resolution.hpp"
#include "econe/slice.hpp"
#include "econe/suites.hpp"
