#pragma once

#include "ring.hpp"
#include "matrix.hpp"
#include "form_ring.hpp"
#include "elementary.hpp"
#include "unitary.hpp"
#include "steinberg.hpp"
#include "closure.hpp"
#include "stable_range.hpp"
#include "report.hpp"
#include "json_io.hpp"
#include "suites.hpp"
