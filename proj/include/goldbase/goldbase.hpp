#pragma once

#include "goldbase/beatty.hpp"
#include "goldbase/digit_string.hpp"
#include "goldbase/quadratic.hpp"
#include "goldbase/report.hpp"
#include "goldbase/representation.hpp"
#include "goldbase/runs.hpp"
#include "goldbase/silver.hpp"
#include "goldbase/structure.hpp"
#include "goldbase/table.hpp"
#include "goldbase/verify.hpp"
