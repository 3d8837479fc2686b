#pragma once

#include "ovalkit/support_fourier.hpp"
#include "ovalkit/geometry.hpp"
#include "ovalkit/equidistants.hpp"
#include "ovalkit/inequalities.hpp"
#include "ovalkit/stability.hpp"
#include "ovalkit/io.hpp"
#include "ovalkit/svg.hpp"
#include "ovalkit/report.hpp"
