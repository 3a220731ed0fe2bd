#pragma once

#include "dvpack/compare.hpp"
#include "dvpack/compression.hpp"
#include "dvpack/errors.hpp"
#include "dvpack/geometry.hpp"
#include "dvpack/instances.hpp"
#include "dvpack/metrics.hpp"
#include "dvpack/model.hpp"
#include "dvpack/oracle.hpp"
#include "dvpack/ordering.hpp"
#include "dvpack/packer.hpp"
#include "dvpack/pivots.hpp"
#include "dvpack/rotation.hpp"
#include "dvpack/solution_io.hpp"
#include "dvpack/validate.hpp"
