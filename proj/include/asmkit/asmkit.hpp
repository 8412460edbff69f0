#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "cyclo6.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "asm.hpp"
#include "ice.hpp"
#include "formulas.hpp"
#include "special.hpp"
#include "refined.hpp"
#include "sampling.hpp"
#include "counts.hpp"
#include "checks.hpp"
#include "identities.hpp"
#include "battery.hpp"
#include "suite.hpp"
