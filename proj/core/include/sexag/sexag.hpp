#pragma once

// Convenience include for the whole library.

#include "sexag/calc.hpp"
#include "sexag/corpus.hpp"
#include "sexag/errors.hpp"
#include "sexag/metrology.hpp"
#include "sexag/numerals.hpp"
#include "sexag/rations.hpp"
#include "sexag/regular.hpp"
#include "sexag/sexvalue.hpp"
