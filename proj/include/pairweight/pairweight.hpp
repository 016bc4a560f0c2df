#pragma once

// Umbrella header: exact symbol-pair weight analysis for linear codes over
// small finite fields.

#include "pairweight/code.hpp"
#include "pairweight/codefile.hpp"
#include "pairweight/combinat.hpp"
#include "pairweight/criterion.hpp"
#include "pairweight/errors.hpp"
#include "pairweight/field.hpp"
#include "pairweight/hierarchy.hpp"
#include "pairweight/iso.hpp"
#include "pairweight/linalg.hpp"
#include "pairweight/oracle.hpp"
#include "pairweight/rational.hpp"
