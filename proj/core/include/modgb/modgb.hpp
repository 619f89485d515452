#ifndef MODGB_MODGB_HPP
#define MODGB_MODGB_HPP

#include "modgb/bounds.hpp"
#include "modgb/cone.hpp"
#include "modgb/decomposition.hpp"
#include "modgb/errors.hpp"
#include "modgb/free_module.hpp"
#include "modgb/groebner.hpp"
#include "modgb/hilbert.hpp"
#include "modgb/module_element.hpp"
#include "modgb/monomial.hpp"
#include "modgb/pure_power.hpp"
#include "modgb/random.hpp"
#include "modgb/scalar.hpp"
#include "modgb/structure.hpp"

#endif  // MODGB_MODGB_HPP
