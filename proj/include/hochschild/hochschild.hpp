#ifndef HOCHSCHILD_HOCHSCHILD_HPP_
#define HOCHSCHILD_HOCHSCHILD_HPP_

#include "algebra.hpp"
#include "document.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "formulas.hpp"
#include "oracle.hpp"
#include "poset.hpp"
#include "presentation.hpp"
#include "quiver.hpp"
#include "runner.hpp"
#include "simplicial.hpp"

#endif  // HOCHSCHILD_HOCHSCHILD_HPP_
