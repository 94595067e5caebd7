#ifndef TAQUIN_TAQUIN_HPP
#define TAQUIN_TAQUIN_HPP

#include "taquin/dual_equivalence.hpp"
#include "taquin/growth.hpp"
#include "taquin/json_io.hpp"
#include "taquin/ktheory.hpp"
#include "taquin/monodromy.hpp"
#include "taquin/osculating.hpp"
#include "taquin/parallel.hpp"
#include "taquin/partition.hpp"
#include "taquin/tableau.hpp"

#endif
