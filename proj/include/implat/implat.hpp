#ifndef IMPLAT_IMPLAT_HPP
#define IMPLAT_IMPLAT_HPP

// Umbrella header for the whole library.

#include "implat/core.hpp"
#include "implat/corpus.hpp"
#include "implat/files.hpp"
#include "implat/formula.hpp"
#include "implat/frame.hpp"
#include "implat/lattice.hpp"
#include "implat/polarity.hpp"
#include "implat/relation.hpp"
#include "implat/report_io.hpp"
#include "implat/representation.hpp"
#include "implat/rng.hpp"
#include "implat/semantics.hpp"

#endif  // IMPLAT_IMPLAT_HPP
