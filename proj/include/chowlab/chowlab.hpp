#pragma once

#include "chowlab/bigint.hpp"
#include "chowlab/chow.hpp"
#include "chowlab/families.hpp"
#include "chowlab/fuzz.hpp"
#include "chowlab/monomial.hpp"
#include "chowlab/polynomial.hpp"
#include "chowlab/poset.hpp"
#include "chowlab/poset_io.hpp"
#include "chowlab/scd.hpp"
#include "chowlab/sequence.hpp"
