#pragma once

#include "autcrit/error.hpp"
#include "autcrit/abelian.hpp"
#include "autcrit/element_set.hpp"
#include "autcrit/group.hpp"
#include "autcrit/permutation.hpp"
#include "autcrit/io.hpp"
#include "autcrit/automorphism.hpp"
#include "autcrit/catalog.hpp"
#include "autcrit/criteria.hpp"
#include "autcrit/verify.hpp"
#include "autcrit/report.hpp"
