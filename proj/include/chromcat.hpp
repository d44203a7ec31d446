#ifndef CHROMCAT_HPP
#define CHROMCAT_HPP

#include "chromcat/fp.hpp"
#include "chromcat/group.hpp"
#include "chromcat/group_io.hpp"
#include "chromcat/elemab.hpp"
#include "chromcat/category.hpp"
#include "chromcat/skeleton.hpp"
#include "chromcat/chain.hpp"
#include "chromcat/poly.hpp"
#include "chromcat/invariants.hpp"
#include "chromcat/subring.hpp"
#include "chromcat/gf.hpp"
#include "chromcat/colimit.hpp"
#include "chromcat/series.hpp"
#include "chromcat/fgl.hpp"
#include "chromcat/cyc.hpp"
#include "chromcat/hopf.hpp"
#include "chromcat/a4_demo.hpp"

#endif // CHROMCAT_HPP
