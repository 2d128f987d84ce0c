#ifndef N2P_N2P_HPP
#define N2P_N2P_HPP

#include "n2p/betti.hpp"
#include "n2p/engine.hpp"
#include "n2p/errors.hpp"
#include "n2p/families.hpp"
#include "n2p/graph_analysis.hpp"
#include "n2p/homology.hpp"
#include "n2p/ideal.hpp"
#include "n2p/linalg.hpp"
#include "n2p/n2p_index.hpp"
#include "n2p/parse.hpp"
#include "n2p/quadratic.hpp"
#include "n2p/simplicial.hpp"

#endif  // N2P_N2P_HPP
