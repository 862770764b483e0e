#ifndef FORBCFG_FORBCFG_HPP
#define FORBCFG_FORBCFG_HPP

#include "bounds.hpp"
#include "config_check.hpp"
#include "constructions.hpp"
#include "matrix.hpp"
#include "reproduce.hpp"
#include "row_graph.hpp"
#include "search.hpp"

#endif // FORBCFG_FORBCFG_HPP
