#pragma once

#include "orbitcount/applications.hpp"
#include "orbitcount/asymptotics.hpp"
#include "orbitcount/connectivity.hpp"
#include "orbitcount/error.hpp"
#include "orbitcount/graph.hpp"
#include "orbitcount/graph_json.hpp"
#include "orbitcount/matrix_function.hpp"
#include "orbitcount/oracle.hpp"
#include "orbitcount/perron.hpp"
#include "orbitcount/rule_json.hpp"
#include "orbitcount/spectral.hpp"
#include "orbitcount/walker.hpp"
