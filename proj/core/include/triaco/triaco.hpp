#pragma once

#include "triaco/algebra.hpp"
#include "triaco/bimodule.hpp"
#include "triaco/coho2.hpp"
#include "triaco/deformation.hpp"
#include "triaco/derivation.hpp"
#include "triaco/error.hpp"
#include "triaco/hochschild.hpp"
#include "triaco/io.hpp"
#include "triaco/linalg.hpp"
#include "triaco/report.hpp"
#include "triaco/tensor.hpp"
#include "triaco/trees.hpp"
