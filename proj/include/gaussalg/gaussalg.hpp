#pragma once

#include "gaussalg/algebra.hpp"
#include "gaussalg/borel.hpp"
#include "gaussalg/errors.hpp"
#include "gaussalg/gauss.hpp"
#include "gaussalg/graphs.hpp"
#include "gaussalg/int_matrix.hpp"
#include "gaussalg/integer.hpp"
#include "gaussalg/io.hpp"
#include "gaussalg/monomial.hpp"
#include "gaussalg/subset_enum.hpp"
#include "gaussalg/veronese.hpp"
