#pragma once

#include "nakct/algebra.hpp"
#include "nakct/classify.hpp"
#include "nakct/error.hpp"
#include "nakct/exact_rank.hpp"
#include "nakct/io.hpp"
#include "nakct/matrix_rep.hpp"
#include "nakct/modcat.hpp"
#include "nakct/render.hpp"
#include "nakct/singularity.hpp"
#include "nakct/tilting.hpp"
