#pragma once

#include "tropcount/error.hpp"
#include "tropcount/bigint.hpp"
#include "tropcount/field_scalar.hpp"
#include "tropcount/matrix.hpp"
#include "tropcount/normal_form.hpp"
#include "tropcount/abelian_type.hpp"
#include "tropcount/number_theory.hpp"
#include "tropcount/finite_abelian.hpp"
#include "tropcount/identities.hpp"
#include "tropcount/tropical_tori.hpp"
#include "tropcount/metric_graph.hpp"
#include "tropcount/theta_skeleton.hpp"
#include "tropcount/curve_count.hpp"
#include "tropcount/table.hpp"
#include "tropcount/verify.hpp"
#include "tropcount/json_io.hpp"
