#pragma once

#include "period_lab/error.hpp"
#include "period_lab/factor.hpp"
#include "period_lab/field.hpp"
#include "period_lab/integer.hpp"
#include "period_lab/make_field.hpp"
#include "period_lab/order.hpp"
#include "period_lab/period_set.hpp"
#include "period_lab/poly.hpp"
#include "period_lab/product_ring.hpp"
#include "period_lab/recurrence.hpp"
#include "period_lab/sequence.hpp"
#include "period_lab/text.hpp"
