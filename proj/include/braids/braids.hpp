#pragma once

#include "braids/braid.hpp"
#include "braids/census.hpp"
#include "braids/closure.hpp"
#include "braids/conjugacy.hpp"
#include "braids/dynamics.hpp"
#include "braids/mixed.hpp"
#include "braids/normal_form.hpp"
#include "braids/permutation.hpp"
#include "braids/quandle.hpp"
