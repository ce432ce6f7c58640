#pragma once

#include "snf/cyclotomic.hpp"
#include "snf/model.hpp"
#include "snf/spec_io.hpp"
#include "snf/catalog.hpp"
#include "snf/glp.hpp"
#include "snf/slices.hpp"
#include "snf/construct.hpp"
#include "snf/render.hpp"
