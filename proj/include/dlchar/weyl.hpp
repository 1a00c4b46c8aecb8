#pragma once

#include "dlchar/weyl/cartan.hpp"
#include "dlchar/weyl/classes.hpp"
#include "dlchar/weyl/enumerate.hpp"
#include "dlchar/weyl/group.hpp"
#include "dlchar/weyl/relative.hpp"
