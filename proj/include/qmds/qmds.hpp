#pragma once

#include "qmds/error.hpp"
#include "qmds/gf.hpp"
#include "qmds/mat.hpp"
#include "qmds/grs.hpp"
#include "qmds/families.hpp"
#include "qmds/oracle.hpp"
#include "qmds/catalog.hpp"
#include "qmds/io.hpp"
