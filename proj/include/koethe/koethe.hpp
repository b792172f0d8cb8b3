#pragma once

#include "koethe/decide.hpp"
#include "koethe/dimseq.hpp"
#include "koethe/errors.hpp"
#include "koethe/io.hpp"
#include "koethe/linalg.hpp"
#include "koethe/quiver.hpp"
#include "koethe/reflect.hpp"
#include "koethe/rep.hpp"
#include "koethe/roots.hpp"
