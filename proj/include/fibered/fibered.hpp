#pragma once

#include "fibered/abelianize.hpp"
#include "fibered/cyclotomic.hpp"
#include "fibered/determinant.hpp"
#include "fibered/fox.hpp"
#include "fibered/laurent.hpp"
#include "fibered/laurent_algebra.hpp"
#include "fibered/matrix.hpp"
#include "fibered/modorder.hpp"
#include "fibered/novikov.hpp"
#include "fibered/presentation.hpp"
#include "fibered/quotients.hpp"
#include "fibered/twisted.hpp"
#include "fibered/weight.hpp"
#include "fibered/word.hpp"
