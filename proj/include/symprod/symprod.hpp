#pragma once

#include <symprod/errors.hpp>
#include <symprod/half.hpp>
#include <symprod/rational.hpp>
#include <symprod/series.hpp>
#include <symprod/gvs.hpp>
#include <symprod/symgrp.hpp>
#include <symprod/manifold.hpp>
#include <symprod/orbifold.hpp>
#include <symprod/fock.hpp>
#include <symprod/io.hpp>
