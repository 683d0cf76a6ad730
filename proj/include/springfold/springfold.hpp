#pragma once

#include "springfold/cli_config.hpp"
#include "springfold/crease_pattern.hpp"
#include "springfold/design.hpp"
#include "springfold/fold_io.hpp"
#include "springfold/generators.hpp"
#include "springfold/geometry.hpp"
#include "springfold/json_io.hpp"
#include "springfold/kinematics.hpp"
#include "springfold/oracle.hpp"
#include "springfold/svg.hpp"
