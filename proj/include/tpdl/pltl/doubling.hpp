#pragma once

#include <string>
#include <vector>

#include "tpdl/pltl/bijective.hpp"
#include "tpdl/spaces/model.hpp"

namespace tpdl::pltl {

struct Doubling {
  Model model;
  std::vector<PointId> embedding;  // i -> x_i
};

/// Bitopological copy of a bijective model. Each i gets a point x_i ("x<i>")
/// and a half-step point h_i ("x<i>'"). Agent `a` pairs {x_i, h_i}, agent `b`
/// pairs {h_i, x_succ(i)}, both as monadic derivative relations, so that the
/// composite of the two partner maps sends x_i to x_succ(i). `whole` holds
/// exactly at the x_i; every other atom is copied onto the x_i only.
///
/// Throws PreconditionError if a == b or `whole` is already an atom of `m`.
Doubling doubling(const BijectiveModel& m, const std::string& a = "a", const std::string& b = "b",
                  const std::string& whole = "whole");

}  // namespace tpdl::pltl
