#pragma once

#include <cstdint>
#include <map>

#include "cominrule/tableau.hpp"

namespace cominrule {

enum class Exec { serial, parallel };

/// True iff t is straight and labelled in box-id order, i.e. it is the first
/// tableau of its shape.
bool is_first_tableau(const StandardTableau& t);

/// For each straight shape mu (by mask), the number of standard fillings of
/// outer \ inner whose rectification is the first tableau of mu. Shapes with
/// no such filling are absent. The parallel variant splits on the box that
/// receives label 1 and gives the same map.
std::map<Mask, std::int64_t> rectification_counts(const BoxPoset& poset, Mask inner, Mask outer, Exec exec);

}  // namespace cominrule
