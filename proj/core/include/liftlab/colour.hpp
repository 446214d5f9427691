#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "liftlab/lift_graph.hpp"

namespace liftlab {

enum class Colour : std::uint8_t { None, Red, Black, White };

std::string_view to_string(Colour c);

/// True iff no lift edge joins two vertices of equal colour. Throws
/// std::invalid_argument if any vertex is uncoloured or the sizes differ.
bool verify_proper(const LiftGraph& lift, std::span<const Colour> colouring);

/// Number of distinct colours present.
int colours_used(std::span<const Colour> colouring);

}  // namespace liftlab
