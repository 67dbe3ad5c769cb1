#pragma once

#include <string>

#include "f1/abelian.hpp"
#include "f1/group_ring.hpp"
#include "f1/root_system.hpp"

#include "json.hpp"

namespace f1 {

/// Parse "Z/2xZ/4:eps=(0,2)", "Z/4:eps=2", "Z/6" (trailing Z tolerated).
AbelianGroup parse_group(const std::string& spec);

/// Parse "A2", "B2", "G2", "A3:adjoint", or a JSON 2D Cartan matrix
/// (optionally "<json>:adjoint").
RootSystem parse_root_system(const std::string& spec);

nlohmann::json ring_elem_json(const GroupRing& R, const GroupRing::Elem& a);

}  // namespace f1
