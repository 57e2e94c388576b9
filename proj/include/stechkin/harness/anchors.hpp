#pragma once

#include <string>
#include <vector>

namespace stechkin::harness {

struct Anchor {
  std::string id;
  std::string description;
};

/// The bundled anchors manifest (docs/anchors.json, compiled in).
const std::vector<Anchor>& anchors();
const std::string& anchors_json();

bool anchor_known(const std::string& id);

}  // namespace stechkin::harness
