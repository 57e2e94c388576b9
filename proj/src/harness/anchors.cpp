#include "stechkin/harness/anchors.hpp"

#include <json.hpp>

#include <algorithm>

namespace stechkin::harness {

namespace detail {
extern const char* const kAnchorsJson;
}

const std::string& anchors_json() {
  static const std::string text = detail::kAnchorsJson;
  return text;
}

const std::vector<Anchor>& anchors() {
  static const std::vector<Anchor> list = [] {
    std::vector<Anchor> out;
    for (const auto& a : nlohmann::json::parse(anchors_json()))
      out.push_back({a.at("id").get<std::string>(), a.at("description").get<std::string>()});
    return out;
  }();
  return list;
}

bool anchor_known(const std::string& id) {
  const auto& list = anchors();
  return std::any_of(list.begin(), list.end(), [&](const Anchor& a) { return a.id == id; });
}

}  // namespace stechkin::harness
