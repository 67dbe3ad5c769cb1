#include "f1/names.hpp"

#include <stdexcept>

namespace f1 {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

}  // namespace

AbelianGroup parse_group(const std::string& spec) {
  std::string factors_part = spec;
  std::string eps_part;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    factors_part = spec.substr(0, colon);
    eps_part = spec.substr(colon + 1);
  }
  std::vector<int> orders;
  for (std::string f : split(factors_part, 'x')) {
    if (f.rfind("Z/", 0) != 0) throw std::invalid_argument("group spec: expected Z/<n>, got " + f);
    f = f.substr(2);
    if (!f.empty() && f.back() == 'Z') f.pop_back();
    if (f.empty()) throw std::invalid_argument("group spec: missing order");
    orders.push_back(std::stoi(f));
  }
  std::vector<int> eps(orders.size(), 0);
  if (!eps_part.empty()) {
    if (eps_part.rfind("eps=", 0) != 0)
      throw std::invalid_argument("group spec: expected eps=..., got " + eps_part);
    std::string v = eps_part.substr(4);
    if (!v.empty() && v.front() == '(') {
      if (v.back() != ')') throw std::invalid_argument("group spec: unbalanced eps tuple");
      auto parts = split(v.substr(1, v.size() - 2), ',');
      if (parts.size() != orders.size())
        throw std::invalid_argument("group spec: eps arity mismatch");
      for (size_t i = 0; i < parts.size(); ++i) eps[i] = std::stoi(parts[i]);
    } else {
      if (orders.size() != 1) throw std::invalid_argument("group spec: scalar eps needs one factor");
      eps[0] = std::stoi(v);
    }
  }
  return AbelianGroup(orders, eps);
}

RootSystem parse_root_system(const std::string& spec) {
  std::string body = spec;
  LatticeTag tag = LatticeTag::SimplyConnected;
  if (auto colon = spec.rfind(':'); colon != std::string::npos) {
    std::string tail = spec.substr(colon + 1);
    if (tail == "adjoint") {
      tag = LatticeTag::Adjoint;
      body = spec.substr(0, colon);
    } else if (tail == "sc" || tail == "simply-connected") {
      body = spec.substr(0, colon);
    }
  }
  if (!body.empty() && body.front() == '[') {
    auto j = nlohmann::json::parse(body);
    std::vector<std::vector<int>> cartan;
    for (auto& row : j) cartan.push_back(row.get<std::vector<int>>());
    return RootSystem::from_cartan(cartan, tag);
  }
  return RootSystem::make(body, tag);
}

nlohmann::json ring_elem_json(const GroupRing& R, const GroupRing::Elem& a) {
  nlohmann::json support = nlohmann::json::array();
  for (auto& [g, c] : a) support.push_back({R.group().tuple(g), c});
  return nlohmann::json{{"support", support}};
}

}  // namespace f1
