#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leray/complex.hpp"
#include "leray/error.hpp"

namespace leray {

// Finite sets over a common universe, each named by a vertex id. The nerve
// lives on the names.
class SetFamily {
 public:
  struct Member {
    Vertex name;
    VertexSet set;
  };

  SetFamily() = default;

  // Members are named 1..m in order.
  explicit SetFamily(const std::vector<VertexSet>& sets) {
    Vertex name = 1;
    for (const auto& s : sets) members_.push_back({name++, s});
  }

  explicit SetFamily(std::vector<Member> members) : members_(std::move(members)) {
    std::vector<Vertex> names;
    for (const auto& m : members_) names.push_back(m.name);
    if (VertexSet(names).size() != names.size()) throw InputError("set family names are not distinct");
  }

  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Member>& members() const noexcept { return members_; }
  const VertexSet& set(std::size_t i) const { return members_[i].set; }

  VertexSet names() const {
    std::vector<Vertex> n;
    for (const auto& m : members_) n.push_back(m.name);
    return VertexSet(std::move(n));
  }

 private:
  std::vector<Member> members_;
};

/// N(F): subfamilies with nonempty common intersection, plus ∅. A singleton
/// {A} is a face iff A is nonempty.
inline SimplicialComplex nerve(const SetFamily& family) {
  if (family.size() == 0) throw InputError("nerve of an empty family");
  const std::size_t m = family.size();
  std::vector<Simplex> faces;
  faces.emplace_back();
  struct Frame {
    std::vector<Vertex> names;
    std::size_t next;
    VertexSet common;
  };
  std::vector<Frame> stack;
  for (std::size_t i = 0; i < m; ++i)
    if (!family.set(i).empty()) stack.push_back({{family.members()[i].name}, i + 1, family.set(i)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    for (std::size_t j = f.next; j < m; ++j) {
      VertexSet common = f.common & family.set(j);
      if (common.empty()) continue;
      auto names = f.names;
      names.push_back(family.members()[j].name);
      stack.push_back({std::move(names), j + 1, std::move(common)});
    }
    faces.emplace_back(std::move(f.names));
  }
  return SimplicialComplex::from_closed_faces(family.names(), std::move(faces));
}

}  // namespace leray
