#pragma once

#include "mppa/presentation.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mppa {

struct MorphismCheck {
  bool ok = true;
  bool probabilistic = false;  // some rule was only oracle-verified
  std::string violated;        // rule text or endpoint complaint
  std::string detail;
};

// A linear functor between presented algebras: objects go along
// `vertex_map`, generators to images. Non-injective vertex maps are allowed.
class Morphism {
 public:
  Morphism(std::string name, AlgebraPtr source, AlgebraPtr target, std::vector<int> vertex_map,
           std::vector<Element> images, std::vector<ExprPtr> image_exprs = {});

  // Images given in the target grammar; vertex map by names.
  static std::shared_ptr<const Morphism> make(std::string name, AlgebraPtr source, AlgebraPtr target,
                                              const std::map<std::string, std::string>& vertex_map,
                                              const std::map<std::string, std::string>& images);

  const std::string& name() const { return name_; }
  const Algebra& source() const { return *source_; }
  const Algebra& target() const { return *target_; }
  const AlgebraPtr& source_ptr() const { return source_; }
  const AlgebraPtr& target_ptr() const { return target_; }
  int map_vertex(int v) const { return vertex_map_.at(v); }
  const std::vector<int>& vertex_map() const { return vertex_map_; }
  const Element& image(int g) const { return images_.at(g); }
  const ExprPtr& image_expr(int g) const { return image_exprs_.at(g); }

  Element apply_word(const Word& w) const;
  Element apply(const Element& a) const;

  // Well-definedness: endpoints, degrees, and every source rule maps to zero.
  MorphismCheck check() const;

 private:
  std::string name_;
  AlgebraPtr source_, target_;
  std::vector<int> vertex_map_;
  std::vector<Element> images_;
  std::vector<ExprPtr> image_exprs_;
};

using MorphismPtr = std::shared_ptr<const Morphism>;

MorphismPtr make_morphism(std::string name, AlgebraPtr source, AlgebraPtr target, std::vector<int> vertex_map,
                          std::vector<Element> images);

// g ∘ f
MorphismPtr compose(const MorphismPtr& g, const MorphismPtr& f, std::string name = "");

}  // namespace mppa
