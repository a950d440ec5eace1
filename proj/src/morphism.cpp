#include "mppa/morphism.hpp"

#include "mppa/error.hpp"
#include "mppa/repvar.hpp"

namespace mppa {

Morphism::Morphism(std::string name, AlgebraPtr source, AlgebraPtr target, std::vector<int> vertex_map,
                   std::vector<Element> images, std::vector<ExprPtr> image_exprs)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      images_(std::move(images)),
      image_exprs_(std::move(image_exprs)) {
  if (static_cast<int>(vertex_map_.size()) != source_->num_vertices())
    throw ValidationError("morphism '" + name_ + "': vertex map has the wrong size");
  if (static_cast<int>(images_.size()) != source_->num_generators())
    throw ValidationError("morphism '" + name_ + "': one image per generator is required");
  for (int v : vertex_map_)
    if (v < 0 || v >= target_->num_vertices()) throw ValidationError("morphism '" + name_ + "': bad vertex map");
  const bool literal = image_exprs_.empty();
  for (auto& im : images_) {
    im = target_->nf(im);
    if (literal) image_exprs_.push_back(expr::element(im));
  }
  if (image_exprs_.size() != images_.size())
    throw ValidationError("morphism '" + name_ + "': one image expression per generator is required");
}

MorphismPtr make_morphism(std::string name, AlgebraPtr source, AlgebraPtr target, std::vector<int> vertex_map,
                          std::vector<Element> images) {
  return std::make_shared<const Morphism>(std::move(name), std::move(source), std::move(target),
                                          std::move(vertex_map), std::move(images));
}

MorphismPtr Morphism::make(std::string name, AlgebraPtr source, AlgebraPtr target,
                           const std::map<std::string, std::string>& vertex_map,
                           const std::map<std::string, std::string>& images) {
  std::vector<int> vm(source->num_vertices(), -1);
  for (const auto& [a, b] : vertex_map) {
    int s = source->vertex_index(a), t = target->vertex_index(b);
    if (s < 0 || t < 0) throw ValidationError("morphism '" + name + "': unknown vertex in map " + a + " -> " + b);
    vm[s] = t;
  }
  for (int v : vm)
    if (v < 0) throw ValidationError("morphism '" + name + "': vertex map is incomplete");
  std::vector<Element> ims(source->num_generators());
  std::vector<ExprPtr> exprs(source->num_generators());
  std::vector<bool> seen(source->num_generators(), false);
  for (const auto& [g, text] : images) {
    int gi = source->generator_index(g);
    if (gi < 0) throw ValidationError("morphism '" + name + "': unknown generator '" + g + "'");
    exprs[gi] = target->parse_expr(text);
    ims[gi] = target->eval(*exprs[gi]);
    seen[gi] = true;
  }
  for (int g = 0; g < source->num_generators(); ++g)
    if (!seen[g])
      throw ValidationError("morphism '" + name + "': no image for generator '" + source->generator(g).name + "'");
  return std::make_shared<const Morphism>(std::move(name), std::move(source), std::move(target), std::move(vm),
                                          std::move(ims), std::move(exprs));
}

Element Morphism::apply_word(const Word& w) const {
  if (w.is_idempotent()) return target_->idempotent(vertex_map_[w.tgt]);
  Element r = images_[w.letters.front()];
  for (std::size_t i = 1; i < w.letters.size(); ++i) r = target_->mul(r, images_[w.letters[i]]);
  return r;
}

Element Morphism::apply(const Element& a) const {
  Element r;
  for (const auto& [w, c] : a.terms) r += c * apply_word(w);
  return r;
}

MorphismCheck Morphism::check() const {
  MorphismCheck out;
  for (int g = 0; g < source_->num_generators(); ++g) {
    int t = vertex_map_[source_->gen_tgt(g)], s = vertex_map_[source_->gen_src(g)];
    for (const auto& [w, c] : images_[g].terms) {
      if (w.tgt != t || w.src != s) {
        out.ok = false;
        out.violated = "endpoints of the image of '" + source_->generator(g).name + "'";
        out.detail = target_->print(images_[g]);
        return out;
      }
      if (target_->degree(w) != source_->generator(g).degree) {
        out.ok = false;
        out.violated = "degree of the image of '" + source_->generator(g).name + "'";
        out.detail = target_->print(images_[g]);
        return out;
      }
    }
  }
  for (const auto& r : source_->rules()) {
    Element lhs = apply_word(r.lhs);
    Element rhs = apply(r.rhs);
    auto verdict = equals(*target_, lhs, rhs);
    if (verdict.probabilistic) out.probabilistic = true;
    if (!verdict.equal) {
      out.ok = false;
      out.violated = r.text;
      out.detail = target_->print(target_->nf(lhs - rhs)) + " != 0";
      return out;
    }
  }
  return out;
}

MorphismPtr compose(const MorphismPtr& g, const MorphismPtr& f, std::string name) {
  if (&f->target() != &g->source())
    throw ValidationError("cannot compose '" + g->name() + "' after '" + f->name() + "'");
  std::vector<int> vm;
  for (int v : f->vertex_map()) vm.push_back(g->map_vertex(v));
  std::vector<Element> ims;
  for (int i = 0; i < f->source().num_generators(); ++i) ims.push_back(g->apply(f->image(i)));
  if (name.empty()) name = g->name() + " o " + f->name();
  return make_morphism(std::move(name), f->source_ptr(), g->target_ptr(), std::move(vm), std::move(ims));
}

}  // namespace mppa
