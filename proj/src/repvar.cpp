#include "mppa/repvar.hpp"

#include "mppa/error.hpp"

#include <random>
#include <set>

namespace mppa {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL + 1));
}

Matrix random_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<long>(rng() % 7) - 3;
  return m;
}

Dims uniform_dims(const Algebra& alg, int d) { return Dims(static_cast<std::size_t>(alg.num_vertices()), d); }

Dims cycling_dims(const Algebra& alg, int trial) { return uniform_dims(alg, 1 + trial % 3); }

MatrixRep random_rep(const Algebra& alg, const Dims& dims, std::uint64_t seed) {
  if (static_cast<int>(dims.size()) != alg.num_vertices()) throw Error("dimension vector has the wrong length");
  bool positive = false;
  for (int d : dims) {
    if (d < 0) throw Error("dimension vector entries must be nonnegative");
    if (d > 0) positive = true;
  }
  if (!positive && alg.num_vertices() > 0) throw Error("dimension vector is zero at every vertex");
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    MatrixRep rep;
    rep.dims = dims;
    rep.seed = seed;
    rep.attempts = attempt + 1;
    bool ok = true;
    for (int g = 0; g < alg.num_generators() && ok; ++g) {
      const int rows = dims[alg.gen_tgt(g)], cols = dims[alg.gen_src(g)];
      const auto& gen = alg.generator(g);
      if (gen.recipe == RecipeKind::Free) {
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
          for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<long>(rng() % 7) - 3;
        rep.gens.push_back(std::move(m));
        continue;
      }
      Evaluator partial(alg, rep);
      BlockMatrix v = partial.eval(*alg.recipe_expr(g));
      if (gen.recipe == RecipeKind::DefinedAs) {
        auto it = v.find({alg.gen_tgt(g), alg.gen_src(g)});
        rep.gens.push_back(it == v.end() ? Matrix(rows, cols) : it->second);
        continue;
      }
      auto it = v.find({alg.gen_src(g), alg.gen_tgt(g)});
      if (it == v.end()) {
        ok = false;
        break;
      }
      auto inv = it->second.inverse();
      if (!inv) {
        ok = false;
        break;
      }
      rep.gens.push_back(*inv);
    }
    if (ok) return rep;
  }
  throw Error("random_rep: sampling exhausted after 100 attempts for " + alg.name());
}

MatrixRep random_rep(const Algebra& alg, const DimensionVector& dims, std::uint64_t seed) {
  Dims d(static_cast<std::size_t>(alg.num_vertices()), 0);
  for (const auto& [v, n] : dims) {
    int i = alg.vertex_index(v);
    if (i < 0) throw Error("dimension given for unknown vertex '" + v + "'");
    d[i] = n;
  }
  return random_rep(alg, d, seed);
}

Evaluator::Evaluator(const Algebra& alg, MatrixRep rep) : alg_(&alg), rep_(std::move(rep)) {}

BlockMatrix Evaluator::identity() const {
  BlockMatrix r;
  for (int v = 0; v < alg_->num_vertices(); ++v) r.emplace(BlockKey{v, v}, Matrix::identity(dim(v)));
  return r;
}

Matrix Evaluator::word(const Word& w) const {
  if (w.is_idempotent()) return Matrix::identity(dim(w.tgt));
  Matrix m = rep_.gens.at(w.letters.front());
  for (std::size_t i = 1; i < w.letters.size(); ++i) m = m * rep_.gens.at(w.letters[i]);
  return m;
}

BlockMatrix Evaluator::eval(const Element& a) const {
  BlockMatrix r;
  for (const auto& [w, c] : a.terms) {
    BlockKey k{w.tgt, w.src};
    Matrix m = c * word(w);
    auto it = r.find(k);
    if (it == r.end())
      r.emplace(k, std::move(m));
    else
      it->second += m;
  }
  return r;
}

BlockMatrix Evaluator::inverse(const BlockMatrix& a) const {
  if (a.size() == 1 && a.begin()->first.first != a.begin()->first.second) {
    auto inv = a.begin()->second.inverse();
    if (!inv) throw Error("matrix oracle: element is not invertible at this representation");
    return {{{a.begin()->first.second, a.begin()->first.first}, *inv}};
  }
  std::set<int> support;
  for (const auto& [k, m] : a) {
    support.insert(k.first);
    support.insert(k.second);
  }
  std::vector<int> verts(support.begin(), support.end());
  std::map<int, int> offset;
  int n = 0;
  for (int v : verts) {
    offset[v] = n;
    n += dim(v);
  }
  Matrix big(n, n);
  for (const auto& [k, m] : a)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) big.at(offset[k.first] + i, offset[k.second] + j) = m.at(i, j);
  auto inv = big.inverse();
  if (!inv) throw Error("matrix oracle: element is not invertible at this representation");
  BlockMatrix r;
  for (int t : verts)
    for (int s : verts) {
      Matrix m(dim(t), dim(s));
      for (int i = 0; i < dim(t); ++i)
        for (int j = 0; j < dim(s); ++j) m.at(i, j) = inv->at(offset[t] + i, offset[s] + j);
      if (!m.is_zero() || a.count({t, s})) r.emplace(BlockKey{t, s}, std::move(m));
    }
  return r;
}

BlockMatrix Evaluator::eval(const Expr& e) const {
  switch (e.kind) {
    case Expr::Kind::Scalar:
      return block_scale(e.scalar, identity());
    case Expr::Kind::Idempotent:
      return {{{e.index, e.index}, Matrix::identity(dim(e.index))}};
    case Expr::Kind::Generator: {
      if (e.index >= static_cast<int>(rep_.gens.size()))
        throw Error("generator '" + alg_->generator(e.index).name + "' used before it is defined");
      return {{{alg_->gen_tgt(e.index), alg_->gen_src(e.index)}, rep_.gens[e.index]}};
    }
    case Expr::Kind::Macro:
      return eval(*alg_->macro_expr(e.index));
    case Expr::Kind::Sum: {
      BlockMatrix r;
      for (std::size_t i = 0; i < e.args.size(); ++i) r = block_add(r, eval(*e.args[i]), e.coeffs[i]);
      return r;
    }
    case Expr::Kind::Product: {
      BlockMatrix r = eval(*e.args.front());
      for (std::size_t i = 1; i < e.args.size(); ++i) r = block_mul(r, eval(*e.args[i]));
      return r;
    }
    case Expr::Kind::Inverse:
      return inverse(eval(*e.args.front()));
    case Expr::Kind::Apply: {
      const Morphism& m = *e.morphism;
      if (&m.target() != alg_) throw Error("morphism '" + m.name() + "' does not land in " + alg_->name());
      BlockMatrix src = pull_back(m).eval(*e.args.front());
      BlockMatrix r;
      for (const auto& [k, mat] : src) r = block_add(r, {{{m.map_vertex(k.first), m.map_vertex(k.second)}, mat}});
      return r;
    }
  }
  throw Error("unreachable expression kind");
}

const Evaluator& Evaluator::pull_back(const Morphism& m) const {
  auto it = pulled_.find(&m);
  if (it != pulled_.end()) return *it->second;
  if (&m.target() != alg_) throw Error("pull_back along a morphism with another target");
  const Algebra& src = m.source();
  MatrixRep rep;
  rep.seed = rep_.seed;
  for (int v = 0; v < src.num_vertices(); ++v) rep.dims.push_back(dim(m.map_vertex(v)));
  for (int g = 0; g < src.num_generators(); ++g) {
    int t = m.map_vertex(src.gen_tgt(g)), s = m.map_vertex(src.gen_src(g));
    BlockMatrix im = eval(*m.image_expr(g));
    auto f = im.find({t, s});
    rep.gens.push_back(f == im.end() ? Matrix(dim(t), dim(s)) : f->second);
  }
  auto ev = std::make_unique<Evaluator>(src, std::move(rep));
  const Evaluator& ref = *ev;
  pulled_.emplace(&m, std::move(ev));
  return ref;
}

static std::string dims_text(const Dims& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

template <class Value>
static OracleVerdict oracle_impl(const Algebra& alg, const Value& a, const Value& b, int trials, std::uint64_t seed,
                                 const std::optional<Dims>& fixed) {
  OracleVerdict v;
  for (int t = 0; t < trials; ++t) {
    Dims dims = fixed ? *fixed : cycling_dims(alg, t);
    Evaluator ev(alg, random_rep(alg, dims, derive_seed(seed, static_cast<std::uint64_t>(t))));
    ++v.trials;
    if (!block_equal(ev.eval(a), ev.eval(b))) {
      v.distinct = true;
      v.counterexample = "trial " + std::to_string(t) + ", dims " + dims_text(dims) + ", seed " +
                         std::to_string(seed);
      return v;
    }
  }
  return v;
}

OracleVerdict oracle_equals(const Algebra& alg, const Element& a, const Element& b, int trials, std::uint64_t seed,
                            const std::optional<Dims>& fixed_dims) {
  return oracle_impl(alg, a, b, trials, seed, fixed_dims);
}

OracleVerdict oracle_equals(const Algebra& alg, const Expr& a, const Expr& b, int trials, std::uint64_t seed,
                            const std::optional<Dims>& fixed_dims) {
  return oracle_impl(alg, a, b, trials, seed, fixed_dims);
}

EqualityVerdict equals(const Algebra& alg, const Element& a, const Element& b) {
  if (alg.certified()) return {alg.nf(a - b).is_zero(), false};
  OracleVerdict v = oracle_equals(alg, alg.nf(a), alg.nf(b), 20, 1);
  return {!v.distinct, true};
}

}  // namespace mppa
