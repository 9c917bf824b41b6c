#include "spincover/lorentz_cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spincover {

namespace {
const Complex I{0.0, 1.0};

std::array<Matrix4, 4> make_generators() {
  std::array<Matrix4, 4> g;
  for (auto& m : g) m = Matrix4::Zero();
  // M = offdiag(Id, Id)
  g[0].topRightCorner<2, 2>() = pauli(0);
  g[0].bottomLeftCorner<2, 2>() = pauli(0);
  // Mp = i M
  g[1] = I * g[0];
  // N = offdiag(-i Id, +i Id)
  g[2].topRightCorner<2, 2>() = -I * pauli(0);
  g[2].bottomLeftCorner<2, 2>() = I * pauli(0);
  // Np = i N
  g[3] = I * g[2];
  return g;
}

int index_of(GenTag g) { return static_cast<int>(g); }

const std::array<CoveringGroup, 6>& group_table() {
  static const std::array<CoveringGroup, 6> t = {{
      {GroupId::GM, GenTag::M, GenTag::Mp, +1, -1, +1},
      {GroupId::GN, GenTag::N, GenTag::Np, +1, -1, +1},
      {GroupId::Gp, GenTag::Mp, GenTag::N, -1, +1, -1},
      {GroupId::pG, GenTag::Np, GenTag::M, -1, +1, -1},
      {GroupId::G, GenTag::M, GenTag::N, +1, +1, -1},
      {GroupId::pGp, GenTag::Mp, GenTag::Np, -1, -1, -1},
  }};
  return t;
}

// Scalar matrices phase*Id are recognized exactly; the discrete sector has
// entries in {0, +-1, +-i} only.
std::optional<Complex> as_scalar(const Matrix4& m) {
  const Complex c = m(0, 0);
  Matrix4 expect = c * Matrix4::Identity();
  if (exact_equal(m, expect)) return c;
  return std::nullopt;
}

}  // namespace

const Matrix4& generator_matrix(GenTag g) {
  static const std::array<Matrix4, 4> gens = make_generators();
  return gens[static_cast<size_t>(index_of(g))];
}

std::string to_string(GenTag g) {
  switch (g) {
    case GenTag::M: return "M";
    case GenTag::Mp: return "M'";
    case GenTag::N: return "N";
    case GenTag::Np: return "'N";
  }
  return "?";
}

const CoveringGroup& covering_group(GroupId id) {
  for (const auto& g : group_table())
    if (g.id == id) return g;
  throw std::logic_error("unknown group id");
}

const std::array<GroupId, 6>& all_groups() {
  static const std::array<GroupId, 6> ids = {GroupId::GM, GroupId::GN, GroupId::Gp,
                                             GroupId::pG, GroupId::G, GroupId::pGp};
  return ids;
}

std::string to_string(GroupId id) {
  switch (id) {
    case GroupId::GM: return "G_M";
    case GroupId::GN: return "G_N";
    case GroupId::Gp: return "G'";
    case GroupId::pG: return "'G";
    case GroupId::G: return "G";
    case GroupId::pGp: return "'G'";
  }
  return "?";
}

std::array<std::array<Matrix4, 4>, 4> discrete_mult_table() {
  std::array<std::array<Matrix4, 4>, 4> t;
  const std::array<GenTag, 4> order = {GenTag::M, GenTag::Mp, GenTag::N, GenTag::Np};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      t[i][j] = generator_matrix(order[i]) * generator_matrix(order[j]);
  return t;
}

std::array<std::array<std::array<Complex, 2>, 4>, 4> discrete_mult_table_expected() {
  const Complex one{1, 0};
  auto p = [](Complex u, Complex l) { return std::array<Complex, 2>{u, l}; };
  std::array<std::array<std::array<Complex, 2>, 4>, 4> t;
  // rows/cols in (M, M', N, 'N) order
  t[0] = {p(one, one), p(I, I), p(I, -I), p(-one, one)};
  t[1] = {p(I, I), p(-one, -one), p(-one, one), p(-I, I)};
  t[2] = {p(-I, I), p(one, -one), p(one, one), p(I, I)};
  t[3] = {p(one, -one), p(I, -I), p(I, I), p(-one, -one)};
  return t;
}

GroupRelationsReport group_relations_check(GroupId id) {
  const CoveringGroup& g = covering_group(id);
  const Matrix4& a = generator_matrix(g.gen1);
  const Matrix4& b = generator_matrix(g.gen2);
  GroupRelationsReport r;
  r.id = id;
  r.square1_exact = exact_equal(a * a, double(g.square1) * Matrix4::Identity());
  r.square2_exact = exact_equal(b * b, double(g.square2) * Matrix4::Identity());
  r.commutation_exact = exact_equal(a * b, double(g.commutation) * (b * a));
  return r;
}

double commutation_check(GenTag gen, const SpinorParam& k) {
  const Matrix4& f = generator_matrix(gen);
  return max_abs(f * bispinor(k) - bispinor_swapped(k) * f);
}

SimilarityWitness similarity_witness(GroupId src, GroupId dst,
                                     std::mt19937_64& rng, int samples) {
  const bool m_to_n = (src == GroupId::GM && dst == GroupId::GN);
  const bool gp_to_pg = (src == GroupId::Gp && dst == GroupId::pG);
  if (!m_to_n && !gp_to_pg) {
    throw std::invalid_argument("similarity_witness: no witness for this pair");
  }
  SimilarityWitness w;
  w.a = Matrix4::Identity();
  w.a(0, 0) = w.a(1, 1) = -I;
  const Matrix4 ainv = w.a.inverse();

  if (m_to_n) {
    w.generator_maps_exact =
        exact_equal(w.a * generator_matrix(GenTag::M) * ainv, generator_matrix(GenTag::N)) &&
        exact_equal(w.a * generator_matrix(GenTag::Mp) * ainv, generator_matrix(GenTag::Np));
  } else {
    w.generator_maps_exact =
        exact_equal(w.a * generator_matrix(GenTag::Mp) * ainv, generator_matrix(GenTag::Np)) &&
        exact_equal(w.a * generator_matrix(GenTag::N) * ainv,
                    Matrix4(-generator_matrix(GenTag::M)));
  }

  // A is block-scalar, so it fixes the continuous sector pointwise.
  w.continuous_residual = 0.0;
  for (int i = 0; i < samples; ++i) {
    const SpinorParam k = random_spinor_param(rng);
    const Matrix4 s = bispinor(k);
    w.continuous_residual = std::max(w.continuous_residual, max_abs(w.a * s * ainv - s));
  }
  return w;
}

Matrix4 GroupElement::realization() const {
  Matrix4 m = phase * bispinor(continuous);
  for (GenTag g : word) m = m * generator_matrix(g);
  return m;
}

namespace {

// Reduces a letter sequence over the group's generator pair to the
// canonical normal form, accumulating the phase.
void reduce_word(const CoveringGroup& g, std::vector<GenTag>& word, Complex& phase) {
  // sort gen2 after gen1, one transposition at a time
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] == g.gen2 && word[i + 1] == g.gen1) {
        std::swap(word[i], word[i + 1]);
        phase *= double(g.commutation);
        moved = true;
      }
    }
  }
  // collapse squares
  std::vector<GenTag> out;
  size_t i = 0;
  while (i < word.size()) {
    if (i + 1 < word.size() && word[i] == word[i + 1]) {
      phase *= double(word[i] == g.gen1 ? g.square1 : g.square2);
      i += 2;
    } else {
      out.push_back(word[i]);
      ++i;
    }
  }
  word = std::move(out);
  // fold a scalar pair product (happens in GM and GN: gen1*gen2 = +-i*Id)
  if (word.size() == 2) {
    const Matrix4 prod = generator_matrix(word[0]) * generator_matrix(word[1]);
    if (auto c = as_scalar(prod)) {
      phase *= *c;
      word.clear();
    }
  }
}

}  // namespace

GroupElement make_element(GroupId id, const SpinorParam& k,
                          const std::vector<GenTag>& letters, Complex phase) {
  const CoveringGroup& g = covering_group(id);
  GroupElement e;
  e.group = id;
  e.continuous = k;
  e.phase = phase;
  e.word = letters;
  for (GenTag t : letters) {
    if (t == g.gen1) {
      e.gen1_parity ^= 1;
    } else if (t == g.gen2) {
      e.gen2_parity ^= 1;
    } else {
      throw std::invalid_argument("make_element: letter " + to_string(t) +
                                  " is not a generator of " + to_string(id));
    }
  }
  reduce_word(g, e.word, e.phase);
  return e;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.group != b.group) {
    throw std::invalid_argument("multiply: elements belong to different groups");
  }
  const CoveringGroup& g = covering_group(a.group);
  GroupElement r;
  r.group = a.group;
  r.phase = a.phase * b.phase;
  // move b's continuous part through a's word: each generator swaps blocks
  const bool odd = (a.word.size() % 2) == 1;
  const SpinorParam kb = odd ? b.continuous.conj_inverse() : b.continuous;
  r.continuous = spinor_compose(a.continuous, kb);
  r.word = a.word;
  r.word.insert(r.word.end(), b.word.begin(), b.word.end());
  r.gen1_parity = a.gen1_parity ^ b.gen1_parity;
  r.gen2_parity = a.gen2_parity ^ b.gen2_parity;
  reduce_word(g, r.word, r.phase);
  return r;
}

std::string to_string(RepId r) {
  switch (r) {
    case RepId::T1: return "T1";
    case RepId::T2: return "T2";
    case RepId::T3: return "T3";
    case RepId::T4: return "T4";
  }
  return "?";
}

int rep_sign(GroupId id, RepId rep, GenTag gen) {
  const CoveringGroup& g = covering_group(id);
  if (gen == g.gen1) {
    return (rep == RepId::T2 || rep == RepId::T4) ? -1 : +1;
  }
  if (gen == g.gen2) {
    return (rep == RepId::T2 || rep == RepId::T3) ? -1 : +1;
  }
  throw std::invalid_argument("rep_sign: " + to_string(gen) +
                              " is not a generator of " + to_string(id));
}

Matrix4 rep_value(GroupId id, RepId rep, const GroupElement& g) {
  if (g.group != id) {
    throw std::invalid_argument("rep_value: element does not belong to " + to_string(id));
  }
  const CoveringGroup& cg = covering_group(id);
  double f = 1.0;
  if (g.gen1_parity) f *= rep_sign(id, rep, cg.gen1);
  if (g.gen2_parity) f *= rep_sign(id, rep, cg.gen2);
  return f * g.realization();
}

GroupElement trace_witness_element(GroupId id) {
  const CoveringGroup& g = covering_group(id);
  // boost composed with a rotation about the same axis: k0 has both a real
  // and an imaginary part, which makes tr(S * gen1 * gen2) nonzero for
  // every group.
  const SpinorParam boost{{std::cosh(0.4), 0.0}, {0, 0}, {0, 0}, {std::sinh(0.4), 0.0}};
  const SpinorParam rot{{std::cos(0.3), 0.0}, {0, 0}, {0, 0}, {0.0, std::sin(0.3)}};
  const SpinorParam k = spinor_compose(boost, rot);
  return make_element(id, k, {g.gen1, g.gen2});
}

RepEquivalenceReport rep_equivalence_check(GroupId id, std::mt19937_64& rng, int samples) {
  const CoveringGroup& g = covering_group(id);
  Matrix4 f = Matrix4::Identity();
  f(0, 0) = f(1, 1) = -1.0;  // F = diag(-Id, +Id)
  const Matrix4 finv = f.inverse();

  RepEquivalenceReport r;
  r.id = id;
  r.max_residual = 0.0;

  std::vector<GroupElement> probe;
  probe.push_back(make_element(id, SpinorParam::identity(), {g.gen1}));
  probe.push_back(make_element(id, SpinorParam::identity(), {g.gen2}));
  probe.push_back(make_element(id, SpinorParam::identity(), {g.gen1, g.gen2}));
  for (int i = 0; i < samples; ++i) {
    const SpinorParam k = random_spinor_param(rng);
    probe.push_back(make_element(id, k, {}));
    probe.push_back(make_element(id, k, {g.gen1}));
    probe.push_back(make_element(id, k, {g.gen2}));
  }

  bool t12 = true, t34 = true;
  for (const auto& e : probe) {
    const double r12 = max_abs(f * rep_value(id, RepId::T1, e) * finv -
                               rep_value(id, RepId::T2, e));
    const double r34 = max_abs(f * rep_value(id, RepId::T3, e) * finv -
                               rep_value(id, RepId::T4, e));
    r.max_residual = std::max({r.max_residual, r12, r34});
    t12 = t12 && r12 <= kGroupTol;
    t34 = t34 && r34 <= kGroupTol;
  }
  r.t1_t2_equivalent = t12;
  r.t3_t4_equivalent = t34;

  const GroupElement w = trace_witness_element(id);
  const Complex tr1 = rep_value(id, RepId::T1, w).trace();
  const Complex tr3 = rep_value(id, RepId::T3, w).trace();
  r.trace_gap = std::abs(tr1 - tr3);
  return r;
}

double vector_rep_factor(VectorRepTag tag, const RealMatrix4& L) {
  switch (tag) {
    case VectorRepTag::F1: return 1.0;
    case VectorRepTag::F2: return L.determinant() > 0 ? 1.0 : -1.0;
    case VectorRepTag::F3: return L(0, 0) > 0 ? 1.0 : -1.0;
    case VectorRepTag::F4:
      return (L.determinant() > 0 ? 1.0 : -1.0) * (L(0, 0) > 0 ? 1.0 : -1.0);
  }
  return 1.0;
}

RealMatrix4 vector_rep(VectorRepTag tag, const RealMatrix4& L) {
  const RealMatrix4 g = minkowski_metric();
  if ((L.transpose() * g * L - g).cwiseAbs().maxCoeff() > kGroupTol) {
    throw std::invalid_argument("vector_rep: matrix does not preserve the metric");
  }
  return vector_rep_factor(tag, L) * L;
}

PartlyExtendedReport partly_extended_analysis(PartlyExtended which, GenTag gen,
                                              std::mt19937_64& rng, int samples) {
  PartlyExtendedReport r;
  r.which = which;
  r.gen = gen;

  const bool spatial = which == PartlyExtended::SpatialReflection;
  const RealMatrix4 reflection = spatial ? parity_reflection() : time_reflection();

  r.gen_covers_reflection =
      (lorentz_image(generator_matrix(gen)) - reflection).cwiseAbs().maxCoeff() < 1e-12;

  // Vector level: on the {identity, reflection} components the advertised
  // representation pairs coincide pointwise.
  bool collapse = true;
  for (int i = 0; i < samples; ++i) {
    const SpinorParam k = random_spinor_param(rng);
    for (int c = 0; c < 2; ++c) {
      RealMatrix4 L = lorentz_from_spinor(k);
      if (c == 1) L = L * reflection;
      const double f1 = vector_rep_factor(VectorRepTag::F1, L);
      const double f2 = vector_rep_factor(VectorRepTag::F2, L);
      const double f3 = vector_rep_factor(VectorRepTag::F3, L);
      const double f4 = vector_rep_factor(VectorRepTag::F4, L);
      if (spatial) {
        collapse = collapse && f1 == f3 && f2 == f4;
      } else {
        collapse = collapse && f1 == f4 && f2 == f3;
      }
    }
  }
  r.vector_collapse_ok = collapse;

  // Spinor level: a representation of the one-generator extension is fixed
  // by f(gen) = +-1; the two choices are conjugate via F = diag(-Id, +Id),
  // which fixes the continuous sector and flips the generator sign.
  Matrix4 f = Matrix4::Identity();
  f(0, 0) = f(1, 1) = -1.0;
  const Matrix4& gm = generator_matrix(gen);
  const bool flips = exact_equal(f * gm * f.inverse(), Matrix4(-gm));
  bool fixes_s = true;
  for (int i = 0; i < 10; ++i) {
    const Matrix4 s = bispinor(random_spinor_param(rng));
    fixes_s = fixes_s && max_abs(f * s * f.inverse() - s) < 1e-12;
  }
  r.single_class = flips && fixes_s;
  r.equivalence_classes = r.single_class ? 1 : 2;

  // The M- and N-extensions are isomorphic through the same witness A.
  const SimilarityWitness w = similarity_witness(GroupId::GM, GroupId::GN, rng, 10);
  r.witness_ok = w.generator_maps_exact && w.continuous_residual < 1e-12;
  return r;
}

std::vector<GroupId> MajoranaScanReport::fully_real_groups() const {
  std::vector<GroupId> out;
  for (const auto& e : entries)
    if (e.fully_real()) out.push_back(e.id);
  return out;
}

MajoranaScanReport majorana_reality_scan(std::mt19937_64& rng, int samples) {
  const DiracBasis& mb = dirac_basis(DiracTag::Majorana);
  const Matrix4& u = mb.from_weyl;
  const Matrix4 udag = u.adjoint();

  MajoranaScanReport rep;
  rep.max_s_imag = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Matrix4 s = u * bispinor(random_spinor_param(rng)) * udag;
    rep.max_s_imag = std::max(rep.max_s_imag, max_imag(s));
  }
  auto is_real = [&](GenTag t) {
    const Matrix4 x = u * generator_matrix(t) * udag;
    return max_imag(x) < 1e-12;
  };
  int i = 0;
  for (GroupId id : all_groups()) {
    const CoveringGroup& g = covering_group(id);
    rep.entries[i++] = {id, is_real(g.gen1), is_real(g.gen2)};
  }
  return rep;
}

}  // namespace spincover
