#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spincover/algebra.hpp"

namespace spincover {

// The four discrete 4-spinor operations: M = offdiag(Id,Id), Mp = i*M,
// N = offdiag(-i*Id, +i*Id), Np = i*N.
enum class GenTag { M, Mp, N, Np };

const Matrix4& generator_matrix(GenTag g);
std::string to_string(GenTag g);

// The six covering groups, each the continuous sector extended by an
// ordered generator pair.
enum class GroupId { GM, GN, Gp, pG, G, pGp };

struct CoveringGroup {
  GroupId id;
  GenTag gen1;
  GenTag gen2;
  int square1;       // gen1^2 = square1 * Id (exact, +-1)
  int square2;       // gen2^2 = square2 * Id
  int commutation;   // gen1*gen2 = commutation * gen2*gen1
};

const CoveringGroup& covering_group(GroupId id);
const std::array<GroupId, 6>& all_groups();
std::string to_string(GroupId id);

// 4x4 table of the pairwise generator products, row-major in
// (M, Mp, N, Np) order.
std::array<std::array<Matrix4, 4>, 4> discrete_mult_table();

// Expected table entry as the pair of scalar block coefficients
// (upper, lower): product = diag(upper*Id, lower*Id).
std::array<std::array<std::array<Complex, 2>, 4>, 4> discrete_mult_table_expected();

struct GroupRelationsReport {
  GroupId id;
  bool square1_exact;
  bool square2_exact;
  bool commutation_exact;
  bool pass() const { return square1_exact && square2_exact && commutation_exact; }
};

// Verifies the two generator squares and the (anti)commutation relation of
// the group, by exact matrix equality.
GroupRelationsReport group_relations_check(GroupId id);

// max entrywise |F*S(k,kbar) - S(kbar,k)*F|; an identity for all four
// generators, so the result is rounding-level.
double commutation_check(GenTag gen, const SpinorParam& k);

struct SimilarityWitness {
  Matrix4 a;                     // diag(-i*Id, +Id)
  bool generator_maps_exact;     // A gen A^-1 lands on the expected target exactly
  double continuous_residual;    // max |A S A^-1 - S| over the sampled k
};

// Conjugation witness for (GM -> GN) and (Gp -> pG).  Throws
// std::invalid_argument for any other pair.
SimilarityWitness similarity_witness(GroupId src, GroupId dst,
                                     std::mt19937_64& rng, int samples = 100);

// Group element in normal form: phase * S(continuous) * (reduced word over
// the group's generator pair, canonical order gen1 then gen2, length <= 2).
// gen1_parity/gen2_parity track the coset in Z2 x Z2; they survive the
// folding of scalar pair products (in GM and GN, gen1*gen2 = +-i*Id).
struct GroupElement {
  GroupId group;
  SpinorParam continuous;
  Complex phase{1.0, 0.0};
  std::vector<GenTag> word;
  int gen1_parity = 0;
  int gen2_parity = 0;

  Matrix4 realization() const;
};

GroupElement make_element(GroupId id, const SpinorParam& k,
                          const std::vector<GenTag>& letters,
                          Complex phase = Complex{1.0, 0.0});
GroupElement multiply(const GroupElement& a, const GroupElement& b);

enum class RepId { T1, T2, T3, T4 };
std::string to_string(RepId r);

// Sign f(gen) of representation `rep` on a generator of group `id`:
// +1 on the continuous sector always; gen1 picks up -1 under T2,T4 and
// gen2 under T2,T3.
int rep_sign(GroupId id, RepId rep, GenTag gen);

// T(g) = f(g) * realization(g); f evaluated from the generator parities.
Matrix4 rep_value(GroupId id, RepId rep, const GroupElement& g);

struct RepEquivalenceReport {
  GroupId id;
  bool t1_t2_equivalent;         // F T1 F^-1 = T2 on generators and samples
  bool t3_t4_equivalent;
  double max_residual;
  double trace_gap;              // |tr T1(w) - tr T3(w)| at the witness element
  bool t1_t3_inequivalent() const { return trace_gap > 1e-6; }
  std::string partition() const { return "{T1,T2} {T3,T4}"; }
};

RepEquivalenceReport rep_equivalence_check(GroupId id, std::mt19937_64& rng,
                                           int samples = 20);

// Witness element S(k*) * gen1 * gen2 with Re k0 != 0 and Im k0 != 0, on
// which tr T1 != tr T3 for every group (traces are conjugation invariants).
GroupElement trace_witness_element(GroupId id);

enum class VectorRepTag { F1, F2, F3, F4 };

// Multiplicative sign: F1 = 1, F2 = det L, F3 = sgn L(0,0), F4 = product.
double vector_rep_factor(VectorRepTag tag, const RealMatrix4& L);
// f(L) * L; requires L^T g L = g within 1e-10.
RealMatrix4 vector_rep(VectorRepTag tag, const RealMatrix4& L);

// One-generator extensions and the partly extended Lorentz groups they
// cover: adding a spatial reflection P (generators M or Mp) or a time
// reflection T (generators N or Np).
enum class PartlyExtended { SpatialReflection, TimeReflection };

struct PartlyExtendedReport {
  PartlyExtended which;
  GenTag gen;
  bool gen_covers_reflection;    // lorentz image of the generator is P (resp. T)
  bool vector_collapse_ok;       // T1=T3,T2=T4 (P case) or T1=T4,T2=T3 (T case)
  bool single_class;             // all four restricted reps conjugate via F
  bool witness_ok;               // SL2C_M ~ SL2C_N via A (checked on M/N pairs)
  int equivalence_classes = 1;
  bool pass() const {
    return gen_covers_reflection && vector_collapse_ok && single_class && witness_ok;
  }
};

PartlyExtendedReport partly_extended_analysis(PartlyExtended which, GenTag gen,
                                              std::mt19937_64& rng, int samples = 50);

struct MajoranaScanEntry {
  GroupId id;
  bool gen1_real;
  bool gen2_real;
  bool fully_real() const { return gen1_real && gen2_real; }
};

struct MajoranaScanReport {
  double max_s_imag;                      // over random continuous samples
  std::array<MajoranaScanEntry, 6> entries;
  std::vector<GroupId> fully_real_groups() const;
};

MajoranaScanReport majorana_reality_scan(std::mt19937_64& rng, int samples = 100);

}  // namespace spincover
