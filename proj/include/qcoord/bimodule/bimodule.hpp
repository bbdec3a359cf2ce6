#pragma once

// U_q x U_q-modules inside O_q: sums of matrix-coefficient spaces M(V) under the
// actions rho1 (left) and rho2 (right), their quotients, Loewy series and the
// identification of filtration quotients with external tensor products.
//
// A basis vector carries the grade (left weight, right weight).  Each side stores
// E(1), F(1), E(l), F(l); K and [K; c, t] act through the grades.  Together these
// generate U_q, so invariant subspaces and intertwiners only need the eight matrices.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcoord/linalg/graded.hpp"
#include "qcoord/oq/oq.hpp"
#include "qcoord/uq/generator.hpp"
#include "qcoord/uq/rep.hpp"

namespace qcoord::bimodule {

using Eigen::Index;

// Operator slots on each side.
enum Slot { E1 = 0, F1 = 1, El = 2, Fl = 3 };
inline constexpr int kSlots = 4;

// Where a BiRep lives inside O_q (absent after taking quotients).
struct Embedding {
  oq::Coordinates coords;
  Mat basis;      // coords.dim() x dim, one column per basis element
  Mat coord_map;  // dim x coords.dim(), coord_map * basis = I
};

struct BiRep {
  int ell = 3;
  std::vector<graded::Grade> grades;
  std::vector<Mat> left, right;  // indexed by Slot
  std::optional<Embedding> embedding;
  std::string provenance;

  Index dim() const { return static_cast<Index>(grades.size()); }
  graded::Layout layout() const { return graded::Layout(grades); }
  std::vector<oq::Element> elements() const;  // requires an embedding
  // Coordinates of an element of O_q in this basis; nullopt when it is not in the span.
  std::optional<Vec> coordinates(const oq::Element& x) const;
};

// Action of u on either side; words may use E(1), F(1), E(l), F(l), K, Kinv, KBinom.
Mat act_left(const BiRep& m, const uq::AlgebraElement& u);
Mat act_right(const BiRep& m, const uq::AlgebraElement& u);

// Left and right operators commute pairwise.
bool actions_commute(const BiRep& m);

// Sum of M(V) over the given modules, with actions transported from the modules.
BiRep matrix_coefficient_bimodule(const std::vector<const uq::Rep*>& modules, std::string provenance = "");
BiRep matrix_coefficient_bimodule(const uq::Rep& m);
// Actions computed from rho1, rho2 directly (slow; for small degrees).
BiRep from_subspace(const oq::MCSubspace& s, int ell);

oq::MCSubspace as_subspace(const BiRep& m);

// The left factor acts on the first tensor index, the right factor on the second.
struct ExternalTensor {
  uq::Rep left;
  uq::Rep right;
  Index dim() const { return left.dim() * right.dim(); }
};
BiRep to_birep(const ExternalTensor& t);

// Subquotients.
BiRep sub_birep(const BiRep& m, const graded::Subspace& s, std::string provenance = "");
BiRep quotient_birep(const BiRep& m, const graded::Subspace& s, std::string provenance = "");
// b must be contained in a (both embedded); throws std::invalid_argument otherwise.
BiRep quotient(const BiRep& a, const BiRep& b);
graded::Subspace subspace_of(const BiRep& a, const BiRep& b);

// Intertwiners X : a -> b (b.dim() x a.dim()).
std::vector<Mat> hom_space(const BiRep& a, const BiRep& b);
bool is_bimodule_map(const BiRep& a, const BiRep& b, const Mat& x);

struct IsoCertificate {
  bool certified = false;
  Mat map;  // q -> t, invertible intertwiner
};
IsoCertificate iso_to_external(const BiRep& q, const ExternalTensor& t);
IsoCertificate find_isomorphism(const BiRep& a, const BiRep& b);

// Loewy series with simple factors L_a (x) L_b.
using Label = std::pair<int, int>;
struct BiLayer {
  Index dim = 0;
  std::map<Label, int> composition;
};
struct BiLoewy {
  std::vector<BiLayer> radical_layers;  // top to bottom
  std::vector<BiLayer> socle_layers;    // top to bottom
  bool rigid = false;
  bool indecomposable = false;
  Index end_dim = 0;
};
graded::Subspace socle_subspace(const BiRep& m);
graded::Subspace radical_subspace(const BiRep& m);
std::map<Label, int> semisimple_composition(const BiRep& m);
BiLoewy loewy_bi(const BiRep& m);
// dim End(m) / rad, the radical taken as the kernel of (x, y) -> tr(xy).
Index end_mod_radical_dim(const BiRep& m);

// P^1 < ... < P^depth, P^i = sum_{j <= i} M(T_{n_j}) along the linkage sequence of n.
std::vector<int> block_sequence(int n, int depth, int ell);
std::vector<BiRep> build_P(int n, int depth, int ell);

struct QuotientCheck {
  int i = 0;
  std::string target;
  bool certified = false;
};
// P^i / P^{i-1} against V_{n_i}^* (x) V_{n_i}^*.
std::vector<QuotientCheck> filtration_quotients(int n, int depth, int ell);

// Q^i = sum_{i+2 <= j <= depth} M(T_{n_j}); only Q^{i-1}/Q^i with i + 2 <= depth are
// reported, each against V_{n_i} (x) V_{n_i}.
std::vector<QuotientCheck> decreasing_Q(int n, int depth, int ell);

enum class Status { Pass, Fail, BoundaryUnverified };
std::string to_string(Status s);

struct LambdaCheck {
  std::string name;
  Status status = Status::Fail;
};
struct LambdaReport {
  std::vector<int> sequence;
  BiRep block;
  BiLoewy loewy;
  std::vector<LambdaCheck> checks;
  bool passed() const;
};
// The truncation sum_{j <= depth} M(T_{n_j}) of the block of n and its layer pattern.
LambdaReport lambda_block(int n, int depth, int ell);

// y = sum_i (-1)^i q^{i(n-i+1)} [n, i] e_i (x) e_{n-i} in V_n^* (x) V_n^*.
Vec equivariant_vector(int n, int ell);
// Basis of {x : rho1'(u) x = rho2'(S^-1 u) x, u in the generating set}.
Mat equivariant_solutions(int n, int ell);
// Same system on a bimodule: {f : act_left(u) f = act_right(S^-1 u) f}.
Mat equivariant_subspace(const BiRep& m);

}  // namespace qcoord::bimodule
