#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpab/graph.hpp"
#include "gpab/words.hpp"

namespace gpab {

enum class Side { Left, Right };

// Automorphism of the graph product, stored with the images of its inverse.
class Automorphism {
 public:
  Automorphism() = default;
  explicit Automorphism(const LabeledGraph& g);  // identity

  static Automorphism identity(const LabeledGraph& g) { return Automorphism(g); }
  // Checks the relators on both sides and that the two maps are mutually inverse.
  static Automorphism from_images(const LabeledGraph& g, std::vector<GroupElement> forward,
                                  std::vector<GroupElement> backward);

  const LabeledGraph& graph() const { return g_; }
  const GroupElement& image(int v) const { return fwd_[v]; }
  const GroupElement& inverse_image(int v) const { return bwd_[v]; }
  const std::vector<GroupElement>& images() const { return fwd_; }

  GroupElement apply(const GroupElement& x) const;
  GroupElement apply_inverse(const GroupElement& x) const;
  Automorphism inverse() const;
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.fwd_ == b.fwd_; }
  friend Automorphism compose(const Automorphism& phi, const Automorphism& psi);

 private:
  void check_inverse_pair() const;

  LabeledGraph g_;
  std::vector<GroupElement> fwd_;
  std::vector<GroupElement> bwd_;
};

// (phi ∘ psi)(x) = phi(psi(x)).
Automorphism compose(const Automorphism& phi, const Automorphism& psi);
inline Automorphism operator*(const Automorphism& a, const Automorphism& b) { return compose(a, b); }
Automorphism power(const Automorphism& a, int64_t k);
// [a, b] = a b a^-1 b^-1.
Automorphism commutator(const Automorphism& a, const Automorphism& b);
bool equal_in_aut(const Automorphism& a, const Automorphism& b);

// Whether the images respect every defining relator of the graph product.
bool is_homomorphism(const LabeledGraph& g, const std::vector<GroupElement>& images);

Automorphism transvection(const LabeledGraph& g, int u, int v, Side side = Side::Right);
// u ↦ u·w (Right) or w·u (Left); validated.
Automorphism transvection_by(const LabeledGraph& g, int u, const GroupElement& w, Side side = Side::Right);
// R_u^{[y,z]}: u ↦ u·[y,z].
Automorphism commutator_transvection(const LabeledGraph& g, int u, int y, int z);
Automorphism partial_conjugation(const LabeledGraph& g, int v, const VertexSet& c);
// z ↦ h z h^-1 for z in c; validated.
Automorphism conjugation_on(const LabeledGraph& g, const VertexSet& c, const GroupElement& h);
Automorphism factor_automorphism(const LabeledGraph& g, int v, int64_t unit);
Automorphism graph_automorphism(const LabeledGraph& g, const std::vector<int>& perm);
Automorphism inner(const LabeledGraph& g, const GroupElement& h);

bool is_component_union(const LabeledGraph& g, int v, const VertexSet& c);

struct InnerSearch {
  bool found = false;
  GroupElement witness;
  int bound = 0;
};

// Found(h) means phi = ad_h exactly; NotFoundUpTo(L) otherwise. Throws NotAnInnerCandidate.
InnerSearch is_inner_bounded(const Automorphism& phi, int bound);
InnerSearch equal_in_out_bounded(const Automorphism& phi, const Automorphism& psi, int bound);
bool commute_in_out_bounded(const Automorphism& a, const Automorphism& b, int bound);

struct SpecialAutomorphism {
  InducedSubgraph sub;
  Automorphism aut;
};
SpecialAutomorphism restrict_to_special(const Automorphism& phi, const VertexSet& lambda, int bound = 4);
SpecialAutomorphism factor_to_special(const Automorphism& phi, const VertexSet& lambda);

// Rewrites an element of a special subgroup in the vertex indices of the induced subgraph.
GroupElement to_special(const GroupElement& x, const InducedSubgraph& sub);

}  // namespace gpab
