// Constructive upper bounds for the algebraic genus of torus knots and
// links: the two-power twisting bound, the gluing combinator, the binary
// decomposition algorithm with auditable certificates, the real closed-form
// comparison, and the ratio table against the smooth genus.
#pragma once

#include <memory>
#include <string>
#include <vector>

namespace algenus {

struct TorusParams {
  long long p = 1;
  long long q = 1;
};

// 2^(b-a) * (4^a - 1) / 3 after ordering a <= b; zero when either exponent
// is zero.
long long two_power_bound(int a, int b);

// Bound assembly tree. Leaves are unknots (either parameter 1) and
// two-power torus links; internal nodes glue two certificates for T_{a,b}
// and T_{a,c} into one for T_{a,b+c} at cost a. The (p,q) labels are
// orientation labels for the same link as (q,p); flipped() swaps them.
class BoundCertificate {
 public:
  enum class Kind { unknot, two_power, glue };

  static BoundCertificate unknot(TorusParams params);
  static BoundCertificate two_power(int exp_p, int exp_q);

  Kind kind() const;
  TorusParams params() const;
  long long value() const;
  long long strands() const;
  BoundCertificate left() const;
  BoundCertificate right() const;

  // Same certificate for the transposed labeling T(q,p).
  BoundCertificate flipped() const;

  // Recomputes every step bottom-up; throws std::logic_error on any
  // arithmetic or bookkeeping mismatch.
  void audit() const;

  // Indented one-node-per-line rendering.
  std::string render() const;

  friend BoundCertificate glue_bound(const BoundCertificate& left,
                                     const BoundCertificate& right);

 private:
  struct Node;

  explicit BoundCertificate(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Glues certificates for T_{a,b} and T_{a,c} (matching first parameter a)
// into a certificate for T_{a,b+c} of value left + right + a.
BoundCertificate glue_bound(const BoundCertificate& left, const BoundCertificate& right);

// The binary-decomposition bound; tries both assembly orientations and
// returns the smaller certificate.
BoundCertificate torus_galg_bound(TorusParams tp);

// pq/3 + p*log2(q) + q*log2(p) for p, q > 1.
double closed_form_bound(TorusParams tp);

// (p-1)(q-1)/2 for coprime p, q >= 2.
long long smooth_genus(TorusParams tp);

struct RatioRow {
  long long p, q, bound, genus;
  double ratio;
};

// Rows (p, p+1) for p in [2, p_max], ascending.
std::vector<RatioRow> ratio_report(long long p_max);

}  // namespace algenus
