#include "algenus/torus.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace algenus {

struct BoundCertificate::Node {
  Kind kind = Kind::unknot;
  TorusParams params;
  long long value = 0;
  long long strands = 0;      // glue nodes
  int exp_a = 0, exp_b = 0;   // two-power nodes, ordered exp_a <= exp_b
  std::shared_ptr<const Node> left, right;
};

long long two_power_bound(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("exponents must be nonnegative");
  if (a > b) std::swap(a, b);
  if (a == 0) return 0;
  if (a + b > 61) throw std::overflow_error("two-power bound out of 64-bit range");
  long long fours = (1LL << (2 * a)) - 1;  // 4^a - 1, divisible by 3
  return (1LL << (b - a)) * (fours / 3);
}

BoundCertificate BoundCertificate::unknot(TorusParams params) {
  if (params.p != 1 && params.q != 1)
    throw std::invalid_argument("unknot certificate requires a parameter equal to 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::unknot;
  node->params = params;
  return BoundCertificate(std::move(node));
}

BoundCertificate BoundCertificate::two_power(int exp_p, int exp_q) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::two_power;
  node->params = TorusParams{1LL << exp_p, 1LL << exp_q};
  node->exp_a = std::min(exp_p, exp_q);
  node->exp_b = std::max(exp_p, exp_q);
  node->value = two_power_bound(exp_p, exp_q);
  return BoundCertificate(std::move(node));
}

BoundCertificate::Kind BoundCertificate::kind() const { return node_->kind; }
TorusParams BoundCertificate::params() const { return node_->params; }
long long BoundCertificate::value() const { return node_->value; }
long long BoundCertificate::strands() const { return node_->strands; }

BoundCertificate BoundCertificate::left() const {
  if (!node_->left) throw std::logic_error("leaf certificate has no children");
  return BoundCertificate(node_->left);
}

BoundCertificate BoundCertificate::right() const {
  if (!node_->right) throw std::logic_error("leaf certificate has no children");
  return BoundCertificate(node_->right);
}

BoundCertificate BoundCertificate::flipped() const {
  auto node = std::make_shared<Node>(*node_);
  std::swap(node->params.p, node->params.q);
  return BoundCertificate(std::move(node));
}

BoundCertificate glue_bound(const BoundCertificate& left, const BoundCertificate& right) {
  if (left.params().p != right.params().p)
    throw std::invalid_argument("mismatched strand counts");
  auto node = std::make_shared<BoundCertificate::Node>();
  node->kind = BoundCertificate::Kind::glue;
  node->strands = left.params().p;
  node->params = TorusParams{node->strands, left.params().q + right.params().q};
  node->value = left.value() + right.value() + node->strands;
  node->left = left.node_;
  node->right = right.node_;
  return BoundCertificate(std::move(node));
}

namespace detail {

// The parameter of a certificate opposite to the given strand count; params
// orientation is free, so match on either coordinate.
long long other_parameter(const TorusParams& params, long long strands) {
  if (params.p == strands) return params.q;
  if (params.q == strands) return params.p;
  throw std::logic_error("glue child does not involve the strand count");
}

}  // namespace detail

void BoundCertificate::audit() const {
  switch (kind()) {
    case Kind::unknot:
      if (params().p != 1 && params().q != 1)
        throw std::logic_error("unknot step with both parameters above 1");
      if (value() != 0) throw std::logic_error("unknot step with nonzero value");
      return;
    case Kind::two_power: {
      if (node_->exp_a > node_->exp_b)
        throw std::logic_error("two-power exponents unordered");
      if (value() != two_power_bound(node_->exp_a, node_->exp_b))
        throw std::logic_error("two-power step value mismatch");
      long long lo = 1LL << node_->exp_a, hi = 1LL << node_->exp_b;
      if (!((params().p == lo && params().q == hi) ||
            (params().p == hi && params().q == lo)))
        throw std::logic_error("two-power step parameters mismatch");
      return;
    }
    case Kind::glue: {
      BoundCertificate l = left(), r = right();
      l.audit();
      r.audit();
      long long sum = detail::other_parameter(l.params(), strands()) +
                      detail::other_parameter(r.params(), strands());
      if (detail::other_parameter(params(), strands()) != sum)
        throw std::logic_error("glue step parameter mismatch");
      if (value() != l.value() + r.value() + strands())
        throw std::logic_error("glue step value mismatch");
      return;
    }
  }
  throw std::logic_error("corrupt certificate node");
}

namespace {

void render_node(const BoundCertificate& cert, int depth, std::ostringstream& os) {
  using Kind = BoundCertificate::Kind;
  for (int i = 0; i < depth; ++i) os << "  ";
  os << "T(" << cert.params().p << "," << cert.params().q << ") value=" << cert.value();
  switch (cert.kind()) {
    case Kind::unknot:
      os << " unknot\n";
      break;
    case Kind::two_power:
      os << " two-power\n";
      break;
    case Kind::glue:
      os << " glue[strands=" << cert.strands() << "]\n";
      render_node(cert.left(), depth + 1, os);
      render_node(cert.right(), depth + 1, os);
      break;
  }
}

// Binary digits as exponents, most significant first.
std::vector<int> binary_exponents(long long v) {
  std::vector<int> out;
  for (int e = 62; e >= 0; --e)
    if (v & (1LL << e)) out.push_back(e);
  return out;
}

// Certificate for the piece T(2^be, 2^ae); an unknot when either exponent
// is zero.
BoundCertificate piece(int be, int ae) {
  if (be == 0 || ae == 0)
    return BoundCertificate::unknot(TorusParams{1LL << be, 1LL << ae});
  return BoundCertificate::two_power(be, ae);
}

// Proof-order assembly: for each binary digit 2^be of `outer`, glue the
// pieces T(2^be, 2^ae) over the digits of `inner` at cost 2^be, giving
// T(2^be, inner); then glue those across the digits of `outer` at cost
// `inner`, giving T(inner, outer). Digit order is most significant first.
BoundCertificate assemble(long long outer, long long inner) {
  auto outer_digits = binary_exponents(outer);
  auto inner_digits = binary_exponents(inner);
  BoundCertificate acc = BoundCertificate::unknot(TorusParams{1, 1});
  bool have_acc = false;
  for (int be : outer_digits) {
    BoundCertificate row = piece(be, inner_digits.front());
    for (std::size_t i = 1; i < inner_digits.size(); ++i)
      row = glue_bound(row, piece(be, inner_digits[i]));
    BoundCertificate flipped = row.flipped();  // present as T(inner, 2^be)
    acc = have_acc ? glue_bound(acc, flipped) : flipped;
    have_acc = true;
  }
  return acc;
}

}  // namespace

std::string BoundCertificate::render() const {
  std::ostringstream os;
  render_node(*this, 0, os);
  return os.str();
}

BoundCertificate torus_galg_bound(TorusParams tp) {
  if (tp.p < 1 || tp.q < 1) throw std::invalid_argument("torus parameters must be positive");
  if (tp.p == 1 || tp.q == 1) return BoundCertificate::unknot(tp);
  BoundCertificate first = assemble(tp.p, tp.q);    // labels come out as T(q,p)
  BoundCertificate second = assemble(tp.q, tp.p);
  BoundCertificate best = first.value() <= second.value() ? first : second;
  if (best.params().p != tp.p) best = best.flipped();
  return best;
}

double closed_form_bound(TorusParams tp) {
  if (tp.p <= 1 || tp.q <= 1)
    throw std::invalid_argument("closed-form bound requires p, q > 1");
  double p = static_cast<double>(tp.p), q = static_cast<double>(tp.q);
  return p * q / 3.0 + p * std::log2(q) + q * std::log2(p);
}

long long smooth_genus(TorusParams tp) {
  if (tp.p < 2 || tp.q < 2)
    throw std::invalid_argument("smooth genus formula requires p, q >= 2");
  if (std::gcd(tp.p, tp.q) != 1)
    throw std::invalid_argument("smooth genus formula implemented for torus knots only");
  return (tp.p - 1) * (tp.q - 1) / 2;
}

std::vector<RatioRow> ratio_report(long long p_max) {
  if (p_max < 3) throw std::invalid_argument("ratio report requires p_max >= 3");
  std::vector<RatioRow> rows;
  rows.reserve(static_cast<std::size_t>(p_max - 1));
  for (long long p = 2; p <= p_max; ++p) {
    TorusParams tp{p, p + 1};
    long long bound = torus_galg_bound(tp).value();
    long long genus = smooth_genus(tp);
    rows.push_back({p, p + 1, bound, genus,
                    static_cast<double>(bound) / static_cast<double>(genus)});
  }
  return rows;
}

}  // namespace algenus
