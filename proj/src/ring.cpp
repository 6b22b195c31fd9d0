#include "secreg/ring.hpp"

#include <algorithm>
#include <numeric>

namespace secreg {

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  if (exps.size() > kMaxVars) throw PreconditionError("too many variables");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
  return m;
}

static std::vector<int> fill_weights(int n, std::vector<int> w) {
  if (w.empty()) w.assign(n, 1);
  if (static_cast<int>(w.size()) != n) throw PreconditionError("weight vector has wrong length");
  for (int x : w)
    if (x <= 0) throw PreconditionError("order weights must be positive");
  return w;
}

MonomialOrder MonomialOrder::grevlex(int nvars, std::vector<int> weights) {
  MonomialOrder o;
  o.n_ = nvars;
  o.kind_ = OrderKind::Grevlex;
  o.w_ = fill_weights(nvars, std::move(weights));
  o.unit_weights_ = std::all_of(o.w_.begin(), o.w_.end(), [](int x) { return x == 1; });
  return o;
}

MonomialOrder MonomialOrder::lex(int nvars) {
  MonomialOrder o;
  o.n_ = nvars;
  o.kind_ = OrderKind::Lex;
  o.w_.assign(nvars, 1);
  return o;
}

MonomialOrder MonomialOrder::block(int nvars, std::vector<OrderBlock> blocks, std::vector<int> weights) {
  int next = 0;
  for (const auto& b : blocks) {
    if (b.begin != next || b.end <= b.begin || b.kind == OrderKind::Block)
      throw PreconditionError("block order blocks must tile the variables");
    next = b.end;
  }
  if (next != nvars) throw PreconditionError("block order blocks must tile the variables");
  MonomialOrder o;
  o.n_ = nvars;
  o.kind_ = OrderKind::Block;
  o.w_ = fill_weights(nvars, std::move(weights));
  o.unit_weights_ = false;
  o.blocks_ = std::move(blocks);
  return o;
}

MonomialOrder MonomialOrder::elimination(int nvars, int split, std::vector<int> weights) {
  if (split <= 0 || split >= nvars) throw PreconditionError("elimination split out of range");
  return block(nvars, {{0, split, OrderKind::Grevlex}, {split, nvars, OrderKind::Grevlex}},
               std::move(weights));
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Block:
      if (blocks_.size() == 2 && blocks_[0].kind == OrderKind::Grevlex && blocks_[1].kind == OrderKind::Grevlex)
        return "block:" + std::to_string(blocks_[0].end);
      return "block";
  }
  return "?";
}

std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  if (nvars == 0) {
    if (deg == 0) out.emplace_back();
    return out;
  }
  // Exponent vectors in lex-descending order, then sorted to grevlex.
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, deg);
  auto ord = MonomialOrder::grevlex(nvars);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return out;
}

Ring::Ring(std::uint32_t characteristic, std::vector<std::string> vars, MonomialOrder order,
           std::vector<int> grading)
    : char_(characteristic), names_(std::move(vars)), order_(std::move(order)), grading_(std::move(grading)) {
  if (char_ != 0 && !is_prime(char_)) throw PreconditionError("characteristic must be 0 or prime");
  if (names_.empty() || names_.size() > kMaxVars)
    throw PreconditionError("ring needs between 1 and " + std::to_string(kMaxVars) + " variables");
  if (order_.nvars() != nvars()) throw PreconditionError("order and ring disagree on variable count");
  if (grading_.empty()) grading_.assign(names_.size(), 1);
  if (grading_.size() != names_.size()) throw PreconditionError("grading has wrong length");
  for (int g : grading_)
    if (g < 0) throw PreconditionError("negative grading weight");
  standard_grading_ = std::all_of(grading_.begin(), grading_.end(), [](int g) { return g == 1; });
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw PreconditionError("duplicate variable " + names_[i]);
}

int Ring::var_index(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

bool Ring::operator==(const Ring& o) const {
  return char_ == o.char_ && names_ == o.names_ && order_ == o.order_ && grading_ == o.grading_;
}

std::string Ring::header() const {
  std::string s = "ring " + std::to_string(char_) + " ";
  for (int i = 0; i < nvars(); ++i) {
    if (i) s += ",";
    s += names_[i];
  }
  return s + " " + order_.name();
}

RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> vars, MonomialOrder order,
                  std::vector<int> grading) {
  return std::make_shared<const Ring>(characteristic, std::move(vars), std::move(order), std::move(grading));
}

RingPtr make_ring(std::uint32_t characteristic, int nvars, const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back(prefix + std::to_string(i));
  return make_ring(characteristic, std::move(names), MonomialOrder::grevlex(nvars));
}

RingPtr with_order(const RingPtr& R, MonomialOrder order, std::vector<int> grading) {
  if (grading.empty()) grading = R->grading();
  return make_ring(R->characteristic(), R->names(), std::move(order), std::move(grading));
}

}  // namespace secreg
