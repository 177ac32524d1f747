#include "eqpos/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace eqpos {
namespace {

constexpr int kMaxComponentRank = 8;

void validate_component(const CartanComponent& c) {
  const auto name = std::string(1, static_cast<char>(c.family)) + std::to_string(c.rank);
  bool ok = false;
  switch (c.family) {
    case Family::A: ok = c.rank >= 1; break;
    case Family::B:
    case Family::C: ok = c.rank >= 2; break;
    case Family::D: ok = c.rank >= 3; break;
    case Family::E: ok = c.rank >= 6 && c.rank <= 8; break;
    case Family::F: ok = c.rank == 4; break;
    case Family::G: ok = c.rank == 2; break;
  }
  if (!ok) throw InvalidInput("unsupported Cartan type " + name);
  if (c.rank > kMaxComponentRank)
    throw InvalidInput("Cartan type " + name + " exceeds the supported rank " +
                       std::to_string(kMaxComponentRank));
}

// Squared lengths (short = 2) and Dynkin bonds, Bourbaki numbering.
struct Dynkin {
  std::vector<std::int64_t> length2;
  std::vector<std::pair<int, int>> bonds;
};

Dynkin dynkin(const CartanComponent& c) {
  const int n = c.rank;
  Dynkin d;
  d.length2.assign(n, 2);
  auto chain = [&](int first, int last) {
    for (int i = first; i < last; ++i) d.bonds.emplace_back(i, i + 1);
  };
  switch (c.family) {
    case Family::A:
      chain(0, n - 1);
      break;
    case Family::B:
      chain(0, n - 1);
      for (int i = 0; i < n - 1; ++i) d.length2[i] = 4;
      break;
    case Family::C:
      chain(0, n - 1);
      d.length2[n - 1] = 4;
      break;
    case Family::D:
      chain(0, n - 2);
      d.bonds.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-...-n with 2 attached to 4.
      d.bonds.emplace_back(0, 2);
      d.bonds.emplace_back(1, 3);
      chain(2, n - 1);
      break;
    case Family::F:
      chain(0, 3);
      d.length2[0] = d.length2[1] = 4;
      break;
    case Family::G:
      chain(0, 1);
      d.length2[1] = 6;
      break;
  }
  return d;
}

}  // namespace

CartanLabel parse_cartan_label(std::string_view text) {
  CartanLabel out;
  std::size_t pos = 0;
  if (text.empty()) throw InvalidInput("empty Cartan type");
  while (pos <= text.size()) {
    std::size_t end = pos;
    while (end < text.size() && std::tolower(static_cast<unsigned char>(text[end])) != 'x') ++end;
    const auto part = text.substr(pos, end - pos);
    if (part.size() < 2) throw InvalidInput("malformed Cartan type '" + std::string(text) + "'");
    const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    if (fam < 'A' || fam > 'G') throw InvalidInput("unknown root system family '" + std::string(1, part[0]) + "'");
    int rank = 0;
    for (char ch : part.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 1000)
        throw InvalidInput("malformed Cartan type '" + std::string(text) + "'");
      rank = rank * 10 + (ch - '0');
    }
    CartanComponent comp{static_cast<Family>(fam), rank};
    if (comp.family == Family::D && rank == 2) {
      out.push_back({Family::A, 1});
      out.push_back({Family::A, 1});
    } else {
      validate_component(comp);
      out.push_back(comp);
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string to_string(const CartanLabel& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out += 'x';
    out += static_cast<char>(label[i].family);
    out += std::to_string(label[i].rank);
  }
  return out;
}

bool Root::is_positive() const {
  bool nonzero = false;
  for (auto c : coords) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

RootSystem RootSystem::build(const CartanLabel& type) {
  if (type.empty()) throw InvalidInput("empty Cartan type");
  RootSystem rs;
  rs.type_ = type;
  int n = 0;
  for (const auto& c : type) {
    validate_component(c);
    rs.components_.push_back({c, n});
    n += c.rank;
  }
  rs.rank_ = n;
  rs.gram_ = IntMat::Zero(n, n);
  for (const auto& span : rs.components_) {
    const Dynkin d = dynkin(span.component);
    for (int i = 0; i < span.component.rank; ++i) rs.gram_(span.offset + i, span.offset + i) = d.length2[i];
    for (auto [i, j] : d.bonds) {
      const auto v = -std::max(d.length2[i], d.length2[j]) / 2;
      rs.gram_(span.offset + i, span.offset + j) = v;
      rs.gram_(span.offset + j, span.offset + i) = v;
    }
  }
  rs.cartan_ = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.cartan_(i, j) = 2 * rs.gram_(i, j) / rs.gram_(i, i);

  // Closure of the simple roots under the simple reflections.
  std::set<IntVec, LexLess> seen;
  std::deque<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec e = IntVec::Zero(n);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVec x = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IntVec y = x;
      y[i] -= rs.cartan_.row(i).dot(x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  for (const auto& x : seen) {
    Root r{x};
    if (r.is_positive()) rs.positive_roots_.push_back(std::move(r));
  }
  return rs;
}

Root RootSystem::simple_root(int i) const {
  IntVec e = IntVec::Zero(rank_);
  e[i] = 1;
  return Root{e};
}

Weight RootSystem::fundamental_weight(int i) const {
  IntVec e = IntVec::Zero(rank_);
  e[i] = 1;
  return Weight{e};
}

Coroot RootSystem::simple_coroot(int i) const {
  IntVec e = IntVec::Zero(rank_);
  e[i] = 1;
  return Coroot{e};
}

bool RootSystem::is_positive_root(const IntVec& coords) const {
  if (coords.size() != rank_) return false;
  return std::binary_search(positive_roots_.begin(), positive_roots_.end(), Root{coords});
}

bool RootSystem::is_root(const IntVec& coords) const {
  return is_positive_root(coords) || is_positive_root(-coords);
}

std::int64_t RootSystem::squared_length(const Root& root) const {
  return root.coords.dot(gram_ * root.coords);
}

Weight RootSystem::to_weight(const Root& root) const { return Weight{cartan_ * root.coords}; }

Coroot coroot(const RootSystem& rs, const Root& beta) {
  if (!rs.is_root(beta.coords)) throw InvalidInput("not a root: " + format_vec(beta.coords));
  const std::int64_t len2 = rs.squared_length(beta);
  // alpha_i = (|alpha_i|^2 / 2) alpha_i^vee, hence beta^vee = sum_i beta_i |alpha_i|^2 / |beta|^2 alpha_i^vee.
  IntVec c(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    const std::int64_t num = beta.coords[i] * rs.gram()(i, i);
    if (num % len2 != 0)
      throw ConsistencyFailure("non-integral coroot coefficient for " + format_vec(beta.coords));
    c[i] = num / len2;
  }
  return Coroot{c};
}

std::int64_t pairing(const RootSystem& rs, const Weight& nu, const Coroot& c) {
  if (nu.coords.size() != rs.rank() || c.coords.size() != rs.rank())
    throw InvalidInput("pairing: dimension mismatch");
  return nu.coords.dot(c.coords);
}

std::int64_t pairing(const RootSystem& rs, const Root& x, const Coroot& c) {
  return pairing(rs, rs.to_weight(x), c);
}

Root reflect(const RootSystem& rs, int i, const Root& x) {
  if (i < 0 || i >= rs.rank()) throw InvalidInput("simple index out of range");
  if (x.coords.size() != rs.rank()) throw InvalidInput("reflect: dimension mismatch");
  Root out = x;
  out.coords[i] -= rs.cartan().row(i).dot(x.coords);
  return out;
}

Weight reflect(const RootSystem& rs, int i, const Weight& x) {
  if (i < 0 || i >= rs.rank()) throw InvalidInput("simple index out of range");
  if (x.coords.size() != rs.rank()) throw InvalidInput("reflect: dimension mismatch");
  // alpha_i has fundamental-weight coordinates cartan().col(i).
  Weight out = x;
  out.coords -= x.coords[i] * rs.cartan().col(i);
  return out;
}

int simple_index_of(const RootSystem& rs, const Root& alpha) {
  for (int i = 0; i < rs.rank(); ++i)
    if (alpha.coords == rs.simple_root(i).coords) return i;
  return -1;
}

Root reflect(const RootSystem& rs, const Root& alpha, const Root& x) {
  const int i = simple_index_of(rs, alpha);
  if (i < 0) throw InvalidInput("reflect: " + format_vec(alpha.coords) + " is not a simple root");
  return reflect(rs, i, x);
}

Weight reflect(const RootSystem& rs, const Root& alpha, const Weight& x) {
  const int i = simple_index_of(rs, alpha);
  if (i < 0) throw InvalidInput("reflect: " + format_vec(alpha.coords) + " is not a simple root");
  return reflect(rs, i, x);
}

}  // namespace eqpos
