#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "varwit/field.hpp"

namespace varwit {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Square matrix over GF(p) with raw residue entries. Lightweight on purpose:
/// closure enumeration touches these in the hundred-thousands.
class GpMat {
 public:
  GpMat(std::int64_t p, std::size_t n)
      : p_(p), n_(n), e_(n * n, 0) {}

  static GpMat identity(std::int64_t p, std::size_t n) {
    GpMat m(p, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static GpMat from_rows(std::int64_t p,
                         const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t n = rows.size();
    GpMat m(p, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n)
        throw std::invalid_argument("GpMat: matrix must be square");
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = ((rows[i][j] % p) + p) % p;
    }
    return m;
  }

  std::int64_t p() const { return p_; }
  std::size_t n() const { return n_; }

  std::int64_t& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  GpMat operator*(const GpMat& o) const {
    GpMat m(p_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        std::int64_t a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
          m.at(i, j) = (m.at(i, j) + a * o.at(k, j)) % p_;
      }
    return m;
  }

  std::optional<GpMat> try_inverse() const {
    GpMat a(*this), inv = identity(p_, n_);
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t piv = col;
      while (piv < n_ && a.at(piv, col) == 0) ++piv;
      if (piv == n_) return std::nullopt;
      if (piv != col)
        for (std::size_t j = 0; j < n_; ++j) {
          std::swap(a.at(piv, j), a.at(col, j));
          std::swap(inv.at(piv, j), inv.at(col, j));
        }
      std::int64_t s = mod_inverse(a.at(col, col));
      for (std::size_t j = 0; j < n_; ++j) {
        a.at(col, j) = a.at(col, j) * s % p_;
        inv.at(col, j) = inv.at(col, j) * s % p_;
      }
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == col || a.at(i, col) == 0) continue;
        std::int64_t f = a.at(i, col);
        for (std::size_t j = 0; j < n_; ++j) {
          a.at(i, j) = ((a.at(i, j) - f * a.at(col, j)) % p_ + p_) % p_;
          inv.at(i, j) = ((inv.at(i, j) - f * inv.at(col, j)) % p_ + p_) % p_;
        }
      }
    }
    return inv;
  }

  GpMat inverse() const {
    auto inv = try_inverse();
    if (!inv) throw std::invalid_argument("GpMat: matrix is singular");
    return *inv;
  }

  bool is_identity() const { return *this == identity(p_, n_); }

  bool operator==(const GpMat& o) const {
    return p_ == o.p_ && n_ == o.n_ && e_ == o.e_;
  }
  bool operator!=(const GpMat& o) const { return !(*this == o); }

  /// Canonical byte key for set membership: row-major residue sequence.
  std::string key() const {
    return std::string(reinterpret_cast<const char*>(e_.data()),
                       e_.size() * sizeof(std::int64_t));
  }

  const std::vector<std::int64_t>& entries() const { return e_; }

 private:
  std::int64_t mod_inverse(std::int64_t a) const {
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return ((t % p_) + p_) % p_;
  }

  std::int64_t p_;
  std::size_t n_;
  std::vector<std::int64_t> e_;
};

inline GpMat conjugate(const GpMat& g, const GpMat& s) {
  return g.inverse() * s * g;
}

inline GpMat group_commutator(const GpMat& g, const GpMat& h) {
  return g.inverse() * h.inverse() * g * h;  // [g,h] = g^-1 h^-1 g h
}

constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Finite subgroup of GL(n, p) given by labeled generators.
class MatrixGroup {
 public:
  MatrixGroup(std::int64_t p, std::size_t n,
              std::vector<std::pair<std::string, GpMat>> generators)
      : p_(p), n_(n), gens_(std::move(generators)) {
    if (!FieldSpec::is_prime(p))
      throw std::invalid_argument("MatrixGroup: p must be prime");
    for (const auto& [label, g] : gens_) {
      if (g.p() != p || g.n() != n)
        throw std::invalid_argument("MatrixGroup: generator shape mismatch");
      if (!g.try_inverse())
        throw std::invalid_argument("MatrixGroup: generator '" + label +
                                    "' is not invertible");
    }
  }

  std::int64_t p() const { return p_; }
  std::size_t n() const { return n_; }
  const std::vector<std::pair<std::string, GpMat>>& generators() const {
    return gens_;
  }

  const GpMat* find(const std::string& label) const {
    for (const auto& [l, g] : gens_)
      if (l == label) return &g;
    return nullptr;
  }

 private:
  std::int64_t p_;
  std::size_t n_;
  std::vector<std::pair<std::string, GpMat>> gens_;
};

/// Enumerated closure of a generating set. Immutable after construction.
class ElementSet {
 public:
  static ElementSet closure(std::int64_t p, std::size_t n,
                            const std::vector<GpMat>& gens,
                            std::size_t cap = kDefaultEnumerationCap) {
    if (cap < 1) throw std::invalid_argument("ElementSet: cap must be >= 1");
    ElementSet s;
    GpMat id = GpMat::identity(p, n);
    s.push(id);
    std::deque<GpMat> queue{id};
    while (!queue.empty()) {
      GpMat cur = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        GpMat next = cur * g;
        if (s.keys_.count(next.key())) continue;
        if (s.elements_.size() + 1 > cap)
          throw CapExceeded("enumeration cap of " + std::to_string(cap) +
                            " elements exceeded");
        s.push(next);
        queue.push_back(std::move(next));
      }
    }
    return s;
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<GpMat>& elements() const { return elements_; }
  bool contains(const GpMat& g) const { return keys_.count(g.key()) != 0; }

  bool operator==(const ElementSet& o) const {
    return order() == o.order() && keys_ == o.keys_;
  }

 private:
  void push(const GpMat& g) {
    keys_.insert(g.key());
    elements_.push_back(g);
  }

  std::vector<GpMat> elements_;
  std::unordered_set<std::string> keys_;
};

inline ElementSet enumerate(const MatrixGroup& G,
                            std::size_t cap = kDefaultEnumerationCap) {
  std::vector<GpMat> gens;
  for (const auto& [label, g] : G.generators()) gens.push_back(g);
  return ElementSet::closure(G.p(), G.n(), gens, cap);
}

/// Subgroup generated by the seeds and closed under conjugation by G's
/// generators (the normal closure in <G's generators>).
inline ElementSet normal_closure(const MatrixGroup& G,
                                 std::vector<GpMat> seeds,
                                 std::size_t cap = kDefaultEnumerationCap) {
  for (;;) {
    ElementSet S = ElementSet::closure(G.p(), G.n(), seeds, cap);
    bool grew = false;
    for (const auto& s : S.elements()) {
      for (const auto& [label, g] : G.generators()) {
        GpMat c = conjugate(g, s);
        if (!S.contains(c)) {
          seeds.push_back(c);
          grew = true;
        }
      }
      if (grew) break;
    }
    if (!grew) return S;
  }
}

/// [G, H]: the normal closure of all [g, h] with g over G's generators and
/// h over the given elements of H.
inline ElementSet commutator_subgroup(const MatrixGroup& G,
                                      const std::vector<GpMat>& h_elements,
                                      std::size_t cap = kDefaultEnumerationCap) {
  std::vector<GpMat> seeds;
  std::unordered_set<std::string> seen;
  for (const auto& [label, g] : G.generators())
    for (const auto& h : h_elements) {
      GpMat c = group_commutator(g, h);
      if (seen.insert(c.key()).second) seeds.push_back(c);
    }
  return normal_closure(G, std::move(seeds), cap);
}

/// Brute-force [A, B]: commutators over all element pairs, then closure.
/// Test oracle for the generator-based computation.
inline ElementSet commutator_subgroup_bruteforce(
    const MatrixGroup& G, const std::vector<GpMat>& a_elements,
    const std::vector<GpMat>& b_elements,
    std::size_t cap = kDefaultEnumerationCap) {
  std::vector<GpMat> seeds;
  std::unordered_set<std::string> seen;
  for (const auto& a : a_elements)
    for (const auto& b : b_elements) {
      GpMat c = group_commutator(a, b);
      if (seen.insert(c.key()).second) seeds.push_back(c);
    }
  return normal_closure(G, std::move(seeds), cap);
}

struct GroupSeriesReport {
  std::vector<ElementSet> terms;       // term 0 = the whole group
  std::optional<std::size_t> length;   // nilpotency class / derived length

  std::vector<std::size_t> orders() const {
    std::vector<std::size_t> o;
    for (const auto& t : terms) o.push_back(t.order());
    return o;
  }
};

namespace detail {

template <typename Step>
GroupSeriesReport compute_group_series(ElementSet whole, Step step) {
  GroupSeriesReport rep{{std::move(whole)}, std::nullopt};
  for (;;) {
    const ElementSet& prev = rep.terms.back();
    if (prev.order() == 1) {
      rep.length = rep.terms.size() - 1;
      return rep;
    }
    ElementSet next = step(prev);
    if (next == prev) return rep;  // stabilized at a nontrivial term
    rep.terms.push_back(std::move(next));
  }
}

}  // namespace detail

/// gamma_0 = G, gamma_{k+1} = [G, gamma_k].
inline GroupSeriesReport lower_central_series_grp(
    const MatrixGroup& G, std::size_t cap = kDefaultEnumerationCap) {
  return detail::compute_group_series(
      enumerate(G, cap), [&](const ElementSet& prev) {
        return commutator_subgroup(G, prev.elements(), cap);
      });
}

/// G^(0) = G, G^(k+1) = [G^(k), G^(k)]. The first step uses generator
/// commutators plus normal closure; later terms are small enough for all
/// element pairs.
inline GroupSeriesReport derived_series_grp(
    const MatrixGroup& G, std::size_t cap = kDefaultEnumerationCap) {
  bool first = true;
  return detail::compute_group_series(
      enumerate(G, cap), [&](const ElementSet& prev) {
        if (first) {
          first = false;
          std::vector<GpMat> gens;
          for (const auto& [label, g] : G.generators()) gens.push_back(g);
          return commutator_subgroup_bruteforce(G, gens, gens, cap);
        }
        return commutator_subgroup_bruteforce(G, prev.elements(),
                                              prev.elements(), cap);
      });
}

/// G ⋉ Z_p^n inside GL(n+1, p): block matrices with g in the top-left,
/// the translation vector in the last column, bottom row (0,...,0,1).
inline MatrixGroup vector_semidirect(const MatrixGroup& G) {
  std::size_t n = G.n();
  std::vector<std::pair<std::string, GpMat>> gens;
  for (const auto& [label, g] : G.generators()) {
    GpMat m = GpMat::identity(G.p(), n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = g.at(i, j);
    gens.emplace_back(label, std::move(m));
  }
  for (std::size_t i = 0; i < n; ++i) {
    GpMat t = GpMat::identity(G.p(), n + 1);
    t.at(i, n) = 1;
    gens.emplace_back("t" + std::to_string(i + 1), std::move(t));
  }
  return MatrixGroup(G.p(), n + 1, std::move(gens));
}

inline std::size_t element_order(const GpMat& g) {
  if (!g.try_inverse())
    throw std::invalid_argument("element_order: matrix is singular");
  GpMat cur = g;
  std::size_t k = 1;
  while (!cur.is_identity()) {
    cur = cur * g;
    ++k;
  }
  return k;
}

inline std::size_t group_exponent(const ElementSet& S) {
  std::size_t e = 1;
  for (const auto& g : S.elements()) e = std::lcm(e, element_order(g));
  return e;
}

// ---------------------------------------------------------------------------
// Relation words: "[x,a]*b", "x^5", "a^-1*b", with [g,h] = g^-1 h^-1 g h.

class RelationWord {
 public:
  static RelationWord parse(const std::string& text) {
    RelationWord w;
    w.text_ = text;
    std::size_t pos = 0;
    w.root_ = parse_word(text, pos);
    skip_ws(text, pos);
    if (pos != text.size())
      throw std::invalid_argument("RelationWord: trailing input at position " +
                                  std::to_string(pos));
    return w;
  }

  const std::string& text() const { return text_; }

  GpMat evaluate(const MatrixGroup& G) const { return eval(root_, G); }

 private:
  struct Node {
    enum class Kind { label, power, commutator, product } kind;
    std::string label;
    std::int64_t exponent = 1;
    std::vector<Node> children;
  };

  static void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }

  static Node parse_word(const std::string& s, std::size_t& pos) {
    Node prod{Node::Kind::product, "", 1, {}};
    prod.children.push_back(parse_factor(s, pos));
    for (;;) {
      skip_ws(s, pos);
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        prod.children.push_back(parse_factor(s, pos));
      } else {
        break;
      }
    }
    return prod.children.size() == 1 ? prod.children[0] : prod;
  }

  static Node parse_factor(const std::string& s, std::size_t& pos) {
    Node atom = parse_atom(s, pos);
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip_ws(s, pos);
      std::size_t start = pos;
      if (pos < s.size() && s[pos] == '-') ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == start)
        throw std::invalid_argument("RelationWord: expected exponent");
      Node p{Node::Kind::power, "", std::stoll(s.substr(start, pos - start)), {}};
      p.children.push_back(std::move(atom));
      return p;
    }
    return atom;
  }

  static Node parse_atom(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    if (pos >= s.size())
      throw std::invalid_argument("RelationWord: unexpected end of input");
    if (s[pos] == '[') {
      ++pos;
      Node c{Node::Kind::commutator, "", 1, {}};
      c.children.push_back(parse_word(s, pos));
      skip_ws(s, pos);
      if (pos >= s.size() || s[pos] != ',')
        throw std::invalid_argument("RelationWord: expected ',' in commutator");
      ++pos;
      c.children.push_back(parse_word(s, pos));
      skip_ws(s, pos);
      if (pos >= s.size() || s[pos] != ']')
        throw std::invalid_argument("RelationWord: expected ']' in commutator");
      ++pos;
      return c;
    }
    if (s[pos] == '(') {
      ++pos;
      Node inner = parse_word(s, pos);
      skip_ws(s, pos);
      if (pos >= s.size() || s[pos] != ')')
        throw std::invalid_argument("RelationWord: expected ')'");
      ++pos;
      return inner;
    }
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start)
      throw std::invalid_argument("RelationWord: expected generator label at position " +
                                  std::to_string(pos));
    return Node{Node::Kind::label, s.substr(start, pos - start), 1, {}};
  }

  static GpMat eval(const Node& node, const MatrixGroup& G) {
    switch (node.kind) {
      case Node::Kind::label: {
        const GpMat* g = G.find(node.label);
        if (!g)
          throw std::invalid_argument("RelationWord: unknown generator '" +
                                      node.label + "'");
        return *g;
      }
      case Node::Kind::power: {
        GpMat base = eval(node.children[0], G);
        if (node.exponent < 0) base = base.inverse();
        GpMat r = GpMat::identity(G.p(), G.n());
        for (std::int64_t i = 0; i < std::abs(node.exponent); ++i) r = r * base;
        return r;
      }
      case Node::Kind::commutator:
        return group_commutator(eval(node.children[0], G),
                                eval(node.children[1], G));
      case Node::Kind::product: {
        GpMat r = GpMat::identity(G.p(), G.n());
        for (const auto& c : node.children) r = r * eval(c, G);
        return r;
      }
    }
    throw std::logic_error("RelationWord: unreachable");
  }

  std::string text_;
  Node root_;
};

inline bool evaluate_relation(const MatrixGroup& G, const RelationWord& w) {
  return w.evaluate(G).is_identity();
}

}  // namespace varwit
