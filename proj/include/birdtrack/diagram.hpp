#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "birdtrack/errors.hpp"
#include "birdtrack/permutation.hpp"
#include "birdtrack/radical.hpp"

namespace birdtrack {

enum class Orientation { Fundamental, Antifundamental };
enum class Role { Operator, Ket, Bra };

inline Orientation flip(Orientation o) {
  return o == Orientation::Fundamental ? Orientation::Antifundamental : Orientation::Fundamental;
}

/**
 * Ordered slot orientations plus a role.
 *
 * Port numbering: an operator on S slots has out-port s = s and in-port
 * s = S + s; a ket or bra has one port per leg. Every line runs from a
 * "lower" port to an "upper" port. For operators the upper port of a
 * fundamental slot is its out-port and of an antifundamental slot its
 * in-port. For kets the fundamental legs are the upper ports and the
 * antifundamental legs the lower ones. A linking lists, for each lower
 * port j (in slot or leg order), the index of the upper port it meets.
 */
class LegSignature {
 public:
  LegSignature() = default;
  LegSignature(std::vector<Orientation> slots, Role role) : slots_(std::move(slots)), role_(role) { index(); }

  /// "qqb" style: q = fundamental, b = antifundamental.
  static LegSignature parse(const std::string& orientations, Role role) {
    std::vector<Orientation> s;
    for (char c : orientations) {
      if (c == 'q') s.push_back(Orientation::Fundamental);
      else if (c == 'b') s.push_back(Orientation::Antifundamental);
      else fail(ErrorCode::ParseError, std::string("orientation character '") + c + "'");
    }
    return LegSignature(std::move(s), role);
  }
  /// m fundamental then n antifundamental slots.
  static LegSignature mixed(int m, int n, Role role = Role::Operator) {
    std::vector<Orientation> s(m, Orientation::Fundamental);
    s.insert(s.end(), n, Orientation::Antifundamental);
    return LegSignature(std::move(s), role);
  }
  static LegSignature ket(int k) { return mixed(k, k, Role::Ket); }

  const std::vector<Orientation>& slots() const { return slots_; }
  Role role() const { return role_; }
  bool is_operator() const { return role_ == Role::Operator; }
  bool is_state() const { return role_ != Role::Operator; }
  int size() const { return static_cast<int>(slots_.size()); }
  int count(Orientation o) const {
    int c = 0;
    for (auto s : slots_) c += (s == o);
    return c;
  }
  int num_ports() const { return is_operator() ? 2 * size() : size(); }
  int num_lines() const { return static_cast<int>(lower_.size()); }
  bool balanced() const { return lower_.size() == upper_.size(); }
  int lower_port(int j) const { return lower_[j]; }
  int upper_port(int i) const { return upper_[i]; }
  /// (is_upper, line-side index) of a port.
  std::pair<bool, int> classify(int port) const { return cls_[port]; }

  std::string orientation_string() const {
    std::string s;
    for (auto o : slots_) s += (o == Orientation::Fundamental ? 'q' : 'b');
    return s;
  }
  std::string role_string() const {
    return role_ == Role::Operator ? "operator" : role_ == Role::Ket ? "ket" : "bra";
  }

  LegSignature with_role(Role r) const { return LegSignature(slots_, r); }

  friend bool operator==(const LegSignature& a, const LegSignature& b) {
    return a.role_ == b.role_ && a.slots_ == b.slots_;
  }

 private:
  void index() {
    lower_.clear();
    upper_.clear();
    const int S = size();
    cls_.assign(num_ports(), {false, -1});
    if (is_operator()) {
      for (int s = 0; s < S; ++s) {
        bool fund = slots_[s] == Orientation::Fundamental;
        lower_.push_back(fund ? S + s : s);
        upper_.push_back(fund ? s : S + s);
      }
    } else {
      for (int s = 0; s < S; ++s) {
        if (slots_[s] == Orientation::Fundamental) upper_.push_back(s);
        else lower_.push_back(s);
      }
    }
    for (int j = 0; j < static_cast<int>(lower_.size()); ++j) cls_[lower_[j]] = {false, j};
    for (int i = 0; i < static_cast<int>(upper_.size()); ++i) cls_[upper_[i]] = {true, i};
  }

  std::vector<Orientation> slots_;
  Role role_ = Role::Operator;
  std::vector<int> lower_, upper_;
  std::vector<std::pair<bool, int>> cls_;
};

/// One primitive invariant: a signature and its linking.
struct PrimitiveDiagram {
  LegSignature signature;
  Perm linking;

  friend bool operator==(const PrimitiveDiagram& a, const PrimitiveDiagram& b) {
    return a.signature == b.signature && a.linking == b.linking;
  }
};

/**
 * Glues diagram pieces into one port space and reads off the resulting
 * linking and the number of closed loops.
 */
class Contraction {
 public:
  /// Registers a piece and returns the global id of its port 0.
  int add_piece(const LegSignature& sig) {
    int offset = static_cast<int>(partner_.size());
    pieces_.push_back({sig, offset});
    partner_.resize(offset + sig.num_ports(), -1);
    glue_.resize(partner_.size(), -1);
    external_.resize(partner_.size(), -1);
    return offset;
  }
  void set_linking(int piece, const Perm& linking) {
    const auto& [sig, off] = pieces_[piece];
    for (int j = 0; j < sig.num_lines(); ++j) {
      int a = off + sig.lower_port(j), b = off + sig.upper_port(linking[j]);
      partner_[a] = b;
      partner_[b] = a;
    }
  }
  void glue(int a, int b) {
    glue_[a] = b;
    glue_[b] = a;
  }
  void external(int global_port, int result_port) { external_[global_port] = result_port; }

  /// Linking on `result` and loop count.
  std::pair<Perm, int> run(const LegSignature& result) {
    const int P = static_cast<int>(partner_.size());
    visited_.assign(P, 0);
    Perm out(result.num_lines(), -1);
    for (int p = 0; p < P; ++p) {
      if (external_[p] < 0 || visited_[p]) continue;
      int cur = p;
      while (true) {
        visited_[cur] = 1;
        int q = partner_[cur];
        visited_[q] = 1;
        if (external_[q] >= 0) {
          auto [up_a, ia] = result.classify(external_[p]);
          auto [up_b, ib] = result.classify(external_[q]);
          if (up_a == up_b) fail(ErrorCode::OrientationViolation, "contraction joins two ports of the same direction");
          if (up_a) out[ib] = ia;
          else out[ia] = ib;
          break;
        }
        cur = glue_[q];
        if (cur < 0) fail(ErrorCode::SignatureMismatch, "dangling port in contraction");
      }
    }
    int loops = 0;
    for (int p = 0; p < P; ++p) {
      if (visited_[p]) continue;
      int cur = p;
      do {
        visited_[cur] = 1;
        int q = partner_[cur];
        visited_[q] = 1;
        cur = glue_[q];
        if (cur < 0) fail(ErrorCode::SignatureMismatch, "dangling port in contraction");
      } while (cur != p);
      ++loops;
    }
    return {out, loops};
  }

 private:
  std::vector<std::pair<LegSignature, int>> pieces_;
  std::vector<int> partner_, glue_, external_;
  std::vector<char> visited_;
};

/// Finite linear combination of primitive diagrams sharing one signature.
class InvariantElement {
 public:
  using Terms = std::map<Perm, RadicalCoefficient>;

  InvariantElement() = default;
  explicit InvariantElement(LegSignature sig) : sig_(std::move(sig)) {}

  static InvariantElement primitive(const LegSignature& sig, const Perm& linking, const RadicalCoefficient& c = 1) {
    if (!sig.balanced()) fail(ErrorCode::OrientationViolation, "state legs must pair fundamental with antifundamental");
    if (static_cast<int>(linking.size()) != sig.num_lines()) fail(ErrorCode::InvalidPermutation, "linking length mismatch");
    require_permutation(linking);
    InvariantElement e(sig);
    e.add_term(linking, c);
    return e;
  }
  static InvariantElement identity(const LegSignature& sig) {
    return primitive(sig, identity_perm(sig.num_lines()));
  }
  /// Permutation rho of V^k: input b leaves at output rho(b).
  static InvariantElement permutation(const Perm& rho, const RadicalCoefficient& c = 1) {
    return primitive(LegSignature::mixed(static_cast<int>(rho.size()), 0), rho, c);
  }
  static InvariantElement permutation(const std::string& cycles, int k, const RadicalCoefficient& c = 1) {
    return permutation(parse_cycles(cycles, k), c);
  }

  const LegSignature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RadicalCoefficient coefficient(const Perm& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? RadicalCoefficient() : it->second;
  }

  void add_term(const Perm& p, const RadicalCoefficient& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  InvariantElement& operator+=(const InvariantElement& o) {
    check_same(o);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  InvariantElement& operator-=(const InvariantElement& o) {
    check_same(o);
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
  }
  friend InvariantElement operator+(InvariantElement a, const InvariantElement& b) { return a += b; }
  friend InvariantElement operator-(InvariantElement a, const InvariantElement& b) { return a -= b; }
  friend InvariantElement operator*(const RadicalCoefficient& s, const InvariantElement& a) {
    InvariantElement r(a.sig_);
    if (s.is_zero()) return r;
    for (const auto& [p, c] : a.terms_) r.add_term(p, s * c);
    return r;
  }
  InvariantElement operator-() const { return RadicalCoefficient(-1) * *this; }

  friend bool operator==(const InvariantElement& a, const InvariantElement& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  /// Human-readable sum over linkings in 1-based one-line form.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*[";
      for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i] + 1);
      s += "]";
    }
    return s;
  }

 private:
  void check_same(const InvariantElement& o) const {
    if (!(sig_ == o.sig_)) fail(ErrorCode::SignatureMismatch, "adding elements with different signatures");
  }

  LegSignature sig_;
  Terms terms_;
};

namespace detail {

/// Sums c_a * c_b * N^loops per resulting linking.
class LoopAccumulator {
 public:
  void add(const Perm& p, int loops, const RadicalCoefficient& c) {
    auto& v = acc_[p];
    if (static_cast<int>(v.size()) <= loops) v.resize(loops + 1);
    v[loops] += c;
  }
  InvariantElement finish(const LegSignature& sig) const {
    InvariantElement out(sig);
    for (const auto& [p, v] : acc_) out.add_term(p, fold(v));
    return out;
  }
  static RadicalCoefficient fold(const std::vector<RadicalCoefficient>& v) {
    RadicalCoefficient r;
    for (std::size_t l = 0; l < v.size(); ++l) {
      if (v[l].is_zero()) continue;
      r += l == 0 ? v[l] : RadicalCoefficient(RationalFunction(Polynomial::monomial(l))) * v[l];
    }
    return r;
  }

 private:
  std::map<Perm, std::vector<RadicalCoefficient>> acc_;
};

inline void require_operator(const InvariantElement& a, const char* what) {
  if (!a.signature().is_operator()) fail(ErrorCode::SignatureMismatch, std::string(what) + " needs an operator");
}

/// Pairwise contraction of every term of a with every term of b.
template <typename Setup>
InvariantElement contract_pair(const InvariantElement& a, const InvariantElement& b, const LegSignature& result,
                               Setup&& setup) {
  Contraction c;
  c.add_piece(a.signature());
  c.add_piece(b.signature());
  setup(c);
  LoopAccumulator acc;
  for (const auto& [pa, ca] : a.terms()) {
    c.set_linking(0, pa);
    for (const auto& [pb, cb] : b.terms()) {
      c.set_linking(1, pb);
      auto [p, loops] = c.run(result);
      acc.add(p, loops, ca * cb);
    }
  }
  return acc.finish(result);
}

template <typename Setup>
InvariantElement contract_single(const InvariantElement& a, const LegSignature& result, Setup&& setup) {
  Contraction c;
  c.add_piece(a.signature());
  setup(c);
  LoopAccumulator acc;
  for (const auto& [pa, ca] : a.terms()) {
    c.set_linking(0, pa);
    auto [p, loops] = c.run(result);
    acc.add(p, loops, ca);
  }
  return acc.finish(result);
}

}  // namespace detail

/// A after B: A's in-ports glued to B's out-ports; closed loops give N.
inline InvariantElement compose(const InvariantElement& a, const InvariantElement& b) {
  detail::require_operator(a, "compose");
  if (!(a.signature() == b.signature())) fail(ErrorCode::SignatureMismatch, "compose of different signatures");
  const int S = a.signature().size();
  return detail::contract_pair(a, b, a.signature(), [S](Contraction& c) {
    const int off = 2 * S;
    for (int s = 0; s < S; ++s) {
      c.glue(S + s, off + s);
      c.external(s, s);
      c.external(off + S + s, S + s);
    }
  });
}

/// Operators: in and out swapped (linking inverted). States: ket <-> bra.
inline InvariantElement dagger(const InvariantElement& a) {
  const auto& sig = a.signature();
  if (!sig.is_operator()) {
    InvariantElement r(sig.with_role(sig.role() == Role::Ket ? Role::Bra : Role::Ket));
    for (const auto& [p, c] : a.terms()) r.add_term(p, c);
    return r;
  }
  InvariantElement r(sig);
  for (const auto& [p, c] : a.terms()) r.add_term(inverse(p), c);
  return r;
}

inline RadicalCoefficient trace(const InvariantElement& a) {
  detail::require_operator(a, "trace");
  // Gluing each out-port to its own in-port closes one loop per cycle.
  std::vector<RadicalCoefficient> by_loops;
  for (const auto& [p, c] : a.terms()) {
    int l = cycle_count(p);
    if (static_cast<int>(by_loops.size()) <= l) by_loops.resize(l + 1);
    by_loops[l] += c;
  }
  return detail::LoopAccumulator::fold(by_loops);
}

/// Block-diagonal juxtaposition: a's slots first.
inline InvariantElement tensor(const InvariantElement& a, const InvariantElement& b) {
  const auto& sa = a.signature();
  const auto& sb = b.signature();
  if (sa.role() != sb.role()) fail(ErrorCode::MixedRoleTensor, "tensor of " + sa.role_string() + " and " + sb.role_string());
  std::vector<Orientation> slots = sa.slots();
  slots.insert(slots.end(), sb.slots().begin(), sb.slots().end());
  LegSignature sig(slots, sa.role());
  const int shift = sa.is_operator() ? sa.size() : sa.count(Orientation::Fundamental);
  InvariantElement r(sig);
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      Perm p = pa;
      for (int v : pb) p.push_back(v + shift);
      r.add_term(p, ca * cb);
    }
  }
  return r;
}

/// <A|B>: Tr(A^dagger B) for operators, full leg gluing for states.
inline RadicalCoefficient inner_product(const InvariantElement& a, const InvariantElement& b) {
  const auto& sa = a.signature();
  const auto& sb = b.signature();
  if (sa.slots() != sb.slots() || sa.is_operator() != sb.is_operator())
    fail(ErrorCode::SignatureMismatch, "inner product of different signatures");
  const int P = sa.num_ports();
  Contraction c;
  c.add_piece(sa);
  c.add_piece(sb);
  for (int p = 0; p < P; ++p) c.glue(p, P + p);
  const LegSignature empty({}, Role::Ket);
  std::vector<RadicalCoefficient> by_loops;
  for (const auto& [pa, ca] : a.terms()) {
    c.set_linking(0, pa);
    for (const auto& [pb, cb] : b.terms()) {
      c.set_linking(1, pb);
      int l = c.run(empty).second;
      if (static_cast<int>(by_loops.size()) <= l) by_loops.resize(l + 1);
      by_loops[l] += ca * cb;
    }
  }
  return detail::LoopAccumulator::fold(by_loops);
}

/**
 * Operator on (slots) to a ket. Out-ports keep their orientation, in-ports
 * flip it. Leg order: out-ports of fundamental slots, in-ports of
 * antifundamental slots, out-ports of antifundamental slots, in-ports of
 * fundamental slots; slot order kept within each block.
 */
inline InvariantElement bend(const InvariantElement& a) {
  detail::require_operator(a, "bend");
  const auto& sig = a.signature();
  const int S = sig.size();
  const LegSignature ket = LegSignature::ket(S);
  std::vector<int> target(2 * S);
  int pos = 0;
  for (int s = 0; s < S; ++s)
    if (sig.slots()[s] == Orientation::Fundamental) target[s] = pos++;
  for (int s = 0; s < S; ++s)
    if (sig.slots()[s] == Orientation::Antifundamental) target[S + s] = pos++;
  for (int s = 0; s < S; ++s)
    if (sig.slots()[s] == Orientation::Antifundamental) target[s] = pos++;
  for (int s = 0; s < S; ++s)
    if (sig.slots()[s] == Orientation::Fundamental) target[S + s] = pos++;
  return detail::contract_single(a, ket, [&](Contraction& c) {
    for (int p = 0; p < 2 * S; ++p) c.external(p, target[p]);
  });
}

/// Slot permutation: new slot i is old slot order[i]. If `target` is given
/// its orientations must match the reordered ones.
inline InvariantElement reorder_legs(const InvariantElement& a, const std::vector<int>& order,
                                     const std::vector<Orientation>* target = nullptr) {
  const auto& sig = a.signature();
  const int S = sig.size();
  if (static_cast<int>(order.size()) != S || !is_permutation(order))
    fail(ErrorCode::InvalidPermutation, "slot order is not a permutation of the slots");
  std::vector<Orientation> slots(S);
  for (int i = 0; i < S; ++i) slots[i] = sig.slots()[order[i]];
  if (target && *target != slots) fail(ErrorCode::OrientationViolation, "reordering does not preserve slot orientations");
  LegSignature rs(slots, sig.role());
  Perm where = inverse(order);
  return detail::contract_single(a, rs, [&](Contraction& c) {
    for (int s = 0; s < S; ++s) {
      c.external(s, where[s]);
      if (sig.is_operator()) c.external(S + s, S + where[s]);
    }
  });
}

/// Traces out the listed operator slots.
inline InvariantElement partial_trace(const InvariantElement& a, const std::vector<int>& slots) {
  detail::require_operator(a, "partial_trace");
  const auto& sig = a.signature();
  const int S = sig.size();
  std::vector<char> traced(S, 0);
  for (int s : slots) {
    if (s < 0 || s >= S) fail(ErrorCode::OutOfRange, "slot " + std::to_string(s));
    traced[s] = 1;
  }
  std::vector<Orientation> keep;
  std::vector<int> newpos(S, -1);
  for (int s = 0; s < S; ++s)
    if (!traced[s]) {
      newpos[s] = static_cast<int>(keep.size());
      keep.push_back(sig.slots()[s]);
    }
  const int R = static_cast<int>(keep.size());
  LegSignature rs(keep, Role::Operator);
  return detail::contract_single(a, rs, [&](Contraction& c) {
    for (int s = 0; s < S; ++s) {
      if (traced[s]) {
        c.glue(s, S + s);
      } else {
        c.external(s, newpos[s]);
        c.external(S + s, R + newpos[s]);
      }
    }
  });
}

/// Operator acting on a ket whose legs match its slots.
inline InvariantElement apply(const InvariantElement& op, const InvariantElement& ket) {
  detail::require_operator(op, "apply");
  if (ket.signature().role() != Role::Ket || ket.signature().slots() != op.signature().slots())
    fail(ErrorCode::SignatureMismatch, "operator slots do not match ket legs");
  const int S = op.signature().size();
  return detail::contract_pair(op, ket, ket.signature(), [S](Contraction& c) {
    for (int s = 0; s < S; ++s) {
      c.glue(S + s, 2 * S + s);
      c.external(s, s);
    }
  });
}

/// |ket><bra| as an operator; `bra` is given as a ket and daggered here.
inline InvariantElement outer(const InvariantElement& ket, const InvariantElement& bra) {
  const auto& sk = ket.signature();
  const auto& sb = bra.signature();
  if (sk.is_operator() || sb.is_operator() || sk.slots() != sb.slots())
    fail(ErrorCode::SignatureMismatch, "outer product needs two states with equal legs");
  const int S = sk.size();
  LegSignature rs(sk.slots(), Role::Operator);
  return detail::contract_pair(ket, bra, rs, [S](Contraction& c) {
    for (int s = 0; s < S; ++s) {
      c.external(s, s);
      c.external(S + s, S + s);
    }
  });
}

/// Places operator `a` on the given slots of `sig`, identity elsewhere.
inline InvariantElement embed(const InvariantElement& a, const std::vector<int>& slots, const LegSignature& sig) {
  detail::require_operator(a, "embed");
  const int S = sig.size();
  const int A = a.signature().size();
  if (static_cast<int>(slots.size()) != A) fail(ErrorCode::OutOfRange, "embedding slot count");
  std::vector<int> used(S, 0);
  for (int i = 0; i < A; ++i) {
    int s = slots[i];
    if (s < 0 || s >= S || used[s]) fail(ErrorCode::OutOfRange, "embedding slot " + std::to_string(s));
    if (sig.slots()[s] != a.signature().slots()[i]) fail(ErrorCode::OrientationViolation, "embedding orientation");
    used[s] = 1;
  }
  std::vector<Orientation> rest;
  std::vector<int> rest_slots;
  for (int s = 0; s < S; ++s)
    if (!used[s]) {
      rest.push_back(sig.slots()[s]);
      rest_slots.push_back(s);
    }
  InvariantElement id = InvariantElement::identity(LegSignature(rest, Role::Operator));
  const int R = static_cast<int>(rest.size());
  return detail::contract_pair(a, id, sig, [&](Contraction& c) {
    for (int i = 0; i < A; ++i) {
      c.external(i, slots[i]);
      c.external(A + i, S + slots[i]);
    }
    const int off = 2 * A;
    for (int i = 0; i < R; ++i) {
      c.external(off + i, rest_slots[i]);
      c.external(off + R + i, S + rest_slots[i]);
    }
  });
}

}  // namespace birdtrack
