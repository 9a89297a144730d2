#include "isg/analyzer.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "isg/error.hpp"

namespace isg {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits bits_make(size_t n) { return Bits((n + 63) / 64, 0); }
void bits_set(Bits& b, int i) { b[static_cast<size_t>(i) / 64] |= 1ull << (i % 64); }
bool bits_test(const Bits& b, int i) {
  return (b[static_cast<size_t>(i) / 64] >> (i % 64)) & 1ull;
}
size_t bits_count(const Bits& b) {
  size_t c = 0;
  for (auto w : b) c += static_cast<size_t>(__builtin_popcountll(w));
  return c;
}
Bits bits_union(const Bits& a, const Bits& b) {
  Bits r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] |= b[i];
  return r;
}
bool bits_subset(const Bits& a, const Bits& b) {  // a subseteq b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}
std::vector<int> bits_to_sorted(const Bits& b, size_t n) {
  std::vector<int> out;
  for (size_t i = 0; i < n; ++i)
    if (bits_test(b, static_cast<int>(i))) out.push_back(static_cast<int>(i));
  return out;
}

std::optional<std::pair<long, long>> prime_power(long o) {
  if (o < 2) return std::nullopt;
  for (long p = 2; p * p <= o; ++p)
    if (o % p == 0) {
      long m = o;
      while (m % p == 0) m /= p;
      if (m != 1) return std::nullopt;
      return std::make_pair(p, o);
    }
  return std::make_pair(o, o);  // o itself prime
}

/// Closure of a subset of a group under the operation only; in a finite
/// group this already yields a subgroup.
std::vector<int> group_closure(const FiniteSemigroup& s, std::vector<int> seed) {
  return closure_of(s, seed);
}

/// All subgroups of the group given as `members` (identity e), by
/// incremental generation: extend each known subgroup by one element.
std::vector<std::vector<int>> subgroup_lattice(const FiniteSemigroup& s,
                                               const std::vector<int>& members, int e) {
  std::vector<std::vector<int>> known;
  std::vector<std::vector<int>> queue;
  known.push_back({e});
  queue.push_back({e});
  while (!queue.empty()) {
    std::vector<int> k = std::move(queue.back());
    queue.pop_back();
    for (int g : members) {
      if (std::binary_search(k.begin(), k.end(), g)) continue;
      std::vector<int> seed = k;
      seed.push_back(g);
      std::vector<int> m = group_closure(s, seed);
      if (std::find(known.begin(), known.end(), m) == known.end()) {
        known.push_back(m);
        queue.push_back(m);
      }
    }
  }
  return known;
}

}  // namespace

MonogenicProfile monogenic_profile(const FiniteSemigroup& s, int x) {
  if (x < 0 || static_cast<size_t>(x) >= s.size())
    raise(errc::invalid_input, "element index out of range");
  std::unordered_map<int, int> first_power;
  std::optional<long> ord;
  auto e = s.identity();
  int cur = x;
  int t = 1;
  for (;;) {
    if (e && cur == *e && !ord) ord = t;
    auto [it, inserted] = first_power.emplace(cur, t);
    if (!inserted) return {it->second, t - it->second, ord};
    cur = s.op(cur, x);
    ++t;
  }
}

SpecialElements special_elements(const FiniteSemigroup& s, const AnalyzerLimits& limits) {
  SpecialElements out;
  int n = static_cast<int>(s.size());
  for (int x = 0; x < n; ++x)
    if (s.op(x, x) == x) out.idempotents.push_back(x);

  auto zero = s.zero();
  if (!zero) {
    out.notes.push_back("no zero element: nilpotents and zero divisors not applicable");
  } else {
    for (int x = 0; x < n; ++x) {
      if (x == *zero) continue;
      std::unordered_set<int> seen;
      int cur = x;
      while (seen.insert(cur).second) {
        if (cur == *zero) break;
        cur = s.op(cur, x);
      }
      if (cur == *zero) out.nilpotents.push_back(x);
    }
    for (int x = 0; x < n; ++x) {
      if (x == *zero) continue;
      for (int y = 0; y < n; ++y) {
        if (y == *zero) continue;
        if (s.op(x, y) == *zero) {
          ++out.zero_divisor_total;
          if (out.zero_divisor_pairs.size() < limits.zero_divisor_list_cap)
            out.zero_divisor_pairs.emplace_back(x, y);
        }
      }
    }
    if (out.zero_divisor_total > out.zero_divisor_pairs.size())
      out.notes.push_back("zero-divisor listing capped at " +
                          std::to_string(limits.zero_divisor_list_cap) + " of " +
                          std::to_string(out.zero_divisor_total) + " ordered pairs");
  }

  auto e = s.identity();
  if (!e) {
    out.notes.push_back("no identity element: units not applicable");
  } else {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (s.op(x, y) == *e && s.op(y, x) == *e) {
          out.units.push_back(x);
          break;
        }
  }
  return out;
}

std::vector<int> closure_of(const FiniteSemigroup& s, const std::vector<int>& seed) {
  int n = static_cast<int>(s.size());
  Bits in = bits_make(s.size());
  std::vector<int> members;
  std::vector<int> work;
  for (int x : seed) {
    if (x < 0 || x >= n) raise(errc::invalid_input, "seed element index out of range");
    if (!bits_test(in, x)) {
      bits_set(in, x);
      members.push_back(x);
      work.push_back(x);
    }
  }
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    for (size_t i = 0; i < members.size(); ++i) {
      int b = members[i];
      for (int p : {s.op(a, b), s.op(b, a)}) {
        if (!bits_test(in, p)) {
          bits_set(in, p);
          members.push_back(p);
          work.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subsemigroup(const FiniteSemigroup& s, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  Bits in = bits_make(s.size());
  for (int x : subset) bits_set(in, x);
  for (int a : subset)
    for (int b : subset)
      if (!bits_test(in, s.op(a, b))) return false;
  return true;
}

IdealCheck is_ideal(const FiniteSemigroup& s, const std::vector<int>& subset, Side side) {
  if (subset.empty()) raise(errc::invalid_input, "ideal check needs a nonempty subset");
  int n = static_cast<int>(s.size());
  Bits in = bits_make(s.size());
  for (int x : subset) {
    if (x < 0 || x >= n) raise(errc::invalid_input, "subset element index out of range");
    bits_set(in, x);
  }
  for (int a = 0; a < n; ++a)
    for (int t : subset) {
      bool left_ok = side == Side::right || bits_test(in, s.op(a, t));
      bool right_ok = side == Side::left || bits_test(in, s.op(t, a));
      if (!left_ok || !right_ok) return {false, std::make_pair(a, t)};
    }
  return {true, std::nullopt};
}

IdealLattice enumerate_ideals(const FiniteSemigroup& s, const AnalyzerLimits& limits) {
  IdealLattice out;
  size_t n = s.size();
  if (n > limits.ideal_enum_cap) {
    out.notes.push_back("ideal enumeration skipped: order " + std::to_string(n) +
                        " exceeds cap " + std::to_string(limits.ideal_enum_cap));
    return out;
  }
  std::map<Bits, int> seen;  // principal ideal -> generator
  for (int x = 0; x < static_cast<int>(n); ++x) {
    Bits ideal = bits_make(n);
    bits_set(ideal, x);
    std::vector<int> left_values;
    Bits left_seen = bits_make(n);
    for (int t = 0; t < static_cast<int>(n); ++t) {
      bits_set(ideal, s.op(x, t));
      int u = s.op(t, x);
      bits_set(ideal, u);
      if (!bits_test(left_seen, u)) {
        bits_set(left_seen, u);
        left_values.push_back(u);
      }
    }
    if (!s.is_commutative())
      for (int u : left_values)
        for (int t = 0; t < static_cast<int>(n); ++t) bits_set(ideal, s.op(u, t));
    seen.emplace(std::move(ideal), x);
  }
  for (const auto& [bits, gen] : seen) {
    out.principal.push_back(bits_to_sorted(bits, n));
    out.principal_generator.push_back(gen);
    if (bits_count(bits) < n) out.has_proper_ideal = true;
  }
  // Minimal principal ideals under inclusion.
  std::vector<Bits> as_bits;
  for (const auto& p : out.principal) {
    Bits b = bits_make(n);
    for (int x : p) bits_set(b, x);
    as_bits.push_back(std::move(b));
  }
  for (size_t i = 0; i < as_bits.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < as_bits.size() && minimal; ++j)
      if (j != i && bits_subset(as_bits[j], as_bits[i])) minimal = false;
    if (minimal) out.minimal.push_back(i);
  }
  // Every ideal is a union of principal ideals; count the distinct unions.
  std::map<Bits, bool> unions;
  for (const auto& b : as_bits) unions.emplace(b, false);
  bool bounded = true;
  bool grew = true;
  while (grew && bounded) {
    grew = false;
    std::vector<Bits> current;
    for (const auto& [b, _] : unions) current.push_back(b);
    for (const auto& u : current) {
      for (const auto& p : as_bits) {
        Bits merged = bits_union(u, p);
        if (unions.emplace(std::move(merged), false).second) grew = true;
        if (unions.size() > limits.ideal_union_bound) {
          bounded = false;
          break;
        }
      }
      if (!bounded) break;
    }
  }
  if (bounded)
    out.all_ideal_count = unions.size();
  else
    out.notes.push_back("ideal union count exceeds bound " +
                        std::to_string(limits.ideal_union_bound));
  return out;
}

bool is_subgroup(const FiniteSemigroup& s, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  if (!is_subsemigroup(s, subset)) return false;
  std::optional<int> e;
  for (int cand : subset) {
    bool ok = true;
    for (int x : subset)
      if (s.op(cand, x) != x || s.op(x, cand) != x) {
        ok = false;
        break;
      }
    if (ok) {
      e = cand;
      break;
    }
  }
  if (!e) return false;
  for (int x : subset) {
    bool has_inverse = false;
    for (int y : subset)
      if (s.op(x, y) == *e && s.op(y, x) == *e) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) return false;
  }
  return true;
}

std::vector<int> maximal_subgroup_at(const FiniteSemigroup& s, int e) {
  if (s.op(e, e) != e)
    raise(errc::invalid_input, "element " + s.label(e) + " is not idempotent");
  int n = static_cast<int>(s.size());
  // eSe, the local submonoid with identity e.
  Bits in = bits_make(s.size());
  std::vector<int> local;
  for (int x = 0; x < n; ++x) {
    int y = s.op(e, s.op(x, e));
    if (!bits_test(in, y)) {
      bits_set(in, y);
      local.push_back(y);
    }
  }
  // x is a unit of eSe iff some power of x returns to e.
  std::vector<int> group;
  for (int x : local) {
    std::unordered_set<int> seen;
    int cur = x;
    bool torsion = false;
    while (seen.insert(cur).second) {
      if (cur == e) {
        torsion = true;
        break;
      }
      cur = s.op(cur, x);
    }
    if (torsion || cur == e) group.push_back(x);
  }
  std::sort(group.begin(), group.end());
  if (!is_subgroup(s, group))
    raise(errc::construction, "maximal subgroup verification failed at " + s.label(e));
  return group;
}

SubgroupOrders subgroup_order_set(const FiniteSemigroup& s, std::size_t exact_cap) {
  SubgroupOrders out;
  int n = static_cast<int>(s.size());
  // The cycle part of every monogenic subsemigroup is a cyclic group, so
  // every cyclic-subgroup order shows up as a monogenic period.
  for (int x = 0; x < n; ++x) out.orders.insert(monogenic_profile(s, x).period);
  for (int e = 0; e < n; ++e) {
    if (s.op(e, e) != e) continue;
    MaximalSubgroup mg{e, maximal_subgroup_at(s, e)};
    out.orders.insert(static_cast<long>(mg.elements.size()));
    out.maximal.push_back(std::move(mg));
  }
  out.exact = true;
  for (const auto& mg : out.maximal) {
    if (mg.elements.size() <= exact_cap) {
      for (const auto& sub : subgroup_lattice(s, mg.elements, mg.idempotent))
        out.orders.insert(static_cast<long>(sub.size()));
    } else {
      out.exact = false;
      out.notes.push_back("subgroup lattice of the maximal subgroup at " +
                          s.label(mg.idempotent) + " (order " +
                          std::to_string(mg.elements.size()) + ") exceeds exact cap " +
                          std::to_string(exact_cap) + "; order set is partial");
    }
  }
  return out;
}

SmarandacheFlags smarandache_report(const FiniteSemigroup& s, const AnalyzerLimits& limits,
                                    const SubgroupOrders& subgroups, const IdealLattice& ideals) {
  SmarandacheFlags out;
  long n = static_cast<long>(s.size());
  long min_order = limits.count_trivial_subgroups ? 1 : 2;

  // Subgroups of size >= 2 always surface through monogenic periods, so the
  // S-semigroup verdict is exact even when the full lattice was capped.
  for (long o : subgroups.orders)
    if (o >= min_order && o < n) out.is_s_semigroup = true;

  bool all_divide = true;
  for (long o : subgroups.orders)
    if (n % o != 0) all_divide = false;
  out.is_s_lagrange = out.is_s_semigroup && all_divide;
  for (long o : subgroups.orders)
    if (o >= min_order && n % o == 0) out.is_s_weakly_lagrange = true;
  if (!subgroups.exact)
    out.notes.push_back("Lagrange/Sylow verdicts use a partial subgroup order set");
  if (limits.count_trivial_subgroups)
    out.notes.push_back("singleton subgroups counted (sensitivity mode)");

  for (long o : subgroups.orders) {
    if (o < 2) continue;
    auto pp = prime_power(o);
    if (!pp) continue;
    SylowClass sc{o, pp->first, "undetermined"};
    if (n % pp->first != 0)
      sc.cls = "non_sylow";
    else if (n % o == 0)
      sc.cls = "sylow";
    out.s_p_sylow.push_back(sc);
  }

  if (s.identity()) {
    for (int x = 0; x < static_cast<int>(n); ++x) {
      auto ord = monogenic_profile(s, x).order_rel_identity;
      if (ord && *ord >= 2 && n % *ord == 0) out.s_cauchy_elements.push_back(x);
    }
  } else {
    out.notes.push_back("no identity element: S-Cauchy elements not applicable");
  }

  // S-hyper subsemigroup: a proper subsemigroup strictly containing a
  // subgroup of maximal order.
  long max_order = 0;
  for (const auto& mg : subgroups.maximal)
    max_order = std::max(max_order, static_cast<long>(mg.elements.size()));
  if (max_order >= 2) {
    bool exhaustive = s.size() <= limits.subset_exhaustive_cap;
    size_t candidate_cap = s.size() <= 512 ? s.size() : 32;
    for (const auto& mg : subgroups.maximal) {
      if (out.has_s_hyper_subsemigroup) break;
      if (static_cast<long>(mg.elements.size()) != max_order) continue;
      if (exhaustive) {
        // Try every superset of the subgroup.
        std::vector<int> rest;
        for (int x = 0; x < static_cast<int>(n); ++x)
          if (!std::binary_search(mg.elements.begin(), mg.elements.end(), x)) rest.push_back(x);
        for (std::uint32_t mask = 1; mask + 1 < (1u << rest.size()); ++mask) {
          std::vector<int> cand = mg.elements;
          for (size_t b = 0; b < rest.size(); ++b)
            if (mask & (1u << b)) cand.push_back(rest[b]);
          std::sort(cand.begin(), cand.end());
          if (is_subsemigroup(s, cand)) {
            out.has_s_hyper_subsemigroup = true;
            out.hyper_witness = cand;
            break;
          }
        }
      } else {
        size_t tried = 0;
        for (int x = 0; x < static_cast<int>(n) && tried < candidate_cap; ++x) {
          if (std::binary_search(mg.elements.begin(), mg.elements.end(), x)) continue;
          ++tried;
          std::vector<int> seed = mg.elements;
          seed.push_back(x);
          std::vector<int> closed = closure_of(s, seed);
          if (closed.size() < s.size()) {
            out.has_s_hyper_subsemigroup = true;
            out.hyper_witness = closed;
            break;
          }
        }
      }
    }
    if (!out.has_s_hyper_subsemigroup && !exhaustive)
      out.notes.push_back("hyper-subsemigroup search was closure-based, not exhaustive");
  }

  // Simplicity: no proper subsemigroup of size >= 2 (S, the empty set and
  // singleton idempotents do not count).
  bool simple_exhaustive = s.size() <= limits.subset_exhaustive_cap;
  std::optional<std::vector<int>> simple_witness;
  if (simple_exhaustive) {
    std::uint32_t full = (s.size() >= 32) ? 0xffffffffu : ((1u << s.size()) - 1);
    for (std::uint32_t mask = 1; mask < full && !simple_witness; ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      std::vector<int> cand;
      for (size_t b = 0; b < s.size(); ++b)
        if (mask & (1u << b)) cand.push_back(static_cast<int>(b));
      if (is_subsemigroup(s, cand)) simple_witness = cand;
    }
  } else {
    for (int x = 0; x < static_cast<int>(n) && !simple_witness; ++x) {
      std::vector<int> c = closure_of(s, {x});
      if (c.size() >= 2 && c.size() < s.size()) simple_witness = c;
    }
    for (const auto& mg : subgroups.maximal) {
      if (simple_witness) break;
      if (mg.elements.size() >= 2 && mg.elements.size() < s.size())
        simple_witness = mg.elements;
    }
    for (const auto& p : ideals.principal) {
      if (simple_witness) break;
      if (p.size() >= 2 && p.size() < s.size()) simple_witness = p;
    }
    if (s.size() <= 64) {
      for (int x = 0; x < static_cast<int>(n) && !simple_witness; ++x)
        for (int y = x + 1; y < static_cast<int>(n) && !simple_witness; ++y) {
          std::vector<int> c = closure_of(s, {x, y});
          if (c.size() >= 2 && c.size() < s.size()) simple_witness = c;
        }
    }
  }
  out.is_simple = !simple_witness;
  if (out.is_simple && !simple_exhaustive)
    out.notes.push_back("simplicity search found no witness but was not exhaustive");

  bool ideals_known = ideals.notes.empty() || !ideals.principal.empty();
  out.is_doubly_simple = out.is_simple && ideals_known && !ideals.has_proper_ideal;
  if (out.is_simple && !ideals_known)
    out.notes.push_back("doubly-simple verdict unavailable: ideal enumeration skipped");
  return out;
}

CosetResult cosets(const FiniteSemigroup& s, const std::vector<int>& subgroup, int x, Side side) {
  if (!is_subgroup(s, subgroup))
    raise(errc::invalid_input, "coset base is not a subgroup");
  if (x < 0 || static_cast<size_t>(x) >= s.size())
    raise(errc::invalid_input, "coset representative out of range");
  auto coset_of = [&](int y, bool left) {
    std::vector<int> c;
    for (int h : subgroup) c.push_back(left ? s.op(y, h) : s.op(h, y));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  };
  CosetResult out;
  out.coset = coset_of(x, side != Side::right);
  std::vector<int> h_sorted = subgroup;
  std::sort(h_sorted.begin(), h_sorted.end());
  for (int y = 0; y < static_cast<int>(s.size()); ++y) {
    if (coset_of(y, true) == h_sorted && coset_of(y, false) == h_sorted)
      out.stable.push_back(y);
    else
      out.exceptional.push_back(y);
  }
  return out;
}

StructureReport analyze(const FiniteSemigroup& s) {
  const AnalyzerLimits& limits = s.spec().limits;
  StructureReport r;
  r.order = s.size();
  r.is_commutative = s.is_commutative();
  r.identity = s.identity();
  r.zero = s.zero();
  r.special = special_elements(s, limits);
  r.subgroups = subgroup_order_set(s, limits.subgroup_exact_cap);
  r.ideals = enumerate_ideals(s, limits);
  r.smarandache = smarandache_report(s, limits, r.subgroups, r.ideals);
  for (const auto& n : r.special.notes) r.method_notes.push_back("special: " + n);
  for (const auto& n : r.subgroups.notes) r.method_notes.push_back("subgroups: " + n);
  for (const auto& n : r.ideals.notes) r.method_notes.push_back("ideals: " + n);
  for (const auto& n : r.smarandache.notes) r.method_notes.push_back("smarandache: " + n);
  auto ck = s.spec().carrier.kind;
  if (ck == CarrierKind::full_transformation || ck == CarrierKind::permutations)
    r.method_notes.push_back("composition convention: (f o g)(i) = f(g(i)), g applied first");
  return r;
}

}  // namespace isg
