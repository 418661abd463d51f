#include "turan/multipartite.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace turan {

namespace {

VertexId floor_to_vertex(const Real& x) {
  return boost::multiprecision::floor(x).convert_to<VertexId>();
}

VertexId ceil_to_vertex(const Real& x) {
  return boost::multiprecision::ceil(x).convert_to<VertexId>();
}

}  // namespace

std::string MultipartiteWitness::to_text() const {
  std::ostringstream out;
  for (const std::vector<VertexId>& part : parts) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i) out << ' ';
      out << part[i];
    }
    out << '\n';
  }
  return out.str();
}

SizeProfile fact2_parameters(VertexId n, unsigned r, const Real& c) {
  if (r < 2) throw std::invalid_argument("fact2_parameters: r must be >= 2");
  if (n < 2 || c <= 0)
    throw std::domain_error("fact2_parameters: requires c^r ln n >= 1");
  const Real ln_n = log(Real(n));
  const Real s_real = pow(c, static_cast<int>(r)) * ln_n;
  if (s_real < 1)
    throw std::domain_error("fact2_parameters: requires c^r ln n >= 1");
  const Real exponent = Real(1) - pow(c, static_cast<int>(r) - 1);
  SizeProfile profile;
  profile.r_small = r - 1;
  profile.s = floor_to_vertex(s_real);
  profile.t = ceil_to_vertex(pow(Real(n), exponent));
  return profile;
}

SizeProfile theorem1_profile(VertexId n, unsigned r, const Real& c) {
  if (r < 1) throw std::invalid_argument("theorem1_profile: r must be >= 1");
  if (n < 2 || c <= 0)
    throw std::domain_error("theorem1_profile: requires n >= 2 and c > 0");
  const Real s_real = c * log(Real(n));
  if (s_real < 1)
    throw std::domain_error(
        "theorem1_profile: c ln n < 1 leaves no small class");
  SizeProfile profile;
  profile.r_small = r;
  profile.s = floor_to_vertex(s_real);
  profile.t = ceil_to_vertex(pow(Real(n), Real(1) - sqrt(c)));
  return profile;
}

namespace {

void check_profile(const SizeProfile& profile, const char* what) {
  if (profile.r_small < 1 || profile.s < 1 || profile.t < 1)
    throw std::invalid_argument(std::string(what) +
                                ": profile sizes must be >= 1");
}

// Complete backtracking search. Classes are filled in profile order; within
// a class, members are chosen as an ascending combination of the class's
// candidate pool; the leading equal-size classes are explored with
// increasing minimum elements (symmetric reorderings are skipped without
// loss). The pool of a class is the common neighbourhood of all earlier
// classes; members of one class need not be adjacent to each other.
class ExactSearch {
 public:
  ExactSearch(const Graph& g, const SizeProfile& profile, std::uint64_t budget)
      : g_(g),
        profile_(profile),
        budget_(budget),
        stride_(g.words_per_row()),
        used_(stride_, 0),
        classes_(profile.classes()) {
    demand_after_.assign(profile_.classes() + 1, 0);
    for (VertexId k = profile_.classes(); k-- > 0;)
      demand_after_[k] = demand_after_[k + 1] + class_size(k);
  }

  SearchOutcome run() {
    SearchOutcome outcome;
    if (profile_.total() <= g_.order()) {
      std::vector<std::uint64_t> all(stride_, 0);
      for (VertexId v = 0; v < g_.order(); ++v) bits::set(all.data(), v);
      for (VertexId k = 0; k < profile_.classes(); ++k)
        classes_[k].reserve(class_size(k));
      if (search_class(0, all)) {
        outcome.status = SearchStatus::Found;
        outcome.witness = MultipartiteWitness{classes_};
      } else {
        outcome.status = exhausted_ ? SearchStatus::BudgetExhausted
                                    : SearchStatus::NoneExists;
      }
    }
    outcome.nodes = nodes_;
    return outcome;
  }

 private:
  VertexId class_size(VertexId k) const {
    return k < profile_.r_small ? profile_.s : profile_.t;
  }

  bool search_class(VertexId k, const std::vector<std::uint64_t>& common) {
    if (k == profile_.classes()) return true;
    // Equal-size leading classes: start past the previous class's minimum.
    const VertexId start =
        (k >= 1 && k < profile_.r_small) ? classes_[k - 1][0] + 1 : 0;
    return extend_class(k, 0, start, common, common);
  }

  // `pool` is fixed for the whole of class k; `inner` is pool intersected
  // with the neighbourhoods of the members placed so far — the classes after
  // k draw from it.
  bool extend_class(VertexId k, VertexId slot, VertexId from,
                    const std::vector<std::uint64_t>& pool,
                    const std::vector<std::uint64_t>& inner) {
    if (slot == class_size(k)) return search_class(k + 1, inner);
    bool found = false;
    for (VertexId v = from; v < g_.order() && !found && !exhausted_; ++v) {
      if (!bits::test(pool.data(), v) || bits::test(used_.data(), v)) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        break;
      }
      bits::set(used_.data(), v);
      classes_[k].push_back(v);
      std::vector<std::uint64_t> next(stride_);
      const std::uint64_t* row = g_.row(v);
      VertexId open = 0;
      for (std::size_t i = 0; i < stride_; ++i) {
        next[i] = inner[i] & row[i];
        open += __builtin_popcountll(next[i] & ~used_[i]);
      }
      // Everything demanded after class k must come from `next`; prune when
      // even the whole of it is too small.
      if (open >= demand_after_[k + 1])
        found = extend_class(k, slot + 1, v + 1, pool, next);
      if (!found) {
        classes_[k].pop_back();
        bits::clear(used_.data(), v);
      }
    }
    return found;
  }

  const Graph& g_;
  SizeProfile profile_;
  std::uint64_t budget_;
  std::size_t stride_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::uint64_t> used_;
  std::vector<std::vector<VertexId>> classes_;
  std::vector<std::uint64_t> demand_after_;
};

}  // namespace

SearchOutcome find_multipartite_exact(const Graph& g,
                                      const SizeProfile& profile,
                                      std::uint64_t budget) {
  check_profile(profile, "find_multipartite_exact");
  return ExactSearch(g, profile, budget).run();
}

std::optional<MultipartiteWitness> find_multipartite_greedy(
    const Graph& g, const SizeProfile& profile) {
  check_profile(profile, "find_multipartite_greedy");
  if (profile.total() > g.order()) return std::nullopt;
  const std::size_t stride = g.words_per_row();
  std::vector<std::uint64_t> used(stride, 0);
  std::vector<std::uint64_t> common(stride, 0);
  for (VertexId v = 0; v < g.order(); ++v) bits::set(common.data(), v);

  MultipartiteWitness witness;
  for (VertexId k = 0; k < profile.classes(); ++k) {
    const VertexId size = k < profile.r_small ? profile.s : profile.t;
    // Pool is fixed for the whole class; `next` accumulates the common
    // neighbourhood that the classes after k will draw from.
    const std::vector<std::uint64_t> pool = common;
    std::vector<std::uint64_t> next = common;
    std::vector<VertexId> members;
    for (VertexId slot = 0; slot < size; ++slot) {
      // Pick the unused pool vertex that keeps the onward pool largest;
      // ties go to the smallest id.
      const VertexId none = g.order();
      VertexId best = none;
      VertexId best_open = 0;
      for (VertexId v = 0; v < g.order(); ++v) {
        if (!bits::test(pool.data(), v) || bits::test(used.data(), v))
          continue;
        const std::uint64_t* row = g.row(v);
        VertexId open = 0;
        for (std::size_t i = 0; i < stride; ++i)
          open += __builtin_popcountll(next[i] & row[i] & ~used[i]);
        if (best == none || open > best_open) {
          best = v;
          best_open = open;
        }
      }
      if (best == none) return std::nullopt;
      bits::set(used.data(), best);
      members.push_back(best);
      const std::uint64_t* row = g.row(best);
      for (std::size_t i = 0; i < stride; ++i) next[i] &= row[i];
    }
    witness.parts.push_back(std::move(members));
    common = std::move(next);
  }
  if (!verify_witness(g, witness, profile)) return std::nullopt;
  return witness;
}

WitnessCheck verify_witness(const Graph& g, const MultipartiteWitness& w,
                            const SizeProfile& profile) {
  WitnessCheck check;
  if (w.parts.size() != profile.classes()) {
    check.reason = "size mismatch: expected " +
                   std::to_string(profile.classes()) + " classes, got " +
                   std::to_string(w.parts.size());
    return check;
  }
  for (std::size_t k = 0; k < w.parts.size(); ++k) {
    const VertexId expect = k < profile.r_small ? profile.s : profile.t;
    if (w.parts[k].size() != expect) {
      check.reason = "size mismatch: class " + std::to_string(k) + " has " +
                     std::to_string(w.parts[k].size()) + " vertices, expected " +
                     std::to_string(expect);
      return check;
    }
    for (VertexId v : w.parts[k])
      if (v >= g.order()) {
        check.reason = "vertex out of range: " + std::to_string(v);
        return check;
      }
  }
  std::vector<bool> seen(g.order(), false);
  for (const std::vector<VertexId>& part : w.parts)
    for (VertexId v : part) {
      if (seen[v]) {
        check.reason = "not disjoint: vertex " + std::to_string(v) +
                       " appears twice";
        return check;
      }
      seen[v] = true;
    }
  for (std::size_t a = 0; a < w.parts.size(); ++a)
    for (std::size_t b = a + 1; b < w.parts.size(); ++b)
      for (VertexId x : w.parts[a])
        for (VertexId y : w.parts[b])
          if (!g.adjacent(x, y)) {
            check.reason = "missing cross edge: (" + std::to_string(x) + ", " +
                           std::to_string(y) + ")";
            return check;
          }
  check.ok = true;
  return check;
}

}  // namespace turan
