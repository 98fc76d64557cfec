#include "valence/uprod.hpp"

#include <algorithm>
#include <map>

namespace valence {
namespace logic {
namespace {

int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace

bool is_filter(const SetFamily& c) {
  if (c.index_size < 1 || c.index_size > 20) return false;
  std::uint64_t full = c.full_mask();
  if (c.members.count(0)) return false;
  if (!c.members.count(full)) return false;
  for (auto a : c.members) {
    if ((a & ~full) != 0) return false;
    for (auto b : c.members)
      if (!c.members.count(a & b)) return false;
    // superset closure: walk all supersets of a
    std::uint64_t missing = full & ~a;
    for (std::uint64_t sub = missing;; sub = (sub - 1) & missing) {
      if (!c.members.count(a | sub)) return false;
      if (sub == 0) break;
    }
  }
  return true;
}

bool is_ultrafilter(const SetFamily& c) {
  if (!is_filter(c)) return false;
  std::uint64_t full = c.full_mask();
  for (std::uint64_t x = 0; x <= full; ++x)
    if (!c.members.count(x) && !c.members.count(full & ~x)) return false;
  return true;
}

SetFamily trivial_filter(int index_size) {
  SetFamily f;
  f.index_size = index_size;
  f.members.insert(f.full_mask());
  return f;
}

SetFamily principal_filter(int index_size, int j) {
  if (j < 0 || j >= index_size)
    throw domain_error(errc::invalid_input, "principal index out of range");
  SetFamily f;
  f.index_size = index_size;
  std::uint64_t full = f.full_mask();
  std::uint64_t bit = 1ull << j;
  std::uint64_t rest = full & ~bit;
  for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
    f.members.insert(bit | sub);
    if (sub == 0) break;
  }
  return f;
}

SetFamily extend_excluding(const SetFamily& d, std::uint64_t x) {
  if (d.members.count(x))
    throw domain_error(errc::already_member, "X already belongs to the filter");
  SetFamily out;
  out.index_size = d.index_size;
  std::uint64_t full = d.full_mask();
  for (std::uint64_t y = 0; y <= full; ++y) {
    for (auto z : d.members)
      if ((z & ~x & ~y) == 0) {  // Z \ X is a subset of Y
        out.members.insert(y);
        break;
      }
  }
  if (!is_filter(out))
    throw domain_error(errc::invalid_input, "extension failed to produce a filter");
  if (!out.members.count(full & ~x))
    throw domain_error(errc::invalid_input, "extension failed to contain the complement");
  return out;
}

SetFamily extend_to_ultrafilter(SetFamily d) {
  if (!is_filter(d)) throw domain_error(errc::invalid_input, "input is not a filter");
  std::uint64_t full = d.full_mask();
  for (;;) {
    bool extended = false;
    for (std::uint64_t x = 0; x <= full; ++x) {
      if (d.members.count(x) || d.members.count(full & ~x)) continue;
      d = extend_excluding(d, x);
      extended = true;
      break;
    }
    if (!extended) return d;
  }
}

int principal_index(const SetFamily& ultra) {
  // the minimal member of a finite ultrafilter is a singleton
  std::uint64_t min = ultra.full_mask();
  for (auto m : ultra.members) min &= m;
  if (popcount64(min) != 1)
    throw domain_error(errc::not_ultra, "family has no principal index");
  return __builtin_ctzll(min);
}

Ultraproduct ultraproduct(const std::vector<FiniteStructure>& structures, const SetFamily& ultra,
                          long long budget) {
  if (structures.empty()) throw domain_error(errc::invalid_input, "no structures");
  if (static_cast<int>(structures.size()) != ultra.index_size)
    throw domain_error(errc::invalid_input, "index size mismatch");
  if (!is_ultrafilter(ultra)) throw domain_error(errc::not_ultra, "family is not an ultrafilter");
  int N = ultra.index_size;
  const Language& lang = structures[0].language();

  long long product_size = 1;
  for (const auto& m : structures) {
    product_size *= m.size();
    if (product_size > budget) throw budget_error("choice-function budget exceeded");
  }

  // agreement modulo the ultrafilter reduces to agreement on its minimal
  // member (finite filters are closed under intersection)
  std::uint64_t core = ultra.full_mask();
  for (auto m : ultra.members) core &= m;

  // enumerate choice functions; classes keyed by the restriction to core
  std::vector<int> f(N, 0);
  std::map<std::vector<int>, int> class_of_key;
  std::vector<std::vector<int>> reps;
  auto key_of = [&](const std::vector<int>& g) {
    std::vector<int> key;
    for (int i = 0; i < N; ++i)
      if (core & (1ull << i)) key.push_back(g[i]);
    return key;
  };
  for (;;) {
    auto key = key_of(f);
    if (!class_of_key.count(key)) {
      // lexicographically least representative: zero off the core
      std::vector<int> rep(N, 0);
      int ki = 0;
      for (int i = 0; i < N; ++i)
        if (core & (1ull << i)) rep[i] = key[ki++];
      class_of_key.emplace(key, static_cast<int>(reps.size()));
      reps.push_back(std::move(rep));
    }
    int i = N - 1;
    while (i >= 0 && ++f[i] == structures[i].size()) f[i--] = 0;
    if (i < 0) break;
  }

  auto class_of = [&](const std::vector<int>& g) { return class_of_key.at(key_of(g)); };

  int classes = static_cast<int>(reps.size());
  std::vector<std::string> names;
  names.reserve(classes);
  for (int c = 0; c < classes; ++c) {
    std::string n = "[";
    for (int i = 0; i < N; ++i) {
      if (i) n += "|";
      n += structures[i].element_names()[reps[c][i]];
    }
    n += "]";
    names.push_back(std::move(n));
  }

  FiniteStructure prod(lang, std::move(names));
  for (const auto& cname : lang.constants) {
    std::vector<int> g(N);
    for (int i = 0; i < N; ++i) g[i] = structures[i].constant(cname);
    prod.set_constant(cname, class_of(g));
  }
  for (const auto& [fname, arity] : lang.functions) {
    std::size_t total = 1;
    for (int k = 0; k < arity; ++k) total *= classes;
    std::vector<int> table(total);
    std::vector<int> args(arity, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t t = flat;
      for (int k = arity - 1; k >= 0; --k) {
        args[k] = static_cast<int>(t % classes);
        t /= classes;
      }
      std::vector<int> g(N);
      std::vector<int> pointwise(arity);
      for (int i = 0; i < N; ++i) {
        for (int k = 0; k < arity; ++k) pointwise[k] = reps[args[k]][i];
        g[i] = structures[i].apply_function(fname, pointwise);
      }
      table[flat] = class_of(g);
    }
    prod.set_function(fname, std::move(table));
  }
  for (const auto& [rname, arity] : lang.relations) {
    std::set<std::vector<int>> tuples;
    std::size_t total = 1;
    for (int k = 0; k < arity; ++k) total *= classes;
    std::vector<int> args(arity, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t t = flat;
      for (int k = arity - 1; k >= 0; --k) {
        args[k] = static_cast<int>(t % classes);
        t /= classes;
      }
      std::uint64_t holds = 0;
      std::vector<int> pointwise(arity);
      for (int i = 0; i < N; ++i) {
        for (int k = 0; k < arity; ++k) pointwise[k] = reps[args[k]][i];
        if (structures[i].relation_holds(rname, pointwise)) holds |= 1ull << i;
      }
      if (ultra.contains(holds)) tuples.insert(args);
    }
    prod.set_relation(rname, std::move(tuples));
  }
  prod.validate();

  // representative-independence spot checks: vary representatives off the
  // core and confirm the induced interpretations do not move
  for (const auto& [fname, arity] : lang.functions) {
    std::vector<int> args(arity, 0);
    for (int sample = 0; sample < std::min(classes, 4); ++sample) {
      std::fill(args.begin(), args.end(), sample % classes);
      std::vector<int> g(N), alt(N), pointwise(arity);
      for (int i = 0; i < N; ++i) {
        for (int k = 0; k < arity; ++k) pointwise[k] = reps[args[k]][i];
        g[i] = structures[i].apply_function(fname, pointwise);
        // alternate representatives: swap every off-core coordinate
        for (int k = 0; k < arity; ++k) {
          int v = reps[args[k]][i];
          if (!(core & (1ull << i))) v = (v + 1) % structures[i].size();
          pointwise[k] = v;
        }
        alt[i] = structures[i].apply_function(fname, pointwise);
      }
      if (class_of(g) != class_of(alt))
        throw domain_error(errc::invalid_input,
                           "ultraproduct interpretation depends on representatives");
    }
  }

  Ultraproduct out{std::move(prod)};
  out.index_count = N;
  out.representatives.reserve(classes * N);
  for (const auto& r : reps)
    for (int v : r) out.representatives.push_back(v);
  out.collapse_index = principal_index(ultra);
  out.collapse.resize(classes);
  for (int c = 0; c < classes; ++c) out.collapse[c] = reps[c][out.collapse_index];
  return out;
}

LosReport los_check(const std::vector<FiniteStructure>& structures, const SetFamily& ultra,
                    const Formula& sentence, long long budget, long long eval_budget) {
  if (!is_sentence(sentence))
    throw domain_error(errc::invalid_input, "los_check requires a sentence");
  LosReport rep;
  Ultraproduct up = ultraproduct(structures, ultra, budget);
  rep.product_truth = satisfies(up.structure, sentence, {}, eval_budget);
  for (std::size_t i = 0; i < structures.size(); ++i)
    if (satisfies(structures[i], sentence, {}, eval_budget))
      rep.index_truth_set |= 1ull << i;
  rep.set_in_ultrafilter = ultra.contains(rep.index_truth_set);
  rep.agree = (rep.product_truth == rep.set_in_ultrafilter);
  return rep;
}

}  // namespace logic
}  // namespace valence
