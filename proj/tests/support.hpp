#ifndef VALENCE_TESTS_SUPPORT_HPP
#define VALENCE_TESTS_SUPPORT_HPP

#include <optional>
#include <random>
#include <vector>

#include "valence/fq.hpp"
#include "valence/poly.hpp"

// Shared randomness and independent brute-force oracles for the test
// suites. Oracles here must stay independent of the library code paths
// they check: they enumerate, they do not reuse the operation under test.

namespace testsupport {

using valence::FqElem;
using valence::FqField;
using valence::MultiPoly;
using valence::UniPoly;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline FqElem random_elem(std::mt19937_64& rng, const FqField* f) {
  return f->element_at(rand_int(rng, 0, f->q() - 1));
}
inline FqElem random_nonzero(std::mt19937_64& rng, const FqField* f) {
  return f->element_at(rand_int(rng, 1, f->q() - 1));
}

/// Brute-force multiplicative inverse: scan for x with a*x = 1.
inline std::optional<FqElem> brute_inverse(const FqElem& a) {
  const FqField* f = a.field();
  for (std::int64_t i = 0; i < f->q(); ++i) {
    FqElem x = f->element_at(i);
    if ((a * x).is_one()) return x;
  }
  return std::nullopt;
}

/// Odometer over F_q^n in the canonical order.
class PointIter {
 public:
  PointIter(const FqField* f, int n) : f_(f), idx_(n, 0), done_(false) {}
  bool done() const { return done_; }
  std::vector<FqElem> point() const {
    std::vector<FqElem> p;
    p.reserve(idx_.size());
    for (auto i : idx_) p.push_back(f_->element_at(i));
    return p;
  }
  void next() {
    for (int i = static_cast<int>(idx_.size()) - 1; i >= 0; --i) {
      if (++idx_[i] < f_->q()) return;
      idx_[i] = 0;
    }
    done_ = true;
  }

 private:
  const FqField* f_;
  std::vector<std::int64_t> idx_;
  bool done_;
};

/// Exhaustive zero count, independent of valence::count_zeros.
inline long long oracle_count_zeros(const MultiPoly<FqElem>& f, const FqField* field) {
  long long count = 0;
  for (PointIter it(field, f.nvars()); !it.done(); it.next())
    if (f.evaluate(it.point()).is_zero()) ++count;
  return count;
}

/// Lexicographically least nontrivial zero by exhaustive scan.
inline std::optional<std::vector<FqElem>> oracle_nontrivial_zero(const MultiPoly<FqElem>& f,
                                                                 const FqField* field) {
  for (PointIter it(field, f.nvars()); !it.done(); it.next()) {
    auto p = it.point();
    bool trivial = true;
    for (const auto& c : p) trivial = trivial && c.is_zero();
    if (trivial) continue;
    if (f.evaluate(p).is_zero()) return p;
  }
  return std::nullopt;
}

/// Random sparse polynomial over F_q with total degree <= dmax (at least
/// one term of degree exactly dmax, so the degree is dmax).
inline MultiPoly<FqElem> random_poly(std::mt19937_64& rng, const FqField* f, int nvars, int dmax,
                                     int terms) {
  MultiPoly<FqElem> poly(nvars);
  auto random_exps = [&](int degree_cap) {
    std::vector<int> e(nvars, 0);
    int budget = degree_cap;
    for (int i = 0; i < nvars; ++i) {
      e[i] = static_cast<int>(rand_int(rng, 0, budget));
      budget -= e[i];
    }
    return e;
  };
  // one term pinned at full degree
  {
    std::vector<int> e(nvars, 0);
    int budget = dmax;
    for (int i = 0; i + 1 < nvars; ++i) {
      e[i] = static_cast<int>(rand_int(rng, 0, budget));
      budget -= e[i];
    }
    e[nvars - 1] = budget;
    poly.add_term(e, random_nonzero(rng, f));
  }
  for (int t = 1; t < terms; ++t) poly.add_term(random_exps(dmax), random_elem(rng, f));
  return poly;
}

/// Random homogeneous polynomial of degree d (nonzero).
inline MultiPoly<FqElem> random_homogeneous(std::mt19937_64& rng, const FqField* f, int nvars,
                                            int d, int terms) {
  MultiPoly<FqElem> poly(nvars);
  int guard = 0;
  while (poly.is_zero_poly() || static_cast<int>(poly.term_count()) < 1) {
    for (int t = 0; t < terms; ++t) {
      std::vector<int> e(nvars, 0);
      int budget = d;
      for (int i = 0; i + 1 < nvars; ++i) {
        e[i] = static_cast<int>(rand_int(rng, 0, budget));
        budget -= e[i];
      }
      e[nvars - 1] = budget;
      poly.add_term(e, random_elem(rng, f));
    }
    if (++guard > 100) {
      std::vector<int> e(nvars, 0);
      e[0] = d;
      poly.add_term(e, f->one());
    }
  }
  return poly;
}

inline UniPoly<FqElem> random_unipoly(std::mt19937_64& rng, const FqField* f, int deg) {
  std::vector<FqElem> c(deg + 1, f->zero());
  for (int i = 0; i < deg; ++i) c[i] = random_elem(rng, f);
  c[deg] = random_nonzero(rng, f);
  return UniPoly<FqElem>(std::move(c));
}

}  // namespace testsupport

#endif
