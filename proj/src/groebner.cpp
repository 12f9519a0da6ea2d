#include "germlab/groebner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <tuple>

#include "germlab/error.hpp"

namespace germlab {

namespace {

struct Term {
  Monomial m;
  GaussianRational c;
};

// Terms in strictly descending order.
using TermList = std::vector<Term>;

TermList to_terms(const Polynomial& f, const MonomialOrder& order) {
  TermList out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) out.push_back({m, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.m, b.m); });
  return out;
}

Polynomial to_polynomial(const TermList& t, const std::vector<std::string>& vars) {
  Polynomial p(vars);
  for (const auto& term : t) p.add_term(term.m, term.c);
  return p;
}

void make_monic(TermList& t) {
  if (t.empty() || t.front().c.is_one()) return;
  GaussianRational inv = t.front().c.inverse();
  for (auto& term : t) term.c *= inv;
}

// a[a_from..] + scale * shift * b[b_from..]
TermList merge_scaled(const TermList& a, std::size_t a_from, const TermList& b,
                      std::size_t b_from, const GaussianRational& scale,
                      const Monomial& shift, const MonomialOrder& order) {
  TermList out;
  out.reserve((a.size() - a_from) + (b.size() - b_from));
  std::size_t i = a_from, j = b_from;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = b[j].m * shift;
    if (i == a.size()) {
      out.push_back({bm, b[j].c * scale});
      ++j;
      continue;
    }
    auto cmp = order.compare(a[i].m, bm);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({bm, b[j].c * scale});
      ++j;
    } else {
      GaussianRational c = a[i].c + b[j].c * scale;
      if (!c.is_zero()) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

class Reducer {
 public:
  Reducer(const MonomialOrder& order, std::size_t budget)
      : order_(order), budget_(budget) {}

  void count_step() {
    if (++steps_ > budget_) throw BudgetExhausted(budget_);
  }

  // Full reduction of p modulo the polynomials listed in `active`.
  TermList reduce(TermList p, const std::vector<TermList>& polys,
                  const std::vector<std::size_t>& active) {
    TermList result;
    std::size_t head = 0;
    while (head < p.size()) {
      const Term& lead = p[head];
      const TermList* divisor = nullptr;
      for (auto idx : active) {
        if (polys[idx].front().m.divides(lead.m)) {
          divisor = &polys[idx];
          break;
        }
      }
      if (divisor == nullptr) {
        result.push_back(lead);
        ++head;
        continue;
      }
      count_step();
      GaussianRational scale = -lead.c / divisor->front().c;
      Monomial shift = lead.m / divisor->front().m;
      p = merge_scaled(p, head + 1, *divisor, 1, scale, shift, order_);
      head = 0;
    }
    return result;
  }

  const MonomialOrder& order() const { return order_; }

 private:
  const MonomialOrder& order_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

TermList spoly_terms(const TermList& f, const TermList& g, const MonomialOrder& order) {
  Monomial l = f.front().m.lcm(g.front().m);
  Monomial sf = l / f.front().m;
  Monomial sg = l / g.front().m;
  GaussianRational cf = f.front().c.inverse();
  GaussianRational cg = -g.front().c.inverse();
  TermList scaled_f;
  scaled_f.reserve(f.size());
  for (std::size_t k = 1; k < f.size(); ++k) scaled_f.push_back({f[k].m * sf, f[k].c * cf});
  return merge_scaled(scaled_f, 0, g, 1, cg, sg, order);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, std::size_t budget)
      : order_(order), reducer_(order, budget) {}

  // Returns false when the unit ideal was detected.
  bool run(const std::vector<TermList>& inputs) {
    for (const auto& f : inputs) {
      if (f.empty()) continue;
      TermList h = reducer_.reduce(f, polys_, active_);
      if (h.empty()) continue;
      make_monic(h);
      if (h.front().m.is_one()) return false;
      insert(std::move(h));
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                   [&](const Pair& a, const Pair& b) {
                                     int da = a.lcm.degree(), db = b.lcm.degree();
                                     if (da != db) return da < db;
                                     auto c = order_.compare(a.lcm, b.lcm);
                                     if (c != std::strong_ordering::equal) {
                                       return c == std::strong_ordering::less;
                                     }
                                     return std::tie(a.i, a.j) < std::tie(b.i, b.j);
                                   });
      Pair p = *best;
      pairs_.erase(best);
      TermList s = spoly_terms(polys_[p.i], polys_[p.j], order_);
      TermList h = reducer_.reduce(std::move(s), polys_, active_);
      if (h.empty()) continue;
      make_monic(h);
      if (h.front().m.is_one()) return false;
      insert(std::move(h));
    }
    return true;
  }

  std::vector<TermList> reduced_basis() {
    std::vector<std::size_t> order_idx = active_;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
      return order_.greater(polys_[b].front().m, polys_[a].front().m);
    });
    std::vector<TermList> out;
    for (auto idx : order_idx) {
      std::vector<std::size_t> others;
      for (auto o : order_idx) {
        if (o != idx) others.push_back(o);
      }
      TermList tail(polys_[idx].begin() + 1, polys_[idx].end());
      TermList reduced_tail = reducer_.reduce(std::move(tail), polys_, others);
      TermList g;
      g.reserve(reduced_tail.size() + 1);
      g.push_back(polys_[idx].front());
      g.insert(g.end(), reduced_tail.begin(), reduced_tail.end());
      out.push_back(std::move(g));
    }
    return out;
  }

 private:
  // Gebauer-Moeller update.
  void insert(TermList h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].front().m;

    std::vector<Pair> candidates;
    for (auto g : active_) candidates.push_back({g, hi, lh.lcm(polys_[g].front().m)});

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& c = candidates[a];
      bool keep = lh.coprime(polys_[c.i].front().m);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (candidates[b].lcm.divides(c.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(c.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(c);
    }

    std::vector<Pair> fresh;
    for (const auto& c : kept) {
      if (!lh.coprime(polys_[c.i].front().m)) fresh.push_back(c);
    }

    std::vector<Pair> old;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && lh.lcm(polys_[p.i].front().m) != p.lcm &&
                  lh.lcm(polys_[p.j].front().m) != p.lcm;
      if (!drop) old.push_back(p);
    }
    old.insert(old.end(), fresh.begin(), fresh.end());
    pairs_ = std::move(old);

    std::vector<std::size_t> new_active;
    for (auto g : active_) {
      if (!lh.divides(polys_[g].front().m)) new_active.push_back(g);
    }
    new_active.push_back(hi);
    active_ = std::move(new_active);
  }

  const MonomialOrder& order_;
  Reducer reducer_;
  std::vector<TermList> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

std::vector<std::string> with_fresh_variable(const std::vector<std::string>& vars,
                                             const std::string& stem) {
  std::string name = stem;
  while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += "_";
  auto out = vars;
  out.push_back(name);
  return out;
}

std::size_t common_arity(std::span<const Polynomial> gens) {
  if (gens.empty()) throw ValidationError("empty generator list");
  const std::size_t n = gens.front().arity();
  for (const auto& g : gens) {
    if (g.arity() != n) throw ArityError("generators with mixed arities");
  }
  return n;
}

}  // namespace

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<Polynomial> generators,
                             std::vector<Polynomial> source, std::size_t arity)
    : order_(std::move(order)),
      generators_(std::move(generators)),
      source_(std::move(source)),
      arity_(arity) {
  for (const auto& g : generators_) leading_.push_back(leading_monomial(g, order_));
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(leading_.begin(), leading_.end(),
                     [](const Monomial& m) { return m.is_one(); });
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error("leading monomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms()) {
    if (best == nullptr || order.greater(m, *best)) best = &m;
  }
  return *best;
}

GaussianRational leading_coefficient(const Polynomial& f, const MonomialOrder& order) {
  return f.coefficient(leading_monomial(f, order));
}

GroebnerBasis buchberger(std::span<const Polynomial> generators,
                         const MonomialOrder& order, const GroebnerOptions& options) {
  if (!order.is_global()) {
    throw ValidationError("buchberger requires a global order; use local_standard_basis");
  }
  const std::size_t n = common_arity(generators);
  const auto& vars = generators.front().variables();
  std::vector<TermList> inputs;
  for (const auto& g : generators) inputs.push_back(to_terms(g, order));

  Buchberger engine(order, options.budget);
  std::vector<Polynomial> basis;
  if (!engine.run(inputs)) {
    basis.push_back(Polynomial::constant(vars, 1));
  } else {
    for (const auto& t : engine.reduced_basis()) basis.push_back(to_polynomial(t, vars));
  }
  return GroebnerBasis(order, std::move(basis),
                       std::vector<Polynomial>(generators.begin(), generators.end()), n);
}

Division divide(const Polynomial& f, std::span<const Polynomial> divisors,
                const MonomialOrder& order) {
  if (!order.is_global()) throw ValidationError("divide requires a global order");
  Division out;
  out.remainder = Polynomial(f.variables());
  std::vector<Monomial> leads;
  std::vector<GaussianRational> lcs;
  for (const auto& g : divisors) {
    if (g.arity() != f.arity()) throw ArityError("divide: arity mismatch");
    out.quotients.emplace_back(f.variables());
    if (g.is_zero()) {
      leads.emplace_back();
      lcs.emplace_back();
      continue;
    }
    leads.push_back(leading_monomial(g, order));
    lcs.push_back(g.coefficient(leads.back()));
  }
  Polynomial p = f;
  while (!p.is_zero()) {
    Monomial lm = leading_monomial(p, order);
    GaussianRational lc = p.coefficient(lm);
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i].is_zero() || !leads[i].divides(lm)) continue;
      Monomial shift = lm / leads[i];
      GaussianRational scale = lc / lcs[i];
      out.quotients[i].add_term(shift, scale);
      p -= divisors[i].multiply_monomial(shift, scale);
      divided = true;
      break;
    }
    if (!divided) {
      out.remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!basis.order().is_global()) {
    throw ValidationError("normal_form requires a global-order basis");
  }
  if (f.arity() != basis.arity()) throw ArityError("normal_form: arity mismatch");
  const auto& order = basis.order();
  std::vector<TermList> polys;
  std::vector<std::size_t> active;
  for (const auto& g : basis.generators()) {
    active.push_back(polys.size());
    polys.push_back(to_terms(g, order));
  }
  Reducer reducer(order, static_cast<std::size_t>(-1));
  return to_polynomial(reducer.reduce(to_terms(f, order), polys, active), f.variables());
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis) {
  return normal_form(f, basis).is_zero();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw Error("s_polynomial of zero");
  return to_polynomial(spoly_terms(to_terms(f, order), to_terms(g, order), order),
                       f.variables());
}

int krull_dimension(const GroebnerBasis& basis) {
  const std::size_t n = basis.arity();
  std::vector<std::uint32_t> supports;
  for (const auto& m : basis.leading_monomials()) supports.push_back(m.support_mask());
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = std::all_of(supports.begin(), supports.end(),
                                   [&](std::uint32_t s) { return (s & ~mask) != 0; });
    if (independent) best = size;
  }
  return best;
}

std::optional<std::size_t> quotient_dimension(const GroebnerBasis& basis) {
  if (basis.is_unit()) return 0;
  const std::size_t n = basis.arity();
  const auto& leads = basis.leading_monomials();
  std::vector<int> bound(n, -1);
  for (const auto& m : leads) {
    std::uint32_t s = m.support_mask();
    if (std::popcount(s) != 1) continue;
    std::size_t var = static_cast<std::size_t>(std::countr_zero(s));
    if (bound[var] < 0 || m[var] < bound[var]) bound[var] = m[var];
  }
  for (int b : bound) {
    if (b < 0) return std::nullopt;
  }
  std::size_t count = 0;
  Monomial current(n);
  auto divisible = [&](const Monomial& m) {
    return std::any_of(leads.begin(), leads.end(),
                       [&](const Monomial& l) { return l.divides(m); });
  };
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    if (var == n) {
      ++count;
      return;
    }
    for (int e = 0; e < bound[var]; ++e) {
      current.set(var, e);
      if (divisible(current)) break;
      walk(var + 1);
    }
    current.set(var, 0);
  };
  walk(0);
  return count;
}

std::vector<Polynomial> saturation(std::span<const Polynomial> generators,
                                   const Polynomial& g, const GroebnerOptions& options) {
  const std::size_t n = common_arity(generators);
  if (g.is_zero()) throw ValidationError("saturation by the zero polynomial");
  if (g.arity() != n) throw ArityError("saturation: arity mismatch");
  const auto& vars = generators.front().variables();
  auto ext_vars = with_fresh_variable(vars, "_t");

  std::vector<Polynomial> lifted;
  for (const auto& f : generators) lifted.push_back(f.extended(ext_vars));
  Polynomial t = Polynomial::variable(ext_vars, n);
  lifted.push_back(Polynomial::constant(ext_vars, 1) - t * g.extended(ext_vars));

  GroebnerBasis elim = buchberger(lifted, MonomialOrder::elimination(), options);
  std::vector<Polynomial> kept;
  for (const auto& p : elim.generators()) {
    bool free_of_t = std::all_of(p.terms().begin(), p.terms().end(),
                                 [&](const auto& term) { return term.first[n] == 0; });
    if (free_of_t) kept.push_back(p.truncated(vars));
  }
  if (kept.empty()) return {};
  return buchberger(kept, MonomialOrder::grevlex(), options).generators();
}

bool radical_membership(const Polynomial& f, std::span<const Polynomial> generators,
                        const GroebnerOptions& options) {
  const std::size_t n = common_arity(generators);
  if (f.arity() != n) throw ArityError("radical_membership: arity mismatch");
  if (f.is_zero()) return true;
  const auto& vars = generators.front().variables();
  auto ext_vars = with_fresh_variable(vars, "_t");
  std::vector<Polynomial> lifted;
  for (const auto& g : generators) lifted.push_back(g.extended(ext_vars));
  Polynomial t = Polynomial::variable(ext_vars, n);
  lifted.push_back(Polynomial::constant(ext_vars, 1) - t * f.extended(ext_vars));
  return buchberger(lifted, MonomialOrder::grevlex(), options).is_unit();
}

namespace {

Polynomial determinant(const PolynomialMatrix& m, std::span<const std::size_t> rows,
                       std::span<const std::size_t> cols) {
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  Polynomial det(m.at(0, 0).variables());
  std::vector<std::size_t> sub_cols;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Polynomial& entry = m.at(rows[0], cols[k]);
    if (entry.is_zero()) continue;
    sub_cols.assign(cols.begin(), cols.end());
    sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial minor = determinant(m, rows.subspan(1), sub_cols);
    if (k % 2 == 0) {
      det += entry * minor;
    } else {
      det -= entry * minor;
    }
  }
  return det;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace

std::vector<Polynomial> minors(const PolynomialMatrix& matrix, std::size_t k) {
  if (k < 1 || k > std::min(matrix.rows(), matrix.cols())) {
    throw ValidationError("minor size " + std::to_string(k) + " out of range for a " +
                          std::to_string(matrix.rows()) + "x" +
                          std::to_string(matrix.cols()) + " matrix");
  }
  std::vector<Polynomial> out;
  for_each_subset(matrix.rows(), k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(matrix.cols(), k, [&](const std::vector<std::size_t>& cols) {
      out.push_back(determinant(matrix, rows, cols));
    });
  });
  return out;
}

GroebnerBasis local_standard_basis(std::span<const Polynomial> generators,
                                   const GroebnerOptions& options) {
  const std::size_t n = common_arity(generators);
  const auto& vars = generators.front().variables();
  const auto local = MonomialOrder::local_degree();
  std::vector<Polynomial> source(generators.begin(), generators.end());

  std::vector<Polynomial> nonzero;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.constant_term().is_zero()) {
      return GroebnerBasis(local, {Polynomial::constant(vars, 1)}, source, n);
    }
    nonzero.push_back(g);
  }
  if (nonzero.empty()) return GroebnerBasis(local, {}, source, n);

  auto hom_vars = with_fresh_variable(vars, "_h");
  std::vector<Polynomial> homogenized;
  for (const auto& g : nonzero) {
    const int top = g.total_degree();
    Polynomial h(hom_vars);
    for (const auto& [m, c] : g.terms()) {
      Monomial hm = m.extended(1);
      hm.set(n, top - m.degree());
      h.add_term(hm, c);
    }
    homogenized.push_back(std::move(h));
  }
  GroebnerBasis hom = buchberger(homogenized, MonomialOrder::homogenized(), options);

  std::vector<Polynomial> dehomogenized;
  for (const auto& g : hom.generators()) {
    Polynomial d(vars);
    for (const auto& [m, c] : g.terms()) d.add_term(m.truncated(1), c);
    if (!d.is_zero()) dehomogenized.push_back(std::move(d));
  }

  std::vector<std::pair<Monomial, Polynomial>> with_leads;
  for (auto& d : dehomogenized) {
    Monomial lm = leading_monomial(d, local);
    with_leads.emplace_back(lm, d.monic_at(lm));
  }
  std::stable_sort(with_leads.begin(), with_leads.end(), [&](const auto& a, const auto& b) {
    return local.greater(a.first, b.first);
  });
  std::vector<Polynomial> minimal;
  std::vector<Monomial> kept_leads;
  for (auto& [lm, p] : with_leads) {
    if (lm.is_one()) return GroebnerBasis(local, {Polynomial::constant(vars, 1)}, source, n);
    bool redundant = std::any_of(kept_leads.begin(), kept_leads.end(),
                                 [&](const Monomial& k) { return k.divides(lm); });
    if (redundant) continue;
    // A later element with a smaller lead cannot divide an earlier one's lead
    // unless the leads coincide; still, drop any earlier lead it divides.
    for (std::size_t q = 0; q < kept_leads.size();) {
      if (lm.divides(kept_leads[q])) {
        kept_leads.erase(kept_leads.begin() + static_cast<std::ptrdiff_t>(q));
        minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(q));
      } else {
        ++q;
      }
    }
    kept_leads.push_back(lm);
    minimal.push_back(std::move(p));
  }
  return GroebnerBasis(local, std::move(minimal), source, n);
}

std::optional<std::size_t> milnor_number_hypersurface(const Polynomial& f,
                                                      const GroebnerOptions& options) {
  if (f.is_zero()) throw ValidationError("milnor number of the zero polynomial");
  if (!f.constant_term().is_zero()) {
    throw ValidationError("milnor number: f does not vanish at the origin");
  }
  std::vector<Polynomial> partials;
  for (std::size_t k = 0; k < f.arity(); ++k) partials.push_back(f.derivative(k));
  return quotient_dimension(local_standard_basis(partials, options));
}

}  // namespace germlab
