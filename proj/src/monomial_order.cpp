#include "germlab/monomial_order.hpp"

#include "germlab/error.hpp"

namespace germlab {

namespace {

// For equal total degree: the monomial with the smaller exponent in the last
// differing variable is larger.
std::strong_ordering revlex_tiebreak(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) {
      return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  return revlex_tiebreak(a, b);
}

}  // namespace

MonomialOrder MonomialOrder::weighted(const WeightVector& w) {
  MonomialOrder order(Kind::WeightedGrevlex);
  for (const auto& v : w.primitive_integer()) {
    if (!v.fits_slong_p()) throw ValidationError("weight too large for a term order");
    order.weights_.push_back(v.get_si());
  }
  return order;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_compare(a, b);
    case Kind::WeightedGrevlex: {
      long wa = 0, wb = 0;
      for (std::size_t i = 0; i < weights_.size() && i < a.arity(); ++i) {
        wa += weights_[i] * a[i];
        wb += weights_[i] * b[i];
      }
      if (wa != wb) return wa <=> wb;
      return grevlex_compare(a, b);
    }
    case Kind::LocalDegree: {
      int da = a.degree(), db = b.degree();
      if (da != db) return db <=> da;
      return revlex_tiebreak(a, b);
    }
    case Kind::Elimination: {
      const std::size_t last = a.arity() - 1;
      if (a[last] != b[last]) return a[last] <=> b[last];
      return grevlex_compare(a, b);
    }
    case Kind::Homogenized: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da <=> db;
      const std::size_t h = a.arity() - 1;
      if (a[h] != b[h]) return a[h] <=> b[h];
      return revlex_tiebreak(a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::WeightedGrevlex: {
      std::string s = "weighted-grevlex(";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        s += (i ? "," : "") + std::to_string(weights_[i]);
      }
      return s + ")";
    }
    case Kind::LocalDegree:
      return "local-degree";
    case Kind::Elimination:
      return "elimination-last";
    case Kind::Homogenized:
      return "homogenized-local";
  }
  return "unknown";
}

}  // namespace germlab
