#include "qtor/laurent.hpp"

namespace qtor {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Int& c) {
  LaurentPoly p(nvars);
  p.add_term(Exp(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, Exp e, const Int& c) {
  if (e.size() != nvars) fail(errc::size_mismatch, "exponent length mismatch");
  LaurentPoly p(nvars);
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::polynomial() const {
  for (const auto& [e, c] : terms_)
    for (std::int64_t x : e)
      if (x < 0) return false;
  return true;
}

void LaurentPoly::add_term(const Exp& e, const Int& c) {
  if (c == 0) return;
  if (e.size() != nvars_) fail(errc::size_mismatch, "exponent length mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (nvars_ != o.nvars_) fail(errc::size_mismatch, "mixed variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (nvars_ != o.nvars_) fail(errc::size_mismatch, "mixed variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) fail(errc::size_mismatch, "mixed variable counts");
  LaurentPoly p(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      LaurentPoly::Exp e(a.nvars_);
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

LaurentPoly LaurentPoly::pow(std::uint64_t e) const {
  LaurentPoly acc = constant(nvars_, 1);
  for (std::uint64_t i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

}  // namespace qtor
