#include "k3stab/charge.hpp"

namespace k3stab {

bool in_phase_domain(const GaussianRational& z) { return z.im.sign() > 0 || (z.im == 0 && z.re.sign() < 0); }

namespace {

void require_domain(const GaussianRational& z, const char* which) {
  if (z.is_zero()) throw DomainError(std::string("phase of a zero central charge (") + which + ")");
  if (!in_phase_domain(z))
    throw DomainError(std::string("central charge ") + to_string(z) + " (" + which +
                      ") lies outside the upper half-plane and negative real axis");
}

}  // namespace

// Both phases lie in (0,1], so pi*(phi1 - phi2) = arg(z1 conj z2) is in
// (-pi, pi) and its sine has the sign of the difference.
std::weak_ordering phase_compare(const GaussianRational& z1, const GaussianRational& z2) {
  require_domain(z1, "first argument");
  require_domain(z2, "second argument");
  Rational cross = z1.im * z2.re - z1.re * z2.im;
  int s = cross.sign();
  if (s < 0) return std::weak_ordering::less;
  if (s > 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

Phase::Phase(GaussianRational z) : z_(std::move(z)) { require_domain(z_, "phase"); }

std::string Phase::bracket() const {
  if (z_.im == 0) return "1";
  if (z_.re == 0) return "1/2";
  return z_.re.sign() > 0 ? "(0,1/2)" : "(1/2,1)";
}

}  // namespace k3stab
