#include "k3stab/lattice.hpp"

namespace k3stab {

std::string to_string(SurfaceType t) { return t == SurfaceType::K3 ? "K3" : "abelian"; }

// Symmetric Gaussian elimination (congruence), so only the diagonal signs matter.
Signature signature(const Mat<Rational>& symmetric) {
  Mat<Rational> a = symmetric;
  const Eigen::Index n = a.rows();
  Signature sig;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        a.row(k).swap(a.row(j));
        a.col(k).swap(a.col(j));
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) {
          ++sig.zero;
          continue;
        }
        // a_jj = 0 and a_kj != 0: e_k + e_j has square 2 a_kj.
        a.row(k) += a.row(j);
        a.col(k) += a.col(j);
      }
    }
    const Rational pivot = a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / pivot;
      a.row(i) -= f * a.row(k);
      a.col(i) -= f * a.col(k);
    }
    (pivot.sign() > 0 ? sig.positive : sig.negative)++;
  }
  return sig;
}

SurfaceConfig::SurfaceConfig(SurfaceType type, Mat<Integer> gram, Vec<Integer> ample, std::vector<Vec<Integer>> curves)
    : type_(type), gram_(std::move(gram)), ample_(std::move(ample)), curves_(std::move(curves)) {
  const Eigen::Index rho = gram_.rows();
  if (rho < 1 || gram_.cols() != rho) throw ConfigError("gram must be a non-empty square matrix");
  for (Eigen::Index i = 0; i < rho; ++i) {
    if (gram_(i, i) % 2 != 0) throw ConfigError("gram must have even diagonal (NS(X) is an even lattice)");
    for (Eigen::Index j = 0; j < i; ++j)
      if (gram_(i, j) != gram_(j, i)) throw ConfigError("gram must be symmetric");
  }
  gram_q_ = gram_.cast<Rational>();
  Signature sig = signature(gram_q_);
  if (sig.positive != 1 || sig.zero != 0)
    throw ConfigError("gram must have signature (1," + std::to_string(rho - 1) + "), found (" +
                      std::to_string(sig.positive) + "," + std::to_string(sig.negative) + ") with " +
                      std::to_string(sig.zero) + " null directions");
  if (ample_.size() != rho) throw ConfigError("ample class has the wrong number of coordinates");
  if (ample_.dot(gram_ * ample_) <= 0) throw ConfigError("ample class must satisfy H.H > 0");
  for (const auto& c : curves_) {
    if (c.size() != rho) throw ConfigError("a curve class has the wrong number of coordinates");
    if (c.dot(gram_ * c) != -2) throw ConfigError("every configured curve must satisfy C.C = -2");
    if (c.dot(gram_ * ample_) <= 0) throw ConfigError("every configured curve must satisfy C.H > 0");
  }

  const Eigen::Index n = rho + 2;
  mukai_z_ = Mat<Integer>::Zero(n, n);
  mukai_z_.block(1, 1, rho, rho) = gram_;
  mukai_z_(0, n - 1) = -1;
  mukai_z_(n - 1, 0) = -1;
  mukai_q_ = mukai_z_.cast<Rational>();
}

void SurfaceConfig::require_ns(Eigen::Index size, const char* what) const {
  if (size != picard_rank())
    throw ConfigError(std::string(what) + " has " + std::to_string(size) + " NS coordinates but the surface has rank " +
                      std::to_string(picard_rank()));
}

bool is_spherical(const SurfaceConfig& cfg, const MukaiVec& v) {
  if (cfg.is_abelian()) return false;
  return mukai_pairing(cfg, v, v) == -2;
}

bool is_primitive(const MukaiVec& v) {
  if (v.is_zero()) throw DomainError("is_primitive: the zero vector has no primitivity");
  Integer g = 0;
  for (Eigen::Index k = 0; k < v.coords().size(); ++k) g = mp::gcd(g, v.coords()(k));
  return g == 1;
}

template <>
MukaiVec twist_by_exp<Integer>(const SurfaceConfig& cfg, const MukaiVec& v, const Vec<Integer>& ell) {
  Vec<Integer> d = v.delta();
  Integer half_ell2 = cfg.dot<Integer>(ell, ell) / 2;  // exact: NS is even
  Integer s = v.s() + cfg.dot<Integer>(d, ell) + v.r() * half_ell2;
  return MukaiVec(v.r(), Vec<Integer>(d + ell * v.r()), s);
}

Vec<Integer> to_integral(const Vec<Rational>& v, const char* what) {
  Vec<Integer> out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (!is_integral(v(k))) throw DomainError(std::string(what) + " must have integer coordinates");
    out(k) = numerator(v(k));
  }
  return out;
}

}  // namespace k3stab
