#include "vmrt/eco.hpp"

#include <map>
#include <mutex>

#include "vmrt/error.hpp"

namespace vmrt {

namespace {

std::shared_ptr<const EcoFamily> make_family(int m) {
  auto fam = std::make_shared<EcoFamily>();
  fam->m = m;
  fam->vars = VarList::indexed("t", 1, static_cast<unsigned>(m));
  const SparsePoly zero(fam->vars);

  fam->G.push_back(SparsePoly(fam->vars, Rat(1)));
  for (int k = 1; k <= m; ++k) {
    SparsePoly acc = SparsePoly::variable(fam->vars, static_cast<size_t>(k - 1));
    for (int i = 1; i < k; ++i) acc -= fam->G[i] * fam->G[k - i];
    fam->G.push_back(acc / Rat(2));
  }
  auto g = [&](int l) -> const SparsePoly& { return l <= m ? fam->G[l] : zero; };

  for (int k = m + 1; k <= 2 * m; ++k) {
    SparsePoly a(fam->vars);
    for (int l = 0; l <= k; ++l) {
      if (l > m || k - l > m) continue;
      a += g(l) * g(k - l);
    }
    std::vector<SparsePoly> partials;
    for (int j = 0; j < m; ++j) partials.push_back(partial(a, static_cast<size_t>(j)));
    fam->A.push_back(std::move(a));
    fam->A_partials.push_back(std::move(partials));
  }
  return fam;
}

}  // namespace

std::shared_ptr<const EcoFamily> build_family(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "build_family: m must be positive");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const EcoFamily>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = make_family(m);
  return slot;
}

EcoCertificate certify(std::span<const Rat> a) {
  if (a.empty() || a.size() % 2 != 0) {
    throw Error(ErrorKind::OddLength, "certify: expected 2m coefficients, got " + std::to_string(a.size()));
  }
  EcoCertificate cert;
  const int m = static_cast<int>(a.size() / 2);
  cert.m = m;

  // s_0 = 1, s_k = (a_k - sum_{i=1}^{k-1} s_i s_{k-i}) / 2
  std::vector<Rat> s(static_cast<size_t>(m) + 1);
  s[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Rat acc = a[static_cast<size_t>(k - 1)];
    for (int i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s[k] = acc / 2;
  }
  cert.sigma.assign(s.begin() + 1, s.end());

  auto fam = build_family(m);
  std::span<const Rat> low = a.first(static_cast<size_t>(m));
  cert.pass = true;
  for (int k = m + 1; k <= 2 * m; ++k) {
    Rat r = a[static_cast<size_t>(k - 1)] - evaluate_at(fam->A_of(k), low);
    if (!is_zero(r)) cert.pass = false;
    cert.residuals.push_back(std::move(r));
  }
  return cert;
}

bool is_weighted_homogeneous(const SparsePoly& p, int k, std::span<const int> weights) {
  if (weights.size() != p.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "is_weighted_homogeneous: one weight per variable expected");
  }
  for (const auto& [e, c] : p.terms()) {
    long total = 0;
    for (size_t j = 0; j < e.size(); ++j) total += static_cast<long>(weights[j]) * e[j];
    if (total != k) return false;
  }
  return true;
}

}  // namespace vmrt
