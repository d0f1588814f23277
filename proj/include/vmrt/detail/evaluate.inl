#pragma once

#include "vmrt/error.hpp"

namespace vmrt {

template <class R>
R evaluate(const SparsePoly& p, std::span<const R> args, const R& one) {
  if (args.size() != p.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "evaluate: expected " + std::to_string(p.nvars()) +
                                                  " arguments, got " + std::to_string(args.size()));
  }
  const R zero = one * Rat(0);
  // powers[i][e] = args[i]^e, grown on demand
  std::vector<std::vector<R>> powers(args.size());
  auto power = [&](size_t i, unsigned e) -> const R& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(one);
    }
    while (cache.size() <= e) {
      cache.push_back(cache.back() * args[i]);
    }
    return cache[e];
  };

  R result = zero;
  for (const auto& [exps, c] : p.terms()) {
    std::optional<R> prod;
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (prod) {
        *prod = *prod * power(i, exps[i]);
      } else {
        prod = power(i, exps[i]);
      }
    }
    if (prod) {
      result = result + (*prod) * c;
    } else {
      result = result + one * c;
    }
  }
  return result;
}

}  // namespace vmrt
