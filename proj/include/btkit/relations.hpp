#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "parallel.hpp"
#include "words.hpp"

namespace btkit {

// One instance of an identity between two word expressions.
struct Identity {
  std::string family;
  std::string id;
  std::string statement;
  std::vector<int> indices;
  WordExpr lhs;
  WordExpr rhs;
};

struct IdentityCheck {
  std::string family;
  std::string id;
  std::string statement;
  std::vector<int> indices;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline std::string substitute(std::string text, int i, int j) {
  const std::pair<std::string, std::string> keys[] = {
      {"{i+1}", std::to_string(i + 1)}, {"{i+2}", std::to_string(i + 2)},
      {"{i-1}", std::to_string(i - 1)}, {"{i}", std::to_string(i)},
      {"{j}", std::to_string(j)},
  };
  for (const auto& [k, v] : keys) {
    for (std::size_t p = text.find(k); p != std::string::npos; p = text.find(k, p + v.size())) {
      text.replace(p, k.size(), v);
    }
  }
  return text;
}

inline Identity make(std::string family, std::string id, const std::string& tmpl, std::vector<int> idx,
                     WordExpr lhs, WordExpr rhs) {
  int i = idx.empty() ? 0 : idx[0];
  int j = idx.size() > 1 ? idx[1] : 0;
  return {std::move(family), std::move(id), substitute(tmpl, i, j), std::move(idx), std::move(lhs),
          std::move(rhs)};
}

inline bool adjacent(int i, int j) { return i - j == 1 || j - i == 1; }
inline bool far(int i, int j) { return i - j > 1 || j - i > 1; }

}  // namespace detail

// The nine families of defining relations of E_n, every instance.
inline std::vector<Identity> defining_relations(int n) {
  using namespace words;
  using detail::make;
  std::vector<Identity> out;
  const std::string fam = "defining";
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (detail::far(i, j)) out.push_back(make(fam, "T-far-commute", "T{i}T{j} = T{j}T{i}", {i, j}, T(i) * T(j), T(j) * T(i)));
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (detail::adjacent(i, j)) {
        out.push_back(make(fam, "T-braid", "T{i}T{j}T{i} = T{j}T{i}T{j}", {i, j}, T(i) * T(j) * T(i), T(j) * T(i) * T(j)));
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    out.push_back(make(fam, "T-quadratic", "T{i}^2 = 1 + (u-1)E{i}(1 + T{i})", {i}, T(i) * T(i),
                       one() + (u() - Scalar(1)) * (E(i) * (one() + T(i)))));
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      out.push_back(make(fam, "E-commute", "E{i}E{j} = E{j}E{i}", {i, j}, E(i) * E(j), E(j) * E(i)));
    }
  }
  for (int i = 1; i < n; ++i) out.push_back(make(fam, "E-idempotent", "E{i}^2 = E{i}", {i}, E(i) * E(i), E(i)));
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (detail::far(i, j)) out.push_back(make(fam, "ET-far-commute", "E{i}T{j} = T{j}E{i}", {i, j}, E(i) * T(j), T(j) * E(i)));
    }
  }
  for (int i = 1; i < n; ++i) out.push_back(make(fam, "ET-commute", "E{i}T{i} = T{i}E{i}", {i}, E(i) * T(i), T(i) * E(i)));
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (!detail::adjacent(i, j)) continue;
      out.push_back(make(fam, "EET-left", "E{i}E{j}T{i} = T{i}E{i}E{j}", {i, j}, E(i) * E(j) * T(i), T(i) * E(i) * E(j)));
      out.push_back(make(fam, "EET-right", "T{i}E{i}E{j} = E{j}T{i}E{j}", {i, j}, T(i) * E(i) * E(j), E(j) * T(i) * E(j)));
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (detail::adjacent(i, j)) {
        out.push_back(make(fam, "ETT-exchange", "E{i}T{j}T{i} = T{j}T{i}E{j}", {i, j}, E(i) * T(j) * T(i), T(j) * T(i) * E(j)));
      }
    }
  }
  return out;
}

// Conjugation by Gamma = T_1...T_{n-1} shifts generators, Steinberg
// elements and the tie E_{1,3} one step to the right.
inline std::vector<Identity> gamma_identities(int n) {
  using namespace words;
  using detail::make;
  std::vector<Identity> out;
  const std::string fam = "gamma-conjugation";
  auto conj = [n](const WordExpr& x, int k) { return gamma_power(k, n) * x * gamma_power(-k, n); };
  for (int i = 1; i < n; ++i) {
    out.push_back(make(fam, "gamma-shift-T", "T{i} = G^{i-1} T1 G^-{i-1}", {i}, T(i), conj(T(1), i - 1)));
  }
  for (int i = 1; i + 1 < n; ++i) {
    out.push_back(make(fam, "gamma-shift-steinberg", "T{i},{i+1} = G^{i-1} T1,2 G^-{i-1}", {i},
                       steinberg(i, i + 1), conj(steinberg(1, 2), i - 1)));
  }
  for (int i = 1; i < n; ++i) {
    out.push_back(make(fam, "gamma-shift-E", "E{i} = G^{i-1} E1 G^-{i-1}", {i}, E(i), conj(E(1), i - 1)));
  }
  for (int i = 1; i + 1 < n; ++i) {
    out.push_back(make(fam, "gamma-pass-T", "T{i+1} G^{i-1} = G^{i-1} T2", {i}, T(i + 1) * gamma_power(i - 1, n),
                       gamma_power(i - 1, n) * T(2)));
  }
  for (int i = 1; i + 2 <= n; ++i) {
    out.push_back(make(fam, "gamma-shift-E-arc", "E{{i},{i+2}} = G^{i-1} E{1,3} G^-{i-1}", {i}, E_arc(i, i + 2),
                       conj(E_arc(1, 3), i - 1)));
  }
  return out;
}

// Identities for the idempotents L_i, plus the equivalent forms of L_i and
// the quadratic relation of F_i.
inline std::vector<Identity> idempotent_identities(int n) {
  using namespace words;
  using detail::make;
  std::vector<Identity> out;
  const std::string fam = "idempotent-L";
  const Scalar one_s(1);
  for (int i = 1; i < n; ++i) {
    out.push_back(make(fam, "L-idempotent", "L{i}^2 = L{i}", {i}, L(i) * L(i), L(i)));
    out.push_back(make(fam, "EL-absorbs", "(1+u)E{i}L{i} = E{i}(1 + T{i})", {i}, (one_s + u()) * (E(i) * L(i)),
                       E(i) * (one() + T(i))));
    out.push_back(make(fam, "T-from-L", "T{i} = 2L{i} + (u-1)E{i}L{i} - 1", {i}, T(i),
                       Scalar(2) * L(i) + (u() - one_s) * (E(i) * L(i)) - one()));
    out.push_back(make(fam, "EL-equals-EF", "E{i}L{i} = E{i}F{i}", {i}, E(i) * L(i), E(i) * F(i)));
    out.push_back(make(fam, "F-from-L", "F{i} = (1+d)L{i} - dE{i}L{i}", {i}, F(i),
                       (one_s + delta()) * L(i) - delta() * (E(i) * L(i))));
  }
  for (int i = 1; i < n; ++i) {
    out.push_back(make("element-forms", "L-alpha-form", "L{i} = (T{i}+1)(a + (1-a)E{i})/(1+u)", {i}, L(i),
                       L_from_alpha(i)));
    out.push_back(make("element-forms", "L-from-F", "L{i} = (u+1)/2 F{i} + (1-u)/2 E{i}F{i}", {i}, L(i),
                       ((one_s + u()) / Scalar(2)) * F(i) + ((one_s - u()) / Scalar(2)) * (E(i) * F(i))));
    out.push_back(make("element-forms", "F-quadratic", "F{i}^2 = (1+d)F{i} - dE{i}F{i}", {i}, F(i) * F(i),
                       (one_s + delta()) * F(i) - delta() * (E(i) * F(i))));
    out.push_back(make("element-forms", "T-inverse", "T{i}T{i}^-1 = 1", {i}, T(i) * Tinv(i), one()));
    out.push_back(make("element-forms", "T-inverse-expanded", "T{i}^-1 = T{i} + (1/u-1)E{i}(1+T{i})", {i},
                       Tinv(i), Tinv_expanded(i)));
  }
  return out;
}

// Moving a tie past F_i, for |i-j| = 1.
inline std::vector<Identity> tie_exchange_identities(int n) {
  using namespace words;
  using detail::make;
  std::vector<Identity> out;
  const std::string fam = "tie-exchange";
  const Scalar c = (Scalar(1) + u()).inverse();
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (!detail::adjacent(i, j)) continue;
      WordExpr conj = T(i) * E(j) * Tinv(i);
      out.push_back(make(fam, "FE-exchange", "F{i}E{j} = T{i}E{j}T{i}^-1 F{i} + (E{j} - T{i}E{j}T{i}^-1)/(u+1)",
                         {i, j}, F(i) * E(j), conj * F(i) + c * (E(j) - conj)));
      out.push_back(make(fam, "EF-exchange", "E{j}F{i} = F{i} T{i}E{j}T{i}^-1 + (E{j} - T{i}E{j}T{i}^-1)/(u+1)",
                         {i, j}, E(j) * F(i), F(i) * conj + c * (E(j) - conj)));
    }
  }
  return out;
}

// Left multiplication of the Steinberg element T_{i,i+1} by T_w, w in the
// parabolic subgroup on {i, i+1, i+2}.
inline std::vector<Identity> steinberg_absorption_identities(int n) {
  using namespace words;
  using detail::make;
  std::vector<Identity> out;
  const std::string fam = "steinberg-absorption";
  const Scalar um1 = u() - Scalar(1);
  for (int i = 1; i + 1 < n; ++i) {
    int j = i + 1;
    WordExpr st = steinberg(i, j);
    WordExpr eij = E(i) * E(j);
    WordExpr e13 = E_arc(i, i + 2);
    out.push_back(make(fam, "T-left-absorb", "T{i}T{i},{i+1} = [1 + (u-1)E{i}]T{i},{i+1}", {i}, T(i) * st,
                       (one() + um1 * E(i)) * st));
    out.push_back(make(fam, "T-right-absorb", "T{i+1}T{i},{i+1} = [1 + (u-1)E{i+1}]T{i},{i+1}", {i}, T(j) * st,
                       (one() + um1 * E(j)) * st));
    out.push_back(make(fam, "TT-left-absorb",
                       "T{i}T{i+1}T{i},{i+1} = [1 + (u-1)(E{i} + E{{i},{i+2}}) + (u-1)^2E{i}E{i+1}]T{i},{i+1}", {i},
                       T(i) * T(j) * st, (one() + um1 * E(i) + um1 * e13 + um1 * um1 * eij) * st));
    out.push_back(make(fam, "TT-right-absorb",
                       "T{i+1}T{i}T{i},{i+1} = [1 + (u-1)(E{i+1} + E{{i},{i+2}}) + (u-1)^2E{i}E{i+1}]T{i},{i+1}",
                       {i}, T(j) * T(i) * st, (one() + um1 * E(j) + um1 * e13 + um1 * um1 * eij) * st));
    out.push_back(make(fam, "TTT-absorb",
                       "T{i}T{i+1}T{i}T{i},{i+1} = [1 + (u-1)(E{i} + E{i+1} + E{{i},{i+2}}) + (u-1)^2(u+2)E{i}E{i+1}]"
                       "T{i},{i+1}",
                       {i}, T(i) * T(j) * T(i) * st,
                       (one() + um1 * (E(i) + E(j) + e13) + um1 * um1 * (u() + Scalar(2)) * eij) * st));
  }
  return out;
}

// Everything checked by the lemma suite.
inline std::vector<Identity> lemma_identities(int n) {
  std::vector<Identity> out;
  for (auto&& list : {gamma_identities(n), idempotent_identities(n), tie_exchange_identities(n),
                      steinberg_absorption_identities(n)}) {
    out.insert(out.end(), list.begin(), list.end());
  }
  return out;
}

// Evaluates both sides of every identity in the algebra engine.
template <Field F>
std::vector<IdentityCheck> verify_in_algebra(const BtAlgebra<F>& alg, const std::vector<Identity>& ids,
                                             unsigned jobs = 1) {
  std::vector<IdentityCheck> out(ids.size());
  parallel_for(ids.size(), jobs, [&](std::size_t k) {
    const Identity& id = ids[k];
    auto diff = alg.eval(id.lhs) - alg.eval(id.rhs);
    out[k] = {id.family, id.id, id.statement, id.indices, diff.is_zero(),
              diff.is_zero() ? "" : "lhs - rhs = " + diff.to_string()};
  });
  return out;
}

inline bool all_passed(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace btkit
