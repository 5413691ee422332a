#ifndef GAPLAB_RAMSEY_HPP
#define GAPLAB_RAMSEY_HPP

// Knowledge base for the triangle Ramsey numbers R(3,l) and R(4,4): exact
// values where known, bound intervals elsewhere, the inverse function
// alpha(n), the parity correction epsilon(n), perfect-sum and twin
// detection, and an inequality suite that vets any table. Everything
// downstream works in three-valued arithmetic so an open Ramsey value can
// never silently produce a wrong exact answer.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gaplab/graph.hpp"

namespace gaplab {

// exact(v) == range(v, v); a missing hi means "no upper bound known";
// a missing lo means no information at all on that side.
struct PartialValue {
  std::optional<int> lo, hi;

  static PartialValue exact(int v) { return {v, v}; }
  static PartialValue range(int a, int b) { return {a, b}; }
  static PartialValue at_least(int a) { return {a, std::nullopt}; }
  static PartialValue unknown() { return {std::nullopt, std::nullopt}; }

  bool is_exact() const { return lo && hi && *lo == *hi; }
  bool operator==(const PartialValue& o) const { return lo == o.lo && hi == o.hi; }
};

// Three-valued booleans ride on PartialValue: exact(1) yes, exact(0) no,
// range(0,1) undecided.
inline PartialValue tri_yes() { return PartialValue::exact(1); }
inline PartialValue tri_no() { return PartialValue::exact(0); }
inline PartialValue tri_maybe() { return PartialValue::range(0, 1); }
inline bool known_yes(const PartialValue& p) { return p.is_exact() && *p.lo == 1; }
inline bool known_no(const PartialValue& p) { return p.is_exact() && *p.lo == 0; }

struct RamseyTable {
  std::map<int, PartialValue> r3;  // l -> R(3,l)
  PartialValue r44 = PartialValue::unknown();

  int max_ell() const { return r3.empty() ? 0 : r3.rbegin()->first; }
  PartialValue entry(int ell) const {
    const auto it = r3.find(ell);
    return it == r3.end() ? PartialValue::unknown() : it->second;
  }
};

inline const RamseyTable& default_table() {
  static const RamseyTable table = [] {
    RamseyTable t;
    // R(3,1)=1 is our extension so that alpha(n) is total.
    const int exact[] = {0, 1, 3, 6, 9, 14, 18, 23, 28, 36};
    for (int l = 1; l <= 9; ++l) t.r3[l] = PartialValue::exact(exact[l]);
    t.r3[10] = PartialValue::range(40, 43);
    t.r3[11] = PartialValue::range(46, 51);
    t.r3[12] = PartialValue::range(52, 59);
    t.r3[13] = PartialValue::range(59, 69);
    t.r3[14] = PartialValue::range(66, 78);
    t.r3[15] = PartialValue::range(73, 88);
    const int lower[] = {79, 92, 99, 106, 111, 122, 125, 136, 143, 153, 159, 167, 172, 182};
    for (int l = 16; l <= 29; ++l) t.r3[l] = PartialValue::at_least(lower[l - 16]);
    t.r44 = PartialValue::exact(18);
    return t;
  }();
  return table;
}

// Table bounds for R(3,ell), extended past the last entry by the additive
// ladder R(3,l+1) >= R(3,l) + 3 (valid from l = 2 on).
inline PartialValue r3_bounds(const RamseyTable& t, int ell) {
  if (ell < 1) throw std::invalid_argument("r3_bounds: ell must be >= 1");
  const auto it = t.r3.find(ell);
  if (it != t.r3.end()) return it->second;
  const int last = t.max_ell();
  if (ell > last && last >= 2) {
    const PartialValue base = t.entry(last);
    if (base.lo) return PartialValue::at_least(*base.lo + 3 * (ell - last));
  }
  return PartialValue::unknown();
}

// alpha(n): the unique a with R(3,a) <= n < R(3,a+1).
inline PartialValue alpha_of(int n, const RamseyTable& t = default_table()) {
  if (n < 1) throw std::invalid_argument("alpha_of: n must be >= 1");
  int lo = 0;
  for (const auto& [ell, pv] : t.r3)
    if (pv.hi && *pv.hi <= n) lo = std::max(lo, ell);
  std::optional<int> hi;
  for (const auto& [ell, pv] : t.r3)
    if (pv.lo && *pv.lo > n) {
      hi = ell - 1;
      break;
    }
  if (!hi) {
    // Nothing in the table exceeds n; walk the ladder past the last entry.
    const int last = t.max_ell();
    const PartialValue base = t.entry(last);
    if (last >= 2 && base.lo)
      for (int j = 1;; ++j)
        if (*base.lo + 3 * j > n) {
          hi = last + j - 1;
          break;
        }
  }
  if (!hi) return PartialValue::at_least(lo);
  return PartialValue::range(lo, *hi);
}

// Is n a value of R(3, ) for some l? Yes needs an exact hit; no needs every
// interval to exclude n, including everything past the table (covered when
// n falls below the least possible next value).
inline PartialValue is_ramsey_number(int n, const RamseyTable& t = default_table()) {
  bool possible = false;
  for (const auto& [ell, pv] : t.r3) {
    if (pv.is_exact() && *pv.lo == n) return tri_yes();
    if (pv.lo && *pv.lo <= n && (!pv.hi || *pv.hi >= n)) possible = true;
    if (!pv.lo && (!pv.hi || *pv.hi >= n)) possible = true;
  }
  const int last = t.max_ell();
  const PartialValue base = t.entry(last);
  const bool covered = last >= 2 && base.lo && n < *base.lo + 3;
  return (!possible && covered) ? tri_no() : tri_maybe();
}

struct RamseyPerfectCertificate {
  int n = 0;
  int n1 = 0, n2 = 0;          // odd parts >= 5
  int alpha1 = 0, alpha2 = 0;  // alpha of the parts; alpha1+alpha2 = alpha(n)
};

struct RamseyPerfectResult {
  PartialValue verdict;  // three-valued
  std::optional<RamseyPerfectCertificate> certificate;
};

namespace detail {

// Equivalent characterization: n is perfect iff some a1 >= a2 >= 2 satisfy
// n = R(3,a1+a2)+1 = (R(3,a1+1)-1) + (R(3,a2+1)-1) with both R(3,ai+1) even.
inline PartialValue ramsey_perfect_by_equation(int n, const RamseyTable& t) {
  bool indeterminate = false;
  for (int a2 = 2;; ++a2) {
    const PartialValue low_sum = r3_bounds(t, 2 * a2);
    if (low_sum.lo && *low_sum.lo > n - 1) break;  // sums only grow from here
    if (!low_sum.lo) {
      indeterminate = true;
      break;
    }
    for (int a1 = a2;; ++a1) {
      const PartialValue sum = r3_bounds(t, a1 + a2);
      if (!sum.lo) {
        indeterminate = true;
        break;
      }
      if (*sum.lo > n - 1) break;
      const PartialValue e1 = r3_bounds(t, a1 + 1);
      const PartialValue e2 = r3_bounds(t, a2 + 1);
      // Provable failure of any clause kills this pair.
      const bool sum_fail = (sum.hi && *sum.hi < n - 1) || (sum.lo && *sum.lo > n - 1);
      const bool split_fail =
          (e1.hi && e2.hi && *e1.hi + *e2.hi - 2 < n) || (e1.lo && e2.lo && *e1.lo + *e2.lo - 2 > n);
      const bool parity_fail =
          (e1.is_exact() && *e1.lo % 2 == 1) || (e2.is_exact() && *e2.lo % 2 == 1);
      if (sum_fail || split_fail || parity_fail) continue;
      if (sum.is_exact() && e1.is_exact() && e2.is_exact() && *sum.lo == n - 1 &&
          *e1.lo - 1 + *e2.lo - 1 == n && *e1.lo % 2 == 0 && *e2.lo % 2 == 0)
        return tri_yes();
      indeterminate = true;
    }
  }
  return indeterminate ? tri_maybe() : tri_no();
}

}  // namespace detail

// Definition: n is perfect iff n is not an even Ramsey number and
// n = n1 + n2 with n1, n2 >= 5 odd and alpha(n) = alpha(n1) + alpha(n2).
// The verdict is cross-checked against the equation form above; a decisive
// disagreement means the table itself is inconsistent.
inline RamseyPerfectResult is_ramsey_perfect(int n, const RamseyTable& t = default_table()) {
  if (n < 1) throw std::invalid_argument("is_ramsey_perfect: n must be >= 1");
  RamseyPerfectResult out;
  if (n % 2 == 1 || n < 10) {
    out.verdict = tri_no();
    return out;
  }
  const PartialValue ramsey = is_ramsey_number(n, t);  // n is even here
  const PartialValue an = alpha_of(n, t);
  bool any_indeterminate = false;
  std::optional<RamseyPerfectCertificate> cert;
  for (int n1 = 5; n1 <= n - n1; n1 += 2) {
    const int n2 = n - n1;
    const PartialValue a1 = alpha_of(n1, t);
    const PartialValue a2 = alpha_of(n2, t);
    const bool fail = (a1.hi && a2.hi && an.lo && *a1.hi + *a2.hi < *an.lo) ||
                      (a1.lo && a2.lo && an.hi && *a1.lo + *a2.lo > *an.hi);
    if (fail) continue;
    if (a1.is_exact() && a2.is_exact() && an.is_exact() && *a1.lo + *a2.lo == *an.lo) {
      if (!cert) cert = RamseyPerfectCertificate{n, n1, n2, *a1.lo, *a2.lo};
    } else {
      any_indeterminate = true;
    }
  }
  if (cert && known_no(ramsey)) {
    out.verdict = tri_yes();
    out.certificate = cert;
  } else if (!cert && !any_indeterminate) {
    out.verdict = tri_no();  // no split can work, Ramsey or not
  } else if (known_yes(ramsey)) {
    out.verdict = tri_no();  // even Ramsey numbers are excluded outright
  } else {
    out.verdict = tri_maybe();
  }

  const PartialValue eq = detail::ramsey_perfect_by_equation(n, t);
  if (out.verdict.is_exact() && eq.is_exact() && !(out.verdict == eq))
    throw std::logic_error("ramsey table inconsistency: perfect-number characterizations disagree at n=" +
                           std::to_string(n));
  return out;
}

inline PartialValue epsilon_of(int n, const RamseyTable& t = default_table()) {
  if (n < 1) throw std::invalid_argument("epsilon_of: n must be >= 1");
  PartialValue even_ramsey = n % 2 == 0 ? is_ramsey_number(n, t) : tri_no();
  PartialValue perfect = is_ramsey_perfect(n, t).verdict;
  if (known_yes(even_ramsey) || known_yes(perfect)) return PartialValue::exact(1);
  if (known_no(even_ramsey) && known_no(perfect)) return PartialValue::exact(0);
  return PartialValue::range(0, 1);
}

// Consecutive exact values at distance exactly 3.
inline std::vector<std::pair<int, int>> find_twins(const RamseyTable& t, int up_to_ell) {
  std::vector<std::pair<int, int>> out;
  for (int ell = 1; ell + 1 <= up_to_ell; ++ell) {
    const PartialValue a = t.entry(ell), b = t.entry(ell + 1);
    if (a.is_exact() && b.is_exact() && *b.lo - *a.lo == 3) out.emplace_back(*a.lo, *b.lo);
  }
  return out;
}

// Inequality suite. A violation is reported only when provable from the
// intervals; silence is not a proof of consistency for open values.
inline std::vector<std::string> validate_table(const RamseyTable& t) {
  std::vector<std::string> out;
  const auto name = [](int ell) { return "R(3," + std::to_string(ell) + ")"; };

  for (const auto& [ell, pv] : t.r3) {
    if (ell < 1) out.push_back("entry with l=" + std::to_string(ell) + ": l must be >= 1");
    if (pv.lo && pv.hi && *pv.lo > *pv.hi)
      out.push_back(name(ell) + ": malformed interval [" + std::to_string(*pv.lo) + "," +
                    std::to_string(*pv.hi) + "]");
  }

  // diff(a, b) >= c is provably violated iff even the widest reading fails.
  const auto lower_violated = [&](int hi_ell, int lo_ell, int c) {
    const PartialValue x = t.entry(hi_ell), y = t.entry(lo_ell);
    return x.hi && y.lo && *x.hi - *y.lo < c;
  };
  const auto upper_violated = [&](int hi_ell, int lo_ell, int c) {
    const PartialValue x = t.entry(hi_ell), y = t.entry(lo_ell);
    return x.lo && y.hi && *x.lo - *y.hi > c;
  };
  const auto report = [&](const std::string& rule, int a, int k, const std::string& what) {
    out.push_back(rule + " at alpha=" + std::to_string(a) +
                  (k > 1 ? " (k=" + std::to_string(k) + ")" : "") + ": " + what);
  };

  const int last = t.max_ell();
  for (int a = 1; a + 1 <= last; ++a) {
    if (lower_violated(a + 1, a, 1))
      report("monotonicity", a, 1, name(a + 1) + " <= " + name(a));
    if (upper_violated(a + 1, a, a + 1))
      report("step upper bound", a, 1, name(a + 1) + " - " + name(a) + " > alpha+1");
    if (a >= 2 && lower_violated(a + 1, a, 3))
      report("step lower bound", a, 1, name(a + 1) + " - " + name(a) + " < 3");
    // Both endpoints exact and even: the step bounds are strict.
    const PartialValue x = t.entry(a + 1), y = t.entry(a);
    if (x.is_exact() && y.is_exact() && *x.lo % 2 == 0 && *y.lo % 2 == 0) {
      if (*x.lo - *y.lo == a + 1)
        report("strict step upper bound", a, 1, "equality with both values even");
      if (a >= 2 && *x.lo - *y.lo == 3)
        report("strict step lower bound", a, 1, "equality with both values even");
    }
  }
  for (int a = 3; a + 2 <= last; ++a)
    if (lower_violated(a + 2, a, 7))
      report("double step", a, 2, name(a + 2) + " - " + name(a) + " < 7");
  for (int a = 2; a + 3 <= last; ++a)
    if (lower_violated(a + 3, a, 11))
      report("triple step", a, 3, name(a + 3) + " - " + name(a) + " < 11");
  for (int a = 3; a + 4 <= last; ++a)
    if (lower_violated(a + 4, a, 17))
      report("quadruple step", a, 4, name(a + 4) + " - " + name(a) + " < 17");
  // General step: R(3,a+k) - R(3,a) >= R(3,k+1) + k - 1 for a >= k+1 >= 3.
  for (int k = 2; k <= last; ++k) {
    const PartialValue rhs = t.entry(k + 1);
    if (!rhs.lo) continue;
    for (int a = k + 1; a + k <= last; ++a)
      if (lower_violated(a + k, a, *rhs.lo + k - 1))
        report("general step", a, k,
               name(a + k) + " - " + name(a) + " < " + std::to_string(*rhs.lo + k - 1));
  }
  // The general step extended below its natural range with fixed constants.
  const struct {
    int k, c, min_alpha;
  } extended[] = {{5, 22, 3},  {6, 28, 3},  {7, 34, 3},  {8, 43, 4},  {9, 48, 4},
                  {10, 55, 4}, {11, 62, 4}, {12, 70, 4}, {13, 78, 4}, {14, 86, 3}};
  for (const auto& e : extended)
    for (int a = e.min_alpha; a + e.k <= last; ++a)
      if (lower_violated(a + e.k, a, e.c))
        report("extended step", a, e.k,
               name(a + e.k) + " - " + name(a) + " < " + std::to_string(e.c));
  // Superadditivity: R(3,p+q-1) >= R(3,p) + R(3,q) + min(p,q) - 2.
  for (int p = 2; p <= last; ++p)
    for (int q = p; p + q - 1 <= last; ++q) {
      const PartialValue x = t.entry(p + q - 1), yp = t.entry(p), yq = t.entry(q);
      if (x.hi && yp.lo && yq.lo && *x.hi < *yp.lo + *yq.lo + p - 2)
        out.push_back("superadditivity at p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                      ": " + name(p + q - 1) + " < " + name(p) + " + " + name(q) + " + " +
                      std::to_string(p - 2));
    }
  return out;
}

// {"r3": [{"l": 2, "lo": 3, "hi": 3}, ...], "r44": {"lo": 18, "hi": 18}};
// omitting "hi" leaves a value unbounded above.
inline RamseyTable table_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("r3") || !j["r3"].is_array())
    throw parse_error("ramsey table: expected object with an \"r3\" array");
  RamseyTable t;
  for (const auto& e : j["r3"]) {
    if (!e.is_object() || !e.contains("l") || !e.contains("lo") ||
        !e["l"].is_number_integer() || !e["lo"].is_number_integer())
      throw parse_error("ramsey table: each r3 entry needs integer \"l\" and \"lo\"");
    const int ell = e["l"].get<int>();
    if (ell < 1) throw parse_error("ramsey table: l must be >= 1");
    if (t.r3.count(ell)) throw parse_error("ramsey table: duplicate entry for l=" + std::to_string(ell));
    PartialValue pv = PartialValue::at_least(e["lo"].get<int>());
    if (e.contains("hi")) {
      if (!e["hi"].is_number_integer()) throw parse_error("ramsey table: \"hi\" must be an integer");
      pv.hi = e["hi"].get<int>();
      if (*pv.hi < *pv.lo) throw parse_error("ramsey table: hi < lo at l=" + std::to_string(ell));
    }
    t.r3[ell] = pv;
  }
  if (j.contains("r44")) {
    const auto& e = j["r44"];
    if (!e.is_object() || !e.contains("lo") || !e["lo"].is_number_integer())
      throw parse_error("ramsey table: \"r44\" needs an integer \"lo\"");
    t.r44 = PartialValue::at_least(e["lo"].get<int>());
    if (e.contains("hi")) {
      if (!e["hi"].is_number_integer()) throw parse_error("ramsey table: \"hi\" must be an integer");
      t.r44.hi = e["hi"].get<int>();
      if (*t.r44.hi < *t.r44.lo) throw parse_error("ramsey table: r44 hi < lo");
    }
  }
  return t;
}

inline nlohmann::json table_to_json(const RamseyTable& t) {
  nlohmann::json j;
  j["r3"] = nlohmann::json::array();
  for (const auto& [ell, pv] : t.r3) {
    nlohmann::json e{{"l", ell}};
    if (pv.lo) e["lo"] = *pv.lo;
    if (pv.hi) e["hi"] = *pv.hi;
    j["r3"].push_back(e);
  }
  if (t.r44.lo || t.r44.hi) {
    nlohmann::json e = nlohmann::json::object();
    if (t.r44.lo) e["lo"] = *t.r44.lo;
    if (t.r44.hi) e["hi"] = *t.r44.hi;
    j["r44"] = e;
  }
  return j;
}

}  // namespace gaplab

#endif  // GAPLAB_RAMSEY_HPP
