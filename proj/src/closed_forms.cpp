#include "topoidx/closed_forms.hpp"

#include <algorithm>

#include "topoidx/error.hpp"

namespace topoidx {

namespace {

using Formula = std::function<OracleValue(const Params&)>;

struct Pattern {
  std::string key;
  std::vector<std::string_view> params;
  std::string stated_range;
  std::function<bool(const Params&)> in_range;
  std::function<FamilySpec(const Params&)> graph;
};

Rat pw(const Rat& base, const Rat& e) { return pow(base, e.num().to_long()); }
Rat ab(const Rat& x) { return x.abs(); }

ExpPoly poly(std::initializer_list<std::pair<Rat, Rat>> coeff_exponent) {
  ExpPoly p;
  for (const auto& [c, e] : coeff_exponent) {
    if (!c.is_integer()) throw Error(ErrorCode::UnsupportedEvaluation, "non-integer polynomial coefficient");
    p.add_term(e, c.num());
  }
  return p;
}

Formula f1(std::function<OracleValue(const Rat&)> f) {
  return [f = std::move(f)](const Params& p) { return f(Rat(p.at(0))); };
}

Formula f2(std::function<OracleValue(const Rat&, const Rat&)> f) {
  return [f = std::move(f)](const Params& p) { return f(Rat(p.at(0)), Rat(p.at(1))); };
}

Pattern one(std::string key, Family fam, long min_n) {
  return {key, {"n"}, "n >= " + std::to_string(min_n), [min_n](const Params& p) { return p[0] >= min_n; },
          [fam](const Params& p) { return FamilySpec{fam, {p[0]}}; }};
}

const Pattern& regular() {
  static const Pattern p{"regular", {"n", "r"}, "r >= 2, r < n, nr even",
                         [](const Params& q) { return q[1] >= 2 && q[1] < q[0] && (q[0] * q[1]) % 2 == 0; },
                         [](const Params& q) { return FamilySpec{Family::Regular, {q[0], q[1]}}; }};
  return p;
}

Pattern kmn(std::string range, std::function<bool(long, long)> ok) {
  return {"kmn", {"m", "n"}, std::move(range),
          [ok = std::move(ok)](const Params& q) { return ok(q[0], q[1]); },
          [](const Params& q) { return FamilySpec{Family::CompleteBipartite, {q[0], q[1]}}; }};
}

const Pattern& kmn_main() {
  static const Pattern p = kmn("1 <= m <= n, n >= 2", [](long m, long n) { return 1 <= m && m <= n && n >= 2; });
  return p;
}

const Pattern& kmn_greater() {
  static const Pattern p = kmn("m > n >= 2", [](long m, long n) { return m > n && n >= 2; });
  return p;
}

const Pattern& kmn_dom() {
  static const Pattern p = kmn("2 <= m <= n", [](long m, long n) { return 2 <= m && m <= n; });
  return p;
}

const Pattern& knn() {
  static const Pattern p{"knn", {"n"}, "n >= 2", [](const Params& q) { return q[0] >= 2; },
                         [](const Params& q) { return FamilySpec{Family::CompleteBipartite, {q[0], q[0]}}; }};
  return p;
}

const Pattern& k1n() {
  static const Pattern p{"k1n", {"n"}, "n >= 2", [](const Params& q) { return q[0] >= 2; },
                         [](const Params& q) { return FamilySpec{Family::CompleteBipartite, {1, q[0]}}; }};
  return p;
}

const Pattern& double_star() {
  static const Pattern p{"double_star", {"p", "q"}, "p, q >= 1",
                         [](const Params& q) { return q[0] >= 1 && q[1] >= 1; },
                         [](const Params& q) { return FamilySpec{Family::DoubleStar, {q[0], q[1]}}; }};
  return p;
}

const Pattern& windmill() {
  static const Pattern p{"windmill", {"n", "m"}, "n >= 3, m >= 3",
                         [](const Params& q) { return q[0] >= 3 && q[1] >= 3; },
                         [](const Params& q) { return FamilySpec{Family::FrenchWindmill, {q[0], q[1]}}; }};
  return p;
}

const Pattern& cycle() { static const Pattern p = one("cycle", Family::Cycle, 3); return p; }
const Pattern& complete() { static const Pattern p = one("complete", Family::Complete, 3); return p; }
const Pattern& complete_any() { static const Pattern p = one("complete", Family::Complete, 2); return p; }
const Pattern& path() { static const Pattern p = one("path", Family::Path, 3); return p; }
const Pattern& wheel() { static const Pattern p = one("wheel", Family::Wheel, 3); return p; }
const Pattern& sunflower() { static const Pattern p = one("sunflower", Family::Sunflower, 3); return p; }
const Pattern& star() { static const Pattern p = one("star", Family::Star, 2); return p; }

class Table {
 public:
  void add(const std::string& index, const Pattern& pat, std::string display, Formula f) {
    OracleEntry e;
    for (char c : index) {
      if (c != '_') e.id.push_back(c);
    }
    e.id += "/" + pat.key;
    e.index = index;
    e.pattern = pat.key;
    e.params = pat.params;
    e.display = std::move(display);
    e.stated_range = pat.stated_range;
    e.in_range = pat.in_range;
    e.graph = pat.graph;
    e.formula = std::move(f);
    entries_.push_back(std::move(e));
  }

  std::vector<OracleEntry> take() {
    std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return std::move(entries_);
  }

 private:
  std::vector<OracleEntry> entries_;
};

void plain_forms(Table& t) {
  t.add("RL1", regular(), "3nr^3/2", f2([](auto& n, auto& r) { return OracleValue(3 * n * pw(r, 3) / 2); }));
  t.add("RL2", regular(), "nr^3/2", f2([](auto& n, auto& r) { return OracleValue(n * pw(r, 3) / 2); }));
  t.add("RL3", regular(), "nr^3/2", f2([](auto& n, auto& r) { return OracleValue(n * pw(r, 3) / 2); }));
  t.add("RL4", regular(), "0", f2([](auto&, auto&) { return OracleValue(Rat(0)); }));

  t.add("RL1", cycle(), "12n", f1([](auto& n) { return OracleValue(12 * n); }));
  t.add("RL2", cycle(), "4n", f1([](auto& n) { return OracleValue(4 * n); }));
  t.add("RL3", cycle(), "4n", f1([](auto& n) { return OracleValue(4 * n); }));
  t.add("RL4", cycle(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("RL1", complete(), "3n(n-1)^3/2", f1([](auto& n) { return OracleValue(3 * n * pw(n - 1, 3) / 2); }));
  t.add("RL2", complete(), "n(n-1)^3/2", f1([](auto& n) { return OracleValue(n * pw(n - 1, 3) / 2); }));
  t.add("RL3", complete(), "n(n-1)^3/2", f1([](auto& n) { return OracleValue(n * pw(n - 1, 3) / 2); }));
  t.add("RL4", complete(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("RL1", path(), "12n-22", f1([](auto& n) { return OracleValue(12 * n - 22); }));
  t.add("RL2", path(), "4n-6", f1([](auto& n) { return OracleValue(4 * n - 6); }));
  t.add("RL3", path(), "4n-6", f1([](auto& n) { return OracleValue(4 * n - 6); }));
  t.add("RL4", path(), "4", f1([](auto&) { return OracleValue(Rat(4)); }));

  t.add("RL1", kmn_main(), "mn(m^2+n^2+mn)",
        f2([](auto& m, auto& n) { return OracleValue(m * n * (m * m + n * n + m * n)); }));
  t.add("RL2", kmn_main(), "mn(m^2+n^2-mn)",
        f2([](auto& m, auto& n) { return OracleValue(m * n * (m * m + n * n - m * n)); }));
  t.add("RL3", kmn_main(), "mn(m-n+mn)", f2([](auto& m, auto& n) { return OracleValue(m * n * (m - n + m * n)); }));
  t.add("RL4", kmn_main(), "m^2n^2|m-n|",
        f2([](auto& m, auto& n) { return OracleValue(m * m * n * n * ab(m - n)); }));

  t.add("RL1", wheel(), "n(n^2+3n+36)", f1([](auto& n) { return OracleValue(n * (n * n + 3 * n + 36)); }));
  t.add("RL2", wheel(), "n(n^2-3n+18)", f1([](auto& n) { return OracleValue(n * (n * n - 3 * n + 18)); }));
  t.add("RL3", wheel(), "2n(2n+3)", f1([](auto& n) { return OracleValue(2 * n * (2 * n + 3)); }));
  t.add("RL4", wheel(), "3n^2|n-3|", f1([](auto& n) { return OracleValue(3 * n * n * ab(n - 3)); }));

  t.add("RL1_exp", wheel(), "n(x^27+x^(n^2+3n+9))",
        f1([](auto& n) { return OracleValue(poly({{n, 27}, {n, n * n + 3 * n + 9}})); }));
  t.add("RL2_exp", wheel(), "nx^9(x^(n^2-3n)+1)",
        f1([](auto& n) { return OracleValue(poly({{n, n * n - 3 * n + 9}, {n, 9}})); }));
  t.add("RL3_exp", wheel(), "n(x^9+x^(4n-3))", f1([](auto& n) { return OracleValue(poly({{n, 9}, {n, 4 * n - 3}})); }));
  t.add("RL4_exp", wheel(), "n(x^(3n|n-3|)+1)",
        f1([](auto& n) { return OracleValue(poly({{n, 3 * n * ab(n - 3)}, {n, 0}})); }));

  t.add("RL1", sunflower(), "n(27n^2+21n+97)", f1([](auto& n) { return OracleValue(n * (27 * n * n + 21 * n + 97)); }));
  t.add("RL2", sunflower(), "n(27n^2-21n+49)", f1([](auto& n) { return OracleValue(n * (27 * n * n - 21 * n + 49)); }));
  t.add("RL3", sunflower(), "n(25n+17)", f1([](auto& n) { return OracleValue(n * (25 * n + 17)); }));
  t.add("RL4", sunflower(), "n(12n|3n-4|+6n|3n-2|+3n|3n-1|+16)", f1([](auto& n) {
          return OracleValue(n * (12 * n * ab(3 * n - 4) + 6 * n * ab(3 * n - 2) + 3 * n * ab(3 * n - 1) + 16));
        }));

  t.add("RL1_exp", sunflower(), "n(x^48+x^(9n^2+12n+16)+x^28+x^(9n^2+6n+4)+x^(9n^2+3n+1))", f1([](auto& n) {
          return OracleValue(poly({{n, 48},
                                   {n, 9 * n * n + 12 * n + 16},
                                   {n, 28},
                                   {n, 9 * n * n + 6 * n + 4},
                                   {n, 9 * n * n + 3 * n + 1}}));
        }));
  t.add("RL2_exp", sunflower(), "n(x^16+x^(9n^2-12n+16)+x^12+x^(9n^2-6n+4)+x^(9n^2-3n+1))", f1([](auto& n) {
          return OracleValue(poly({{n, 16},
                                   {n, 9 * n * n - 12 * n + 16},
                                   {n, 12},
                                   {n, 9 * n * n - 6 * n + 4},
                                   {n, 9 * n * n - 3 * n + 1}}));
        }));
  t.add("RL3_exp", sunflower(), "n(x^16+x^(15n-4)+x^6+x^(9n-2)+x)", f1([](auto& n) {
          return OracleValue(poly({{n, 16}, {n, 15 * n - 4}, {n, 6}, {n, 9 * n - 2}, {n, 1}}));
        }));
  t.add("RL4_exp", sunflower(), "n(x^16+x^(12n|3n-4|)+x^(6n|3n-2|)+x^(3n|3n-1|)+1)", f1([](auto& n) {
          return OracleValue(poly({{n, 16},
                                   {n, 12 * n * ab(3 * n - 4)},
                                   {n, 6 * n * ab(3 * n - 2)},
                                   {n, 3 * n * ab(3 * n - 1)},
                                   {n, 0}}));
        }));
}

void banhatti_forms(Table& t) {
  auto frac = [](const Rat& n, const Rat& r) { return pw((r - 1) / (n - r), 2); };
  t.add("BRL1", regular(), "6nr((r-1)/(n-r))^2",
        f2([frac](auto& n, auto& r) { return OracleValue(6 * n * r * frac(n, r)); }));
  t.add("BRL2", regular(), "2nr((r-1)/(n-r))^2",
        f2([frac](auto& n, auto& r) { return OracleValue(2 * n * r * frac(n, r)); }));
  t.add("BRL3", regular(), "2nr(r-1)^2/(n-r)^2",
        f2([](auto& n, auto& r) { return OracleValue(2 * n * r * pw(r - 1, 2) / pw(n - r, 2)); }));
  t.add("BRL4", regular(), "2nr((r-1)/(n-r))^2",
        f2([frac](auto& n, auto& r) { return OracleValue(2 * n * r * frac(n, r)); }));

  t.add("BRL1", cycle(), "12n(1/(n-2))^2", f1([](auto& n) { return OracleValue(12 * n / pw(n - 2, 2)); }));
  t.add("BRL2", cycle(), "4n(1/(n-2))^2", f1([](auto& n) { return OracleValue(4 * n / pw(n - 2, 2)); }));
  t.add("BRL3", cycle(), "4n(1/(n-2))", f1([](auto& n) { return OracleValue(4 * n / (n - 2)); }));
  t.add("BRL4", cycle(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("BRL1", complete(), "6n(n-1)(n-2)^2", f1([](auto& n) { return OracleValue(6 * n * (n - 1) * pw(n - 2, 2)); }));
  t.add("BRL2", complete(), "2n(n-1)(n-2)^2", f1([](auto& n) { return OracleValue(2 * n * (n - 1) * pw(n - 2, 2)); }));
  t.add("BRL3", complete(), "2n(n-1)(n-2)^2", f1([](auto& n) { return OracleValue(2 * n * (n - 1) * pw(n - 2, 2)); }));
  t.add("BRL4", complete(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  auto path_den = [](const Rat& n) { return pw(n - 1, 2) * pw(n - 2, 2); };
  t.add("BRL1", path(), "(2(n-1)^2+2(n-2)^2+2(n-1)(n-2)+12(n-1)^2(n-3))/((n-1)^2(n-2)^2)",
        f1([path_den](auto& n) {
          return OracleValue((2 * pw(n - 1, 2) + 2 * pw(n - 2, 2) + 2 * (n - 1) * (n - 2) + 12 * pw(n - 1, 2) * (n - 3)) /
                             path_den(n));
        }));
  t.add("BRL2", path(), "(2(n-1)^2+2(n-2)^2-2(n-1)(n-2)+4(n-1)^2(n-3))/((n-1)^2(n-2)^2)",
        f1([path_den](auto& n) {
          return OracleValue((2 * pw(n - 1, 2) + 2 * pw(n - 2, 2) - 2 * (n - 1) * (n - 2) + 4 * pw(n - 1, 2) * (n - 3)) /
                             path_den(n));
        }));
  t.add("BRL3", path(), "2|n^2-6n+10|/((n-1)(n-2)^2)",
        f1([](auto& n) { return OracleValue(2 * ab(n * n - 6 * n + 10) / ((n - 1) * pw(n - 2, 2))); }));
  t.add("BRL4", path(), "4|n|/((n-1)^2(n-2)^2)",
        f1([path_den](auto& n) { return OracleValue(4 * ab(n) / path_den(n)); }));

  t.add("BRL1", kmn_main(), "(m+n-2)^2(m^2+n^2+mn)/(mn)", f2([](auto& m, auto& n) {
          return OracleValue(pw(m + n - 2, 2) * (m * m + n * n + m * n) / (m * n));
        }));
  t.add("BRL2", kmn_main(), "(m+n-2)^2(m^2+n^2-mn)/(mn)", f2([](auto& m, auto& n) {
          return OracleValue(pw(m + n - 2, 2) * (m * m + n * n - m * n) / (m * n));
        }));
  t.add("BRL3", kmn_greater(), "2(m+n-2)(m-1), m>n",
        f2([](auto& m, auto& n) { return OracleValue(2 * (m + n - 2) * (m - 1)); }));
  t.add("BRL4", kmn_greater(), "(m+n-2)^4|m-n|/(mn), m>n",
        f2([](auto& m, auto& n) { return OracleValue(pw(m + n - 2, 4) * ab(m - n) / (m * n)); }));

  t.add("BRL1", knn(), "12(n-1)^2", f1([](auto& n) { return OracleValue(12 * pw(n - 1, 2)); }));
  t.add("BRL2", knn(), "(n-1)^2", f1([](auto& n) { return OracleValue(pw(n - 1, 2)); }));
  t.add("BRL3", knn(), "4(n-1)^2", f1([](auto& n) { return OracleValue(4 * pw(n - 1, 2)); }));
  t.add("BRL4", knn(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("BRL1", k1n(), "(n-1)^2(n^2+n+1)/n", f1([](auto& n) { return OracleValue(pw(n - 1, 2) * (n * n + n + 1) / n); }));
  t.add("BRL2", k1n(), "(n-1)^2(n^2+1-n)/n", f1([](auto& n) { return OracleValue(pw(n - 1, 2) * (n * n + 1 - n) / n); }));
  t.add("BRL3", k1n(), "2(n-1)^2", f1([](auto& n) { return OracleValue(2 * pw(n - 1, 2)); }));
  t.add("BRL4", k1n(), "(n-1)^3|1-n|/n", f1([](auto& n) { return OracleValue(pw(n - 1, 3) * ab(1 - n) / n); }));

  t.add("BRL1", wheel(), "n/(n-2)^2((n+1)^2(n^2-3n+3)+48)", f1([](auto& n) {
          return OracleValue(n / pw(n - 2, 2) * (pw(n + 1, 2) * (n * n - 3 * n + 3) + 48));
        }));
  t.add("BRL2", wheel(), "n/(n-2)^2((n+1)^2(n^2-5n+7)+16)", f1([](auto& n) {
          return OracleValue(n / pw(n - 2, 2) * (pw(n + 1, 2) * (n * n - 5 * n + 7) + 16));
        }));
  t.add("BRL3", wheel(), "n/(n-2)^2[(n+1)(n-2)-(n+1)(n-2)^2+(n+1)^2+16]", f1([](auto& n) {
          return OracleValue(n / pw(n - 2, 2) * ((n + 1) * (n - 2) - (n + 1) * pw(n - 2, 2) + pw(n + 1, 2) + 16));
        }));
  t.add("BRL4", wheel(), "n|n-1|(n+1)^3/(n-2)",
        f1([](auto& n) { return OracleValue(n * ab(n - 1) * pw(n + 1, 3) / (n - 2)); }));

  t.add("BRL1_exp", wheel(), "nx^(48/(n-2)^2)+nx^((n+1)^2(n^2-3n+3)/(n-2)^2)", f1([](auto& n) {
          return OracleValue(
              poly({{n, 48 / pw(n - 2, 2)}, {n, pw(n + 1, 2) * (n * n - 3 * n + 3) / pw(n - 2, 2)}}));
        }));
  t.add("BRL2_exp", wheel(), "nx^(16/(n-2)^2)+nx^((n+1)^2(n^2-5n+7)/(n-2)^2)", f1([](auto& n) {
          return OracleValue(
              poly({{n, 16 / pw(n - 2, 2)}, {n, pw(n + 1, 2) * (n * n - 5 * n + 7) / pw(n - 2, 2)}}));
        }));
  t.add("BRL3_exp", wheel(), "nx^(16/(n-2)^2)+nx^(4(n+1)/(n-2))", f1([](auto& n) {
          return OracleValue(poly({{n, 16 / pw(n - 2, 2)}, {n, 4 * (n + 1) / (n - 2)}}));
        }));
  t.add("BRL4_exp", wheel(), "n+nx^((n+1)^3|n-3|/(n-2)^2)", f1([](auto& n) {
          return OracleValue(poly({{n, 0}, {n, pw(n + 1, 3) * ab(n - 3) / pw(n - 2, 2)}}));
        }));

  t.add("BRL1", sunflower(),
        "12n/(n-1)^2+n(3n+2)^2(((3n-3)^2+(3n+2)(3n-3)+1)/(3n-3)^2)+16n(1/(3n-1)^2+1/(3n-3)^2+1/((3n-1)(3n-3)))"
        "+3n^3(1+1/(3n-1)^2+1/(3n-1))+n(3n-1)^2(1/(9n^2)+1+1/(3n))",
        f1([](auto& n) {
          const Rat a = 3 * n - 3, b = 3 * n - 1, c = 3 * n + 2;
          return OracleValue(12 * n / pw(n - 1, 2) + n * c * c * ((a * a + c * a + 1) / (a * a)) +
                             16 * n * (1 / (b * b) + 1 / (a * a) + 1 / (b * a)) + 3 * pw(n, 3) * (1 + 1 / (b * b) + 1 / b) +
                             n * b * b * (1 / (9 * n * n) + 1 + 1 / (3 * n)));
        }));
  t.add("BRL2", sunflower(),
        "4n/(n-1)^2+n(3n+2)^2(((3n-3)^2-(3n+2)(3n-3)+1)/(3n-3)^2)+16n(1/(3n-1)^2+1/(3n-3)^2-1/((3n-1)(3n-3)))"
        "+3n^3(1+1/(3n-1)^2-1/(3n-1))+n(3n-1)^2(1/(9n^2)+1-1/(3n))",
        f1([](auto& n) {
          const Rat a = 3 * n - 3, b = 3 * n - 1, c = 3 * n + 2;
          return OracleValue(4 * n / pw(n - 1, 2) + n * c * c * ((a * a - c * a + 1) / (a * a)) +
                             16 * n * (1 / (b * b) + 1 / (a * a) - 1 / (b * a)) + 3 * pw(n, 3) * (1 + 1 / (b * b) - 1 / b) +
                             n * b * b * (1 / (9 * n * n) + 1 - 1 / (3 * n)));
        }));
  t.add("BRL3", sunflower(), "4n/(n-1)^2+3n^2(3n+2)/(3n-3)+8n/((3n-1)(3n-3))+18n^2/(3n-1)", f1([](auto& n) {
          const Rat a = 3 * n - 3, b = 3 * n - 1;
          return OracleValue(4 * n / pw(n - 1, 2) + 3 * n * n * (3 * n + 2) / a + 8 * n / (b * a) + 18 * n * n / b);
        }));
  t.add("BRL4", sunflower(),
        "4n(3n+2)^2|3n-4|/(3n-3)^2+128n/((3n-1)^2(3n-3)^2)+27n^4|3n-2|/(3n-1)^2+n(3n-1)^3|1-3n|/(9n^2)",
        f1([](auto& n) {
          const Rat a = 3 * n - 3, b = 3 * n - 1;
          return OracleValue(4 * n * pw(3 * n + 2, 2) * ab(3 * n - 4) / (a * a) + 128 * n / (b * b * a * a) +
                             27 * pw(n, 4) * ab(3 * n - 2) / (b * b) + n * pw(b, 3) * ab(1 - 3 * n) / (9 * n * n));
        }));
}

void revan_forms(Table& t) {
  t.add("RRL1", regular(), "3nr^3/2", f2([](auto& n, auto& r) { return OracleValue(3 * n * pw(r, 3) / 2); }));
  t.add("RRL2", regular(), "nr^3/2", f2([](auto& n, auto& r) { return OracleValue(n * pw(r, 3) / 2); }));
  t.add("RRL3", regular(), "nr^3/2", f2([](auto& n, auto& r) { return OracleValue(n * pw(r, 3) / 2); }));
  t.add("RRL4", regular(), "0", f2([](auto&, auto&) { return OracleValue(Rat(0)); }));

  t.add("RRL1", cycle(), "12n", f1([](auto& n) { return OracleValue(12 * n); }));
  t.add("RRL2", cycle(), "4n", f1([](auto& n) { return OracleValue(4 * n); }));
  t.add("RRL3", cycle(), "4n", f1([](auto& n) { return OracleValue(4 * n); }));
  t.add("RRL4", cycle(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("RRL1", complete(), "3n(n-1)^3/2", f1([](auto& n) { return OracleValue(3 * n * pw(n - 1, 3) / 2); }));
  t.add("RRL2", complete(), "n(n-1)^3/2", f1([](auto& n) { return OracleValue(n * pw(n - 1, 3) / 2); }));
  t.add("RRL3", complete(), "n(n-1)^3/2", f1([](auto& n) { return OracleValue(n * pw(n - 1, 3) / 2); }));
  t.add("RRL4", complete(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("RRL1", path(), "3n+5", f1([](auto& n) { return OracleValue(3 * n + 5); }));
  t.add("RRL2", path(), "n+3", f1([](auto& n) { return OracleValue(n + 3); }));
  t.add("RRL3", path(), "n+3", f1([](auto& n) { return OracleValue(n + 3); }));
  t.add("RRL4", path(), "4", f1([](auto&) { return OracleValue(Rat(4)); }));

  t.add("RRL1", kmn_main(), "mn(m^2+n^2+mn)",
        f2([](auto& m, auto& n) { return OracleValue(m * n * (m * m + n * n + m * n)); }));
  t.add("RRL2", kmn_main(), "mn(m^2+n^2-mn)",
        f2([](auto& m, auto& n) { return OracleValue(m * n * (m * m + n * n - m * n)); }));
  t.add("RRL3", kmn_main(), "mn(n-m+mn)", f2([](auto& m, auto& n) { return OracleValue(m * n * (n - m + m * n)); }));
  t.add("RRL4", kmn_main(), "m^2n^2|n-m|",
        f2([](auto& m, auto& n) { return OracleValue(m * m * n * n * ab(n - m)); }));

  t.add("RRL1", wheel(), "n(4n^2+3n+9)", f1([](auto& n) { return OracleValue(n * (4 * n * n + 3 * n + 9)); }));
  t.add("RRL2", wheel(), "n(2n^2-3n+9)", f1([](auto& n) { return OracleValue(n * (2 * n * n - 3 * n + 9)); }));
  t.add("RRL3", wheel(), "n(n^2+4n-3)", f1([](auto& n) { return OracleValue(n * (n * n + 4 * n - 3)); }));
  t.add("RRL4", wheel(), "3n^2|n-3|", f1([](auto& n) { return OracleValue(3 * n * n * ab(n - 3)); }));

  t.add("RRL1", sunflower(), "n(54n^2-42n+31)", f1([](auto& n) { return OracleValue(n * (54 * n * n - 42 * n + 31)); }));
  t.add("RRL2", sunflower(), "n(45n^2-36n+27)", f1([](auto& n) { return OracleValue(n * (45 * n * n - 36 * n + 27)); }));
  t.add("RRL3", sunflower(), "n(18n^2+3n+9)", f1([](auto& n) { return OracleValue(n * (18 * n * n + 3 * n + 9)); }));
  t.add("RRL4", sunflower(), "2n(3n-2)|4-3n|+6n^2(3n-2)+6n^2|2-3n|+2n(3n+1)|3n-1|", f1([](auto& n) {
          return OracleValue(2 * n * (3 * n - 2) * ab(4 - 3 * n) + 6 * n * n * (3 * n - 2) + 6 * n * n * ab(2 - 3 * n) +
                             2 * n * (3 * n + 1) * ab(3 * n - 1));
        }));
}

void domination_forms(Table& t) {
  auto edges = [](const Rat& n) { return n * (n - 1) / 2; };
  t.add("DRL1", complete_any(), "3n(n-1)/2", f1([](auto& n) { return OracleValue(3 * n * (n - 1) / 2); }));
  t.add("DRL2", complete_any(), "n(n-1)/2", f1([](auto& n) { return OracleValue(n * (n - 1) / 2); }));
  t.add("DRL3", complete_any(), "n(n-1)/2", f1([](auto& n) { return OracleValue(n * (n - 1) / 2); }));
  t.add("DRL4", complete_any(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("DRL1", star(), "3n", f1([](auto& n) { return OracleValue(3 * n); }));
  t.add("DRL2", star(), "n", f1([](auto& n) { return OracleValue(n); }));
  t.add("DRL3", star(), "n", f1([](auto& n) { return OracleValue(n); }));
  t.add("DRL4", star(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("DRL1", double_star(), "12(p+q+1)", f2([](auto& p, auto& q) { return OracleValue(12 * (p + q + 1)); }));
  t.add("DRL2", double_star(), "4(p+q+1)", f2([](auto& p, auto& q) { return OracleValue(4 * (p + q + 1)); }));
  t.add("DRL3", double_star(), "4(p+q+1)", f2([](auto& p, auto& q) { return OracleValue(4 * (p + q + 1)); }));
  t.add("DRL4", double_star(), "0", f2([](auto&, auto&) { return OracleValue(Rat(0)); }));

  t.add("DRL1", kmn_dom(), "mn(m^2+n^2+mn+3m+3n+3)", f2([](auto& m, auto& n) {
          return OracleValue(m * n * (m * m + n * n + m * n + 3 * m + 3 * n + 3));
        }));
  t.add("DRL2", kmn_dom(), "mn(m^2+n^2-mn+m+n+1)", f2([](auto& m, auto& n) {
          return OracleValue(m * n * (m * m + n * n - m * n + m + n + 1));
        }));
  t.add("DRL3", kmn_dom(), "mn(mn+2n+1)", f2([](auto& m, auto& n) { return OracleValue(m * n * (m * n + 2 * n + 1)); }));
  t.add("DRL4", kmn_dom(), "mn|n-m|(m+1)(n+1)",
        f2([](auto& m, auto& n) { return OracleValue(m * n * ab(n - m) * (m + 1) * (n + 1)); }));

  t.add("DRL1_exp", complete_any(), "n(n-1)/2 x^3", f1([edges](auto& n) { return OracleValue(poly({{edges(n), 3}})); }));
  t.add("DRL2_exp", complete_any(), "n(n-1)/2 x", f1([edges](auto& n) { return OracleValue(poly({{edges(n), 1}})); }));
  t.add("DRL3_exp", complete_any(), "n(n-1)/2 x", f1([edges](auto& n) { return OracleValue(poly({{edges(n), 1}})); }));
  t.add("DRL4_exp", complete_any(), "n(n-1)/2", f1([edges](auto& n) { return OracleValue(poly({{edges(n), 0}})); }));
  t.add("DRL1_exp", star(), "nx^3", f1([](auto& n) { return OracleValue(poly({{n, 3}})); }));
  t.add("DRL2_exp", star(), "nx", f1([](auto& n) { return OracleValue(poly({{n, 1}})); }));
  t.add("DRL3_exp", star(), "nx", f1([](auto& n) { return OracleValue(poly({{n, 1}})); }));
  t.add("DRL4_exp", star(), "n", f1([](auto& n) { return OracleValue(poly({{n, 0}})); }));
  t.add("DRL1_exp", double_star(), "(p+q+1)x^12",
        f2([](auto& p, auto& q) { return OracleValue(poly({{p + q + 1, 12}})); }));
  t.add("DRL2_exp", double_star(), "(p+q+1)x^4", f2([](auto& p, auto& q) { return OracleValue(poly({{p + q + 1, 4}})); }));
  t.add("DRL1_exp", kmn_dom(), "mnx^(m^2+n^2+mn+3m+3n+3)", f2([](auto& m, auto& n) {
          return OracleValue(poly({{m * n, m * m + n * n + m * n + 3 * m + 3 * n + 3}}));
        }));
  t.add("DRL2_exp", kmn_dom(), "mnx^(m^2+n^2-mn+m+n+1)", f2([](auto& m, auto& n) {
          return OracleValue(poly({{m * n, m * m + n * n - m * n + m + n + 1}}));
        }));

  t.add("DRL1", windmill(), "m(n-1)[(n-1)^(2(m-1))+(n-1)^(m-1)+1]+3[mn(n-1)(n-2)/2][(n-1)^(2(m-1))]",
        f2([](auto& n, auto& m) {
          const Rat big = pw(n - 1, 2 * (m - 1)), mid = pw(n - 1, m - 1);
          return OracleValue(m * (n - 1) * (big + mid + 1) + 3 * (m * n * (n - 1) * (n - 2) / 2) * big);
        }));
  t.add("DRL2", windmill(), "m(n-1)[(n-1)^(2(m-1))-(n-1)^(m-1)+1]+[mn(n-1)(n-2)/2][(n-1)^(2(m-1))]",
        f2([](auto& n, auto& m) {
          const Rat big = pw(n - 1, 2 * (m - 1)), mid = pw(n - 1, m - 1);
          return OracleValue(m * (n - 1) * (big - mid + 1) + (m * n * (n - 1) * (n - 2) / 2) * big);
        }));
}

void temperature_forms(Table& t) {
  t.add("TRL1", regular(), "3nr^3/(2(n-r)^2)",
        f2([](auto& n, auto& r) { return OracleValue(3 * n * pw(r, 3) / (2 * pw(n - r, 2))); }));
  t.add("TRL2", regular(), "nr^3/(2(n-r)^2)",
        f2([](auto& n, auto& r) { return OracleValue(n * pw(r, 3) / (2 * pw(n - r, 2))); }));
  t.add("TRL3", regular(), "3nr^3/(2(n-r)^2)",
        f2([](auto& n, auto& r) { return OracleValue(3 * n * pw(r, 3) / (2 * pw(n - r, 2))); }));
  t.add("TRL4", regular(), "0", f2([](auto&, auto&) { return OracleValue(Rat(0)); }));

  t.add("TRL1", cycle(), "12n/(n-2)^2", f1([](auto& n) { return OracleValue(12 * n / pw(n - 2, 2)); }));
  t.add("TRL2", cycle(), "4n/(n-2)^2", f1([](auto& n) { return OracleValue(4 * n / pw(n - 2, 2)); }));
  t.add("TRL3", cycle(), "4n/(n-2)^2", f1([](auto& n) { return OracleValue(4 * n / pw(n - 2, 2)); }));
  t.add("TRL4", cycle(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("TRL1", complete(), "3n(n-1)^3/2", f1([](auto& n) { return OracleValue(3 * n * pw(n - 1, 3) / 2); }));
  t.add("TRL2", complete(), "n(n-1)^3/2", f1([](auto& n) { return OracleValue(n * pw(n - 1, 3) / 2); }));
  t.add("TRL3", complete(), "n(n-1)^3/2", f1([](auto& n) { return OracleValue(n * pw(n - 1, 3) / 2); }));
  t.add("TRL4", complete(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  auto first = [](const Rat& n) {
    return 2 * (4 * pw(n - 1, 2) + pw(n - 2, 2) + 2 * (n - 1) * (n - 2) + 6 * (n - 3) * pw(n - 1, 2)) /
           (pw(n - 1, 2) * pw(n - 2, 2));
  };
  auto second = [](const Rat& n) {
    return 2 * (2 * pw(n - 1, 2) + pw(n - 2, 2) - 2 * (n - 1) * (n - 2)) / (pw(n - 1, 2) * pw(n - 2, 2));
  };
  const std::string first_display = "2[4(n-1)^2+(n-2)^2+2(n-1)(n-2)+6(n-3)(n-1)^2]/((n-1)^2(n-2)^2)";
  const std::string second_display = "2[2(n-1)^2+(n-2)^2-2(n-1)(n-2)]/((n-1)^2(n-2)^2)";
  t.add("TRL1", path(), first_display, f1([first](auto& n) { return OracleValue(first(n)); }));
  t.add("TRL2", path(), second_display, f1([second](auto& n) { return OracleValue(second(n)); }));
  t.add("TRL3", path(), first_display, f1([first](auto& n) { return OracleValue(first(n)); }));
  t.add("TRL4", path(), second_display, f1([second](auto& n) { return OracleValue(second(n)); }));

  t.add("TRL1", kmn_main(), "mn(m^2+n^2+mn)",
        f2([](auto& m, auto& n) { return OracleValue(m * n * (m * m + n * n + m * n)); }));
  t.add("TRL2", kmn_main(), "mn(m^2+n^2-mn)",
        f2([](auto& m, auto& n) { return OracleValue(m * n * (m * m + n * n - m * n)); }));

  t.add("TRL1", wheel(), "n[36/(n-2)^2+(n+1)n^2/(n-2)]",
        f1([](auto& n) { return OracleValue(n * (36 / pw(n - 2, 2) + (n + 1) * n * n / (n - 2))); }));
  t.add("TRL2", wheel(), "n[18/(n-2)^2-(n-5)n^2/(n-2)]",
        f1([](auto& n) { return OracleValue(n * (18 / pw(n - 2, 2) - (n - 5) * n * n / (n - 2))); }));

  auto plus = [](const Rat& n) {
    const Rat a = n - 1, b = 3 * n - 1;
    return n * (5 / (a * a) + 27 * n * n + 8 / (b * b) + 1 / (9 * n * n) + 6 * n / b + 3 * n / a + 2 / (b * a) + 1);
  };
  auto minus = [](const Rat& n) {
    const Rat a = n - 1, b = 3 * n - 1;
    return n * (3 / (a * a) + 27 * n * n + 8 / (b * b) + 1 / (9 * n * n) - 6 * n / b - 3 * n / a - 2 / (b * a) - 1);
  };
  const std::string plus_display =
      "n[5/(n-1)^2+27n^2+8/(3n-1)^2+1/(9n^2)+6n/(3n-1)+3n/(n-1)+2/((3n-1)(n-1))+1]";
  const std::string minus_display =
      "n[3/(n-1)^2+27n^2+8/(3n-1)^2+1/(9n^2)-6n/(3n-1)-3n/(n-1)-2/((3n-1)(n-1))-1]";
  t.add("TRL1", sunflower(), plus_display, f1([plus](auto& n) { return OracleValue(plus(n)); }));
  t.add("TRL2", sunflower(), minus_display, f1([minus](auto& n) { return OracleValue(minus(n)); }));
  t.add("TRL3", sunflower(), plus_display, f1([plus](auto& n) { return OracleValue(plus(n)); }));
  t.add("TRL4", sunflower(), minus_display, f1([minus](auto& n) { return OracleValue(minus(n)); }));
}

void kv_forms(Table& t) {
  t.add("RLKV1", regular(), "3nr^(3r)/2", f2([](auto& n, auto& r) { return OracleValue(3 * n * pw(r, 3 * r) / 2); }));
  t.add("RLKV2", regular(), "nr^(3r)/2", f2([](auto& n, auto& r) { return OracleValue(n * pw(r, 3 * r) / 2); }));
  t.add("RLKV3", regular(), "3nr^(2r+1)/2",
        f2([](auto& n, auto& r) { return OracleValue(3 * n * pw(r, 2 * r + 1) / 2); }));
  t.add("RLKV4", regular(), "0", f2([](auto&, auto&) { return OracleValue(Rat(0)); }));

  t.add("RLKV1", cycle(), "96n", f1([](auto& n) { return OracleValue(96 * n); }));
  t.add("RLKV2", cycle(), "16n", f1([](auto& n) { return OracleValue(16 * n); }));
  t.add("RLKV3", cycle(), "16n", f1([](auto& n) { return OracleValue(16 * n); }));
  t.add("RLKV4", cycle(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("RLKV1", complete(), "3n(n-1)^(n-1)/2", f1([](auto& n) { return OracleValue(3 * n * pw(n - 1, n - 1) / 2); }));
  t.add("RLKV2", complete(), "n(n-1)^(n-1)/2", f1([](auto& n) { return OracleValue(n * pw(n - 1, n - 1) / 2); }));
  t.add("RLKV3", complete(), "n(n-1)^(2(n-1)+1)/2",
        f1([](auto& n) { return OracleValue(n * pw(n - 1, 2 * (n - 1) + 1) / 2); }));
  t.add("RLKV4", complete(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("RLKV1", path(), "24(2n-5)", f1([](auto& n) { return OracleValue(24 * (2 * n - 5)); }));
  t.add("RLKV2", path(), "8(2n-5)", f1([](auto& n) { return OracleValue(8 * (2 * n - 5)); }));
  t.add("RLKV3", path(), "16n-40", f1([](auto& n) { return OracleValue(16 * n - 40); }));
  t.add("RLKV4", path(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("RLKV1", kmn_main(), "mn(m^(2n)+n^(2m)+m^n n^m)", f2([](auto& m, auto& n) {
          return OracleValue(m * n * (pw(m, 2 * n) + pw(n, 2 * m) + pw(m, n) * pw(n, m)));
        }));
  t.add("RLKV2", kmn_main(), "mn(m^(2n)+n^(2m)-m^n n^m)", f2([](auto& m, auto& n) {
          return OracleValue(m * n * (pw(m, 2 * n) + pw(n, 2 * m) - pw(m, n) * pw(n, m)));
        }));
  t.add("RLKV3", kmn_main(), "mn(m^n-n^m+m^n n^m)", f2([](auto& m, auto& n) {
          return OracleValue(m * n * (pw(m, n) - pw(n, m) + pw(m, n) * pw(n, m)));
        }));
  t.add("RLKV4", kmn_main(), "|m^n-n^m|m^(n+1)n^(m+1)", f2([](auto& m, auto& n) {
          return OracleValue(ab(pw(m, n) - pw(n, m)) * pw(m, n + 1) * pw(n, m + 1));
        }));

  t.add("RLKV1", wheel(), "n(324n^2+3^n(3^n+9n))",
        f1([](auto& n) { return OracleValue(n * (324 * n * n + pw(3, n) * (pw(3, n) + 9 * n))); }));
  t.add("RLKV2", wheel(), "n(162n^2+3^n(3^n-9n))",
        f1([](auto& n) { return OracleValue(n * (162 * n * n + pw(3, n) * (pw(3, n) - 9 * n))); }));
  t.add("RLKV3", wheel(), "n(81n^2+(9n+1)3^n-9n)",
        f1([](auto& n) { return OracleValue(n * (81 * n * n + (9 * n + 1) * pw(3, n) - 9 * n)); }));
  t.add("RLKV4", wheel(), "n(|3^n-9n| 3^n 9n)",
        f1([](auto& n) { return OracleValue(n * (ab(pw(3, n) - 9 * n) * pw(3, n) * 9 * n)); }));

  t.add("RLKV1", sunflower(), "n[47520n^2+3*2^(6n)+111n*2^(3n)]",
        f1([](auto& n) { return OracleValue(n * (47520 * n * n + 3 * pw(2, 6 * n) + 111 * n * pw(2, 3 * n))); }));
  t.add("RLKV2", sunflower(), "n[26793n^2+3*2^(6n)-111n*2^(3n)]",
        f1([](auto& n) { return OracleValue(n * (26793 * n * n + 3 * pw(2, 6 * n) - 111 * n * pw(2, 3 * n))); }));
}

void nbd_forms(Table& t) {
  t.add("NRL1", regular(), "3nr^3(n-1)^2/2",
        f2([](auto& n, auto& r) { return OracleValue(3 * n * pw(r, 3) * pw(n - 1, 2) / 2); }));
  t.add("NRL2", regular(), "nr^3(n-1)^2/2",
        f2([](auto& n, auto& r) { return OracleValue(n * pw(r, 3) * pw(n - 1, 2) / 2); }));
  t.add("NRL3", regular(), "nr^3(n-1)^2/2",
        f2([](auto& n, auto& r) { return OracleValue(n * pw(r, 3) * pw(n - 1, 2) / 2); }));
  t.add("NRL4", regular(), "0", f2([](auto&, auto&) { return OracleValue(Rat(0)); }));

  t.add("NRL1", cycle(), "12n(n-1)^2", f1([](auto& n) { return OracleValue(12 * n * pw(n - 1, 2)); }));
  t.add("NRL2", cycle(), "4n(n-1)^2", f1([](auto& n) { return OracleValue(4 * n * pw(n - 1, 2)); }));
  t.add("NRL3", cycle(), "4n(n-1)^2", f1([](auto& n) { return OracleValue(4 * n * pw(n - 1, 2)); }));
  t.add("NRL4", cycle(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("NRL1", complete(), "3n(n-1)^5/2", f1([](auto& n) { return OracleValue(3 * n * pw(n - 1, 5) / 2); }));
  t.add("NRL2", complete(), "n(n-1)^5/2", f1([](auto& n) { return OracleValue(n * pw(n - 1, 5) / 2); }));
  t.add("NRL3", complete(), "4n(n-1)^5/2", f1([](auto& n) { return OracleValue(4 * n * pw(n - 1, 5) / 2); }));
  t.add("NRL4", complete(), "0", f1([](auto&) { return OracleValue(Rat(0)); }));

  t.add("NRL1", path(), "48n-106", f1([](auto& n) { return OracleValue(48 * n - 106); }));
  t.add("NRL2", path(), "16n-34", f1([](auto& n) { return OracleValue(16 * n - 34); }));
  t.add("NRL3", path(), "48n-106", f1([](auto& n) { return OracleValue(48 * n - 106); }));
  t.add("NRL4", path(), "16n-34", f1([](auto& n) { return OracleValue(16 * n - 34); }));

  t.add("NRL1", kmn_main(), "3(mn)^3", f2([](auto& m, auto& n) { return OracleValue(3 * pw(m * n, 3)); }));
  t.add("NRL2", kmn_main(), "(mn)^3", f2([](auto& m, auto& n) { return OracleValue(pw(m * n, 3)); }));
  t.add("NRL3", kmn_main(), "m^2n^2", f2([](auto& m, auto& n) { return OracleValue(m * m * n * n); }));
  t.add("NRL4", kmn_main(), "0", f2([](auto&, auto&) { return OracleValue(Rat(0)); }));

  t.add("NRL1", wheel(), "n(16n^2+66n+144)", f1([](auto& n) { return OracleValue(n * (16 * n * n + 66 * n + 144)); }));
  t.add("NRL2", wheel(), "n(8n^2+6n+72)", f1([](auto& n) { return OracleValue(n * (8 * n * n + 6 * n + 72)); }));
  t.add("NRL3", wheel(), "n(4n^2+28n+42)", f1([](auto& n) { return OracleValue(n * (4 * n * n + 28 * n + 42)); }));
  t.add("NRL4", wheel(), "6n^2|3-n|(n+6)", f1([](auto& n) { return OracleValue(6 * n * n * ab(3 - n) * (n + 6)); }));

  t.add("NRL1", sunflower(), "n(328n^2+406n+504)",
        f1([](auto& n) { return OracleValue(n * (328 * n * n + 406 * n + 504)); }));
  t.add("NRL2", sunflower(), "2n(4n^2+3n+36)", f1([](auto& n) { return OracleValue(2 * n * (4 * n * n + 3 * n + 36)); }));
}

long principal_index(const OracleEntry& e) {
  if (e.pattern == "kmn") return -1;  // max(m, n)
  return 0;
}

}  // namespace

std::string render(const OracleValue& v) {
  if (const auto* r = std::get_if<Rat>(&v)) return r->to_string();
  return std::get<ExpPoly>(v).render();
}

const std::vector<OracleEntry>& oracles() {
  static const std::vector<OracleEntry> all = [] {
    Table t;
    plain_forms(t);
    banhatti_forms(t);
    revan_forms(t);
    domination_forms(t);
    temperature_forms(t);
    kv_forms(t);
    nbd_forms(t);
    return t.take();
  }();
  return all;
}

const OracleEntry& find_oracle(std::string_view id) {
  for (const auto& e : oracles()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorCode::UnknownOracle, "unknown oracle '" + std::string(id) + "'");
}

OracleValue oracle_eval(const OracleEntry& e, const Params& p) {
  if (p.size() != e.params.size() || !e.in_range(p)) {
    throw Error(ErrorCode::ParamsOutOfStatedRange,
                e.id + " at " + format_params(e, p) + " is outside the stated range " + e.stated_range);
  }
  return e.formula(p);
}

OracleValue oracle_eval(std::string_view id, const Params& p) { return oracle_eval(find_oracle(id), p); }

std::string format_params(const OracleEntry& e, const Params& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ';';
    out += i < e.params.size() ? std::string(e.params[i]) : "p" + std::to_string(i);
    out += '=' + std::to_string(p[i]);
  }
  return out;
}

std::vector<Params> parameter_points(const OracleEntry& e, long lo, long hi, std::size_t max_vertices) {
  const bool domination = e.index.starts_with("DRL");
  std::vector<Params> out;
  auto consider = [&](Params p) {
    if (!e.in_range(p)) return;
    Graph g;
    try {
      g = generate(e.graph(p));
    } catch (const Error&) {
      return;
    }
    if (domination && g.vertex_count() > max_vertices) return;
    out.push_back(std::move(p));
  };
  for (long k = lo; k <= hi; ++k) {
    if (e.params.size() == 1) {
      consider({k});
    } else if (principal_index(e) < 0) {
      for (long other = 1; other < k; ++other) {
        consider({other, k});
        consider({k, other});
      }
      consider({k, k});
    } else if (e.pattern == "windmill") {
      for (long m = 3; m * (k - 1) + 1 <= static_cast<long>(max_vertices); ++m) consider({k, m});
    } else {
      for (long other = 1; other <= k; ++other) consider({k, other});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace topoidx
