// Command-line frontend: exact Dedekind sums, Carlitz polynomials, and
// integer-point transforms of simplicial rational cones, with identity
// verification and grid sweeps.
//
// Exit codes: 0 success / identity holds; 1 identity or expectation violated;
// 2 usage or input error; 3 internal error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/brion.hpp"
#include "carlitz/cones.hpp"
#include "carlitz/exact.hpp"
#include "carlitz/identities.hpp"
#include "carlitz/json_io.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/ratfun.hpp"
#include "carlitz/sums.hpp"

namespace {

using namespace carlitz;

struct Output {
  std::string format = "text";
  long degree = 10;
};

void add_output_flags(CLI::App* sub, Output* out) {
  sub->add_option("--format", out->format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--degree", out->degree, "series truncation degree (default 10)")
      ->check(CLI::NonNegativeNumber);
}

BigInt arg_int(const std::string& s, const char* what) {
  try {
    return parse_bigint(s);
  } catch (const std::exception&) {
    throw std::domain_error(std::string(what) + ": '" + s + "' is not an integer");
  }
}

std::vector<BigInt> arg_int_list(const std::string& csv, const char* what) {
  std::vector<BigInt> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    out.push_back(arg_int(csv.substr(pos, comma - pos), what));
    pos = comma + 1;
  }
  return out;
}

ExpVec arg_exp_vec(const std::string& csv, const char* what) {
  ExpVec out;
  for (const BigInt& v : arg_int_list(csv, what)) out.push_back(to_exp(v));
  return out;
}

void emit(const std::string& text_form, const Json& json_form, const Output& out) {
  if (out.format == "json")
    std::cout << json_form.dump() << "\n";
  else
    std::cout << text_form << "\n";
}

int emit_value(const std::string& value,
               const std::vector<std::pair<std::string, std::string>>& params,
               const std::string& expect, const Output& out) {
  Json j;
  Json p = Json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = std::move(p);
  j["value"] = value;
  emit(value, j, out);
  if (!expect.empty() && expect != value) {
    std::cerr << "expected " << expect << ", got " << value << "\n";
    return 1;
  }
  return 0;
}

void emit_poly(const LaurentPoly& p, const Output& out) {
  emit(p.to_string(), poly_to_json(p), out);
}

void emit_ratfun(const ShortRatFun& f, bool expand, const Output& out) {
  if (expand) {
    ExpVec grading(f.dim(), 1);
    emit_poly(expand_truncated(f, grading, out.degree), out);
  } else {
    emit(f.to_string(), ratfun_to_json(f), out);
  }
}

std::string params_line(const IdentityReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += ", ";
    s += k + "=" + v;
  }
  return s;
}

std::string report_line(const IdentityReport& r) {
  std::string line = r.identity + "(" + params_line(r) + "): ";
  if (r.holds) return line + "holds";
  line += "VIOLATED";
  if (r.diff_poly) line += "\n  diff = " + r.diff_poly->to_string();
  if (r.diff_rat) line += "\n  diff = " + to_string(*r.diff_rat);
  return line;
}

int emit_report(const IdentityReport& r, const Output& out) {
  emit(report_line(r), report_to_json(r), out);
  return r.holds ? 0 : 1;
}

IdentityReport report_from_sides(std::string name,
                                 std::vector<std::pair<std::string, std::string>> params,
                                 std::pair<LaurentPoly, LaurentPoly> sides) {
  IdentityReport r;
  r.identity = std::move(name);
  r.params = std::move(params);
  r.lhs_poly = sides.first;
  r.rhs_poly = sides.second;
  r.diff_poly = sides.first - sides.second;
  r.holds = r.diff_poly->is_zero();
  return r;
}

// Named parameters for `verify` and one row of a `sweep` grid.
struct IdentityArgs {
  std::optional<BigInt> a, b, c, d, t;
  std::vector<BigInt> list;
};

const BigInt& need(const std::optional<BigInt>& v, const char* name,
                   const std::string& identity) {
  if (!v)
    throw std::domain_error("verify " + identity + ": missing --" + name);
  return *v;
}

IdentityReport check_named_identity(const std::string& name, const IdentityArgs& g) {
  auto str = [](const BigInt& v) { return to_string(v); };
  if (name == "carlitz") return check_carlitz(need(g.a, "a", name), need(g.b, "b", name));
  if (name == "dedekind")
    return check_dedekind(need(g.a, "a", name), need(g.b, "b", name));
  if (name == "berndt-dieter") {
    if (g.list.empty())
      throw std::domain_error("verify berndt-dieter: needs --params p1,p2,...");
    return check_berndt_dieter(g.list);
  }
  if (name == "orthant") {
    if (g.list.empty())
      throw std::domain_error("verify orthant: needs --params p1,p2,...");
    return check_quadrant_decomposition(g.list);
  }
  if (name == "quadrant")
    return check_quadrant_decomposition(need(g.a, "a", name), need(g.b, "b", name));
  if (name == "two-ray")
    return check_two_ray(need(g.a, "a", name), need(g.b, "b", name),
                         need(g.c, "c", name), need(g.d, "d", name));
  if (name == "unimodular")
    return check_unimodular_cor(need(g.a, "a", name), need(g.b, "b", name),
                                need(g.c, "c", name), need(g.d, "d", name));
  if (name == "pommersheim")
    return check_pommersheim_3term(need(g.a, "a", name), need(g.b, "b", name),
                                   need(g.c, "c", name), need(g.d, "d", name));
  if (name == "rademacher-3term")
    return check_rademacher_3term(need(g.a, "a", name), need(g.b, "b", name),
                                  need(g.c, "c", name));
  if (name == "rademacher-abcd")
    return check_rademacher_abcd(need(g.a, "a", name), need(g.b, "b", name),
                                 need(g.c, "c", name), need(g.d, "d", name));
  if (name == "triangle") {
    const BigInt& a = need(g.a, "a", name);
    const BigInt& b = need(g.b, "b", name);
    return report_from_sides("triangle_reciprocity", {{"a", str(a)}, {"b", str(b)}},
                             triangle_identity_sides(a, b));
  }
  if (name == "tetra") {
    const BigInt& a = need(g.a, "a", name);
    const BigInt& b = need(g.b, "b", name);
    const BigInt& c = need(g.c, "c", name);
    const BigInt& t = need(g.t, "t", name);
    return report_from_sides(
        "tetrahedron_reciprocity",
        {{"a", str(a)}, {"b", str(b)}, {"c", str(c)}, {"t", str(t)}},
        tetrahedron_sides(a, b, c, t));
  }
  if (name == "ehrhart") {
    const BigInt& a = need(g.a, "a", name);
    const BigInt& b = need(g.b, "b", name);
    const BigInt& c = need(g.c, "c", name);
    const BigInt& t = need(g.t, "t", name);
    IdentityReport r;
    r.identity = "ehrhart_count";
    r.params = {{"a", str(a)}, {"b", str(b)}, {"c", str(c)}, {"t", str(t)}};
    BigRat closed = ehrhart_mp(a, b, c).eval(t);
    BigRat analytic = ehrhart_via_lhospital(a, b, c, t);
    BigRat counted(count_tetrahedron(a, b, c, t));
    r.lhs_rat = closed;
    r.rhs_rat = counted;
    r.diff_rat = closed - counted;
    r.holds = (*r.diff_rat == 0) && (analytic == counted);
    return r;
  }
  throw std::domain_error(
      "unknown identity '" + name +
      "' (expected one of: carlitz, berndt-dieter, dedekind, two-ray, unimodular, "
      "pommersheim, rademacher-3term, rademacher-abcd, quadrant, orthant, triangle, "
      "tetra, ehrhart)");
}

// Deterministic generator for subsampling oversized sweep grids.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

std::vector<IdentityArgs> sweep_grid(const std::string& name, long max) {
  std::vector<IdentityArgs> grid;
  auto coprime = [](long x, long y) { return gcd(x, y) == 1; };
  auto pair_args = [](long a, long b) {
    IdentityArgs g;
    g.a = a;
    g.b = b;
    return g;
  };
  if (name == "carlitz" || name == "dedekind" || name == "quadrant" ||
      name == "triangle") {
    for (long a = 1; a <= max; ++a)
      for (long b = 1; b <= max; ++b)
        if (coprime(a, b)) grid.push_back(pair_args(a, b));
  } else if (name == "berndt-dieter" || name == "rademacher-3term" ||
             name == "orthant") {
    const bool need_coprime = name != "orthant";
    for (long a = 1; a <= max; ++a)
      for (long b = 1; b <= max; ++b)
        for (long c = 1; c <= max; ++c) {
          if (need_coprime && !(coprime(a, b) && coprime(a, c) && coprime(b, c)))
            continue;
          IdentityArgs g;
          if (name == "rademacher-3term") {
            g.a = a;
            g.b = b;
            g.c = c;
          } else {
            g.list = {a, b, c};
          }
          grid.push_back(std::move(g));
        }
  } else if (name == "two-ray" || name == "unimodular" || name == "pommersheim" ||
             name == "rademacher-abcd") {
    for (long a = 1; a <= max; ++a)
      for (long b = 1; b <= max; ++b)
        for (long c = 1; c <= max; ++c)
          for (long d = 1; d <= max; ++d) {
            const long det = a * d - b * c;
            if (name == "unimodular" || name == "rademacher-abcd") {
              if (det != 1) continue;
            } else {
              if (!coprime(a, b) || !coprime(c, d)) continue;
              if (name == "two-ray" && det < 1) continue;
            }
            IdentityArgs g;
            g.a = a;
            g.b = b;
            g.c = c;
            g.d = d;
            grid.push_back(std::move(g));
          }
  } else if (name == "tetra" || name == "ehrhart") {
    const long tmax = std::min(max, name == "tetra" ? 2L : 3L);
    for (long a = 1; a <= max; ++a)
      for (long b = 1; b <= max; ++b)
        for (long c = 1; c <= max; ++c) {
          if (!(coprime(a, b) && coprime(a, c) && coprime(b, c))) continue;
          for (long t = 1; t <= tmax; ++t) {
            IdentityArgs g;
            g.a = a;
            g.b = b;
            g.c = c;
            g.t = t;
            grid.push_back(std::move(g));
          }
        }
  } else {
    check_named_identity(name, IdentityArgs{});  // throws the usage error
  }
  return grid;
}

// Keeps at most `limit` grid rows, chosen deterministically from the seed and
// emitted in the original order.
void subsample(std::vector<IdentityArgs>& grid, std::size_t limit,
               std::uint64_t seed) {
  if (grid.size() <= limit) return;
  std::vector<std::size_t> idx(grid.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  SplitMix rng(seed);
  for (std::size_t i = 0; i < limit; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(limit);
  std::sort(idx.begin(), idx.end());
  std::vector<IdentityArgs> kept;
  kept.reserve(limit);
  for (std::size_t i : idx) kept.push_back(std::move(grid[i]));
  grid = std::move(kept);
}

int run_sweep(const std::string& name, long max, std::uint64_t seed,
              const Output& out) {
  std::vector<IdentityArgs> grid = sweep_grid(name, max);
  subsample(grid, 400, seed);
  std::vector<IdentityReport> failures;
  std::size_t checked = 0;
  std::string text;
  for (const IdentityArgs& g : grid) {
    IdentityReport r = check_named_identity(name, g);
    ++checked;
    if (!r.holds) failures.push_back(r);
    if (out.format == "text") text += report_line(r) + "\n";
  }
  if (out.format == "json") {
    Json j;
    j["identity"] = name;
    j["max"] = max;
    j["checked"] = checked;
    j["all_hold"] = failures.empty();
    Json f = Json::array();
    for (const auto& r : failures) f.push_back(report_to_json(r));
    j["failures"] = std::move(f);
    std::cout << j.dump() << "\n";
  } else {
    text += "checked " + std::to_string(checked) + " tuples: ";
    text += failures.empty() ? "all hold"
                             : std::to_string(failures.size()) + " violated";
    std::cout << text << "\n";
  }
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Dedekind sums, Dedekind-Carlitz polynomials, and integer-point "
      "transforms of simplicial rational cones"};
  app.require_subcommand(1);
  Output out;

  std::function<int()> run;

  // ---- dedekind a b ----
  {
    auto* sub = app.add_subcommand("dedekind", "Dedekind sum s(a, b) as p/q");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto expect = std::make_shared<std::string>();
    auto direct = std::make_shared<bool>(false);
    sub->add_option("a", *a, "first parameter")->required();
    sub->add_option("b", *b, "second parameter (>= 1)")->required();
    sub->add_flag("--direct", *direct, "force the O(b) defining sum");
    sub->add_option("--expect", *expect, "exit 1 unless the value equals this");
    add_output_flags(sub, &out);
    sub->callback([&run, &out, a, b, expect, direct] {
      run = [&out, a, b, expect, direct]() {
        BigInt av = arg_int(*a, "a"), bv = arg_int(*b, "b");
        BigRat s = (!*direct && bv >= 1 && gcd(av, bv) == 1) ? dedekind_fast(av, bv)
                                                             : dedekind_direct(av, bv);
        return emit_value(to_string(s), {{"a", *a}, {"b", *b}}, *expect, out);
      };
    });
  }

  // ---- carlitz a b ----
  {
    auto* sub = app.add_subcommand("carlitz", "Dedekind-Carlitz polynomial c(u, v; a, b)");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("a", *a, "slope parameter (>= 1)")->required();
    sub->add_option("b", *b, "modulus parameter (>= 1)")->required();
    add_output_flags(sub, &out);
    sub->callback([&run, &out, a, b] {
      run = [&out, a, b]() {
        emit_poly(carlitz_2d(arg_int(*a, "a"), arg_int(*b, "b")).polynomial, out);
        return 0;
      };
    });
  }

  // ---- carlitz-nd p1 p2 ... ----
  {
    auto* sub = app.add_subcommand(
        "carlitz-nd", "n-variable Dedekind-Carlitz polynomial c(u_1..u_n; a_1..a_n)");
    auto params = std::make_shared<std::vector<std::string>>();
    sub->add_option("params", *params, "parameters a_1 .. a_n (n >= 2)")->required();
    add_output_flags(sub, &out);
    sub->callback([&run, &out, params] {
      run = [&out, params]() {
        std::vector<BigInt> a;
        for (const auto& s : *params) a.push_back(arg_int(s, "params"));
        emit_poly(carlitz_nd(a).polynomial, out);
        return 0;
      };
    });
  }

  // ---- drc a b c ----
  {
    auto* sub = app.add_subcommand(
        "drc", "Dedekind-Rademacher-Carlitz double sum drc(u, v, w; a, b, c)");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto c = std::make_shared<std::string>();
    sub->add_option("a", *a, "numerator parameter (>= 1)")->required();
    sub->add_option("b", *b, "inner modulus (>= 1)")->required();
    sub->add_option("c", *c, "outer modulus (>= 1)")->required();
    add_output_flags(sub, &out);
    sub->callback([&run, &out, a, b, c] {
      run = [&out, a, b, c]() {
        emit_poly(drc_sum(arg_int(*a, "a"), arg_int(*b, "b"), arg_int(*c, "c")), out);
        return 0;
      };
    });
  }

  // ---- cone-ipt ----
  {
    auto* sub = app.add_subcommand(
        "cone-ipt", "integer-point transform of a simplicial cone from its "
                    "fundamental parallelepiped");
    auto gens = std::make_shared<std::vector<std::string>>();
    auto apex = std::make_shared<std::string>();
    auto open = std::make_shared<std::string>();
    auto expand = std::make_shared<bool>(false);
    sub->add_option("--gen", *gens, "generator as comma-separated integers (repeat)")
        ->required();
    sub->add_option("--apex", *apex, "apex (default: origin)");
    sub->add_option("--open", *open,
                    "comma-separated 0/1 flags, 1 = exclude the face at that generator");
    sub->add_flag("--expand", *expand,
                  "print the truncated series up to --degree in the all-ones grading");
    add_output_flags(sub, &out);
    sub->callback([&run, &out, gens, apex, open, expand] {
      run = [&out, gens, apex, open, expand]() {
        std::vector<ExpVec> g;
        for (const auto& s : *gens) g.push_back(arg_exp_vec(s, "--gen"));
        const int dim = g.empty() ? 0 : static_cast<int>(g.front().size());
        ExpVec ap = apex->empty() ? ExpVec(dim, 0) : arg_exp_vec(*apex, "--apex");
        std::vector<bool> op(g.size(), false);
        if (!open->empty()) {
          ExpVec flags = arg_exp_vec(*open, "--open");
          if (flags.size() != g.size())
            throw std::domain_error("--open: need one 0/1 flag per generator");
          for (std::size_t i = 0; i < flags.size(); ++i) {
            if (flags[i] != 0 && flags[i] != 1)
              throw std::domain_error("--open: flags must be 0 or 1");
            op[i] = flags[i] == 1;
          }
        }
        emit_ratfun(cone_ipt(SimplicialCone(ap, g, op)), *expand, out);
        return 0;
      };
    });
  }

  // ---- cone-transform a b c d ----
  {
    auto* sub = app.add_subcommand(
        "cone-transform", "closed-form transform of the planar cone over (a,b), (c,d)");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto c = std::make_shared<std::string>();
    auto d = std::make_shared<std::string>();
    auto expand = std::make_shared<bool>(false);
    sub->add_option("a", *a, "first ray x (>= 1)")->required();
    sub->add_option("b", *b, "first ray y (>= 1)")->required();
    sub->add_option("c", *c, "second ray x (>= 1)")->required();
    sub->add_option("d", *d, "second ray y (>= 1)")->required();
    sub->add_flag("--expand", *expand,
                  "print the truncated series up to --degree in the all-ones grading");
    add_output_flags(sub, &out);
    sub->callback([&run, &out, a, b, c, d, expand] {
      run = [&out, a, b, c, d, expand]() {
        emit_ratfun(cone_transform_2d(arg_int(*a, "a"), arg_int(*b, "b"),
                                      arg_int(*c, "c"), arg_int(*d, "d")),
                    *expand, out);
        return 0;
      };
    });
  }

  // ---- carlitz-short a b ----
  {
    auto* sub = app.add_subcommand(
        "carlitz-short",
        "c(u, v; a, b) as a short rational function with O(log(a+b)) terms");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto expand = std::make_shared<bool>(false);
    sub->add_option("a", *a, "slope parameter (>= 1, coprime to b)")->required();
    sub->add_option("b", *b, "modulus parameter (>= 1)")->required();
    sub->add_flag("--expand", *expand,
                  "print the truncated series up to --degree in the all-ones grading");
    add_output_flags(sub, &out);
    sub->callback([&run, &out, a, b, expand] {
      run = [&out, a, b, expand]() {
        emit_ratfun(carlitz_short_2d(arg_int(*a, "a"), arg_int(*b, "b")), *expand, out);
        return 0;
      };
    });
  }

  // ---- triangle a b ----
  {
    auto* sub = app.add_subcommand(
        "triangle", "lattice-point polynomial of the right triangle with legs a, b");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("a", *a, "leg along the x-axis (>= 1)")->required();
    sub->add_option("b", *b, "leg along the y-axis (>= 1)")->required();
    add_output_flags(sub, &out);
    sub->callback([&run, &out, a, b] {
      run = [&out, a, b]() {
        emit_poly(triangle_lattice_poly(arg_int(*a, "a"), arg_int(*b, "b")), out);
        return 0;
      };
    });
  }

  // ---- tetra a b c t ----
  {
    auto* sub = app.add_subcommand(
        "tetra",
        "lattice-point polynomial of the t-dilated tetrahedron with vertices "
        "(a,0,0), (0,b,0), (0,0,c), origin");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto c = std::make_shared<std::string>();
    auto t = std::make_shared<std::string>();
    sub->add_option("a", *a, "x-intercept (>= 1)")->required();
    sub->add_option("b", *b, "y-intercept (>= 1)")->required();
    sub->add_option("c", *c, "z-intercept (>= 1)")->required();
    sub->add_option("t", *t, "dilation factor (>= 1)")->required();
    add_output_flags(sub, &out);
    sub->callback([&run, &out, a, b, c, t] {
      run = [&out, a, b, c, t]() {
        emit_poly(tetrahedron_lattice_poly(arg_int(*a, "a"), arg_int(*b, "b"),
                                           arg_int(*c, "c"), arg_int(*t, "t")),
                  out);
        return 0;
      };
    });
  }

  // ---- ehrhart a b c ----
  {
    auto* sub = app.add_subcommand(
        "ehrhart",
        "cubic lattice-point counting polynomial of the tetrahedron (a, b, c "
        "pairwise coprime)");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto c = std::make_shared<std::string>();
    sub->add_option("a", *a, "x-intercept (>= 1)")->required();
    sub->add_option("b", *b, "y-intercept (>= 1)")->required();
    sub->add_option("c", *c, "z-intercept (>= 1)")->required();
    add_output_flags(sub, &out);
    sub->callback([&run, &out, a, b, c] {
      run = [&out, a, b, c]() {
        EhrhartCubic e = ehrhart_mp(arg_int(*a, "a"), arg_int(*b, "b"), arg_int(*c, "c"));
        std::string text = "c3 = " + to_string(e.c3) + "\nc2 = " + to_string(e.c2) +
                           "\nc1 = " + to_string(e.c1) + "\nc0 = " + to_string(e.c0);
        emit(text, ehrhart_to_json(e), out);
        return 0;
      };
    });
  }

  // ---- count a b c t ----
  {
    auto* sub = app.add_subcommand(
        "count", "number of lattice points in the t-dilated tetrahedron");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto c = std::make_shared<std::string>();
    auto t = std::make_shared<std::string>();
    auto expect = std::make_shared<std::string>();
    sub->add_option("a", *a, "x-intercept (>= 1)")->required();
    sub->add_option("b", *b, "y-intercept (>= 1)")->required();
    sub->add_option("c", *c, "z-intercept (>= 1)")->required();
    sub->add_option("t", *t, "dilation factor (>= 0)")->required();
    sub->add_option("--expect", *expect, "exit 1 unless the count equals this");
    add_output_flags(sub, &out);
    sub->callback([&run, &out, a, b, c, t, expect] {
      run = [&out, a, b, c, t, expect]() {
        BigInt n = count_tetrahedron(arg_int(*a, "a"), arg_int(*b, "b"),
                                     arg_int(*c, "c"), arg_int(*t, "t"));
        return emit_value(to_string(n),
                          {{"a", *a}, {"b", *b}, {"c", *c}, {"t", *t}}, *expect, out);
      };
    });
  }

  // ---- verify <identity> ----
  {
    auto* sub = app.add_subcommand("verify", "check one identity; exit 0 iff it holds");
    auto name = std::make_shared<std::string>();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto c = std::make_shared<std::string>();
    auto d = std::make_shared<std::string>();
    auto t = std::make_shared<std::string>();
    auto list = std::make_shared<std::string>();
    sub->add_option("identity", *name,
                    "carlitz | berndt-dieter | dedekind | two-ray | unimodular | "
                    "pommersheim | rademacher-3term | rademacher-abcd | quadrant | "
                    "orthant | triangle | tetra | ehrhart")
        ->required();
    sub->add_option("--a", *a, "parameter a");
    sub->add_option("--b", *b, "parameter b");
    sub->add_option("--c", *c, "parameter c");
    sub->add_option("--d", *d, "parameter d");
    sub->add_option("--t", *t, "dilation t");
    sub->add_option("--params", *list, "comma-separated parameter list");
    add_output_flags(sub, &out);
    sub->callback([&run, &out, name, a, b, c, d, t, list] {
      run = [&out, name, a, b, c, d, t, list]() {
        IdentityArgs g;
        if (!a->empty()) g.a = arg_int(*a, "--a");
        if (!b->empty()) g.b = arg_int(*b, "--b");
        if (!c->empty()) g.c = arg_int(*c, "--c");
        if (!d->empty()) g.d = arg_int(*d, "--d");
        if (!t->empty()) g.t = arg_int(*t, "--t");
        if (!list->empty()) g.list = arg_int_list(*list, "--params");
        return emit_report(check_named_identity(*name, g), out);
      };
    });
  }

  // ---- sweep <identity> --max K ----
  {
    auto* sub = app.add_subcommand(
        "sweep", "check an identity over its whole parameter grid up to --max; "
                 "exit 0 iff every tuple holds");
    auto name = std::make_shared<std::string>();
    auto max = std::make_shared<long>(0);
    auto seed = std::make_shared<std::uint64_t>(12345);
    sub->add_option("identity", *name, "identity name (see `verify`)")->required();
    sub->add_option("--max", *max, "upper bound for every parameter")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", *seed,
                    "seed for deterministic subsampling of oversized grids");
    add_output_flags(sub, &out);
    sub->callback([&run, &out, name, max, seed] {
      run = [&out, name, max, seed]() { return run_sweep(*name, *max, *seed, out); };
    });
  }

  try {
    app.parse(argc, argv);
    return run ? run() : 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
