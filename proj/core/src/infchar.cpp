#include "norbit/infchar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "norbit/error.hpp"
#include "norbit/induction.hpp"

namespace norbit {

InfChar::InfChar(ClassicalType type, std::vector<Rational> entries) : type_(type), entries_(std::move(entries)) {}

std::vector<Rational> InfChar::canonical() const {
  std::vector<Rational> out = entries_;
  if (type_ == ClassicalType::A) {
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
  }
  for (auto& x : out) x = abs(x);
  std::sort(out.begin(), out.end(), std::greater<>{});
  if (type_ == ClassicalType::D) {
    const auto parity = d_sign_parity();
    if (parity && !*parity) out.back() = -out.back();
  }
  return out;
}

std::optional<bool> InfChar::d_sign_parity() const {
  if (type_ != ClassicalType::D || entries_.empty()) return std::nullopt;
  int negatives = 0;
  for (const auto& x : entries_) {
    if (x.is_zero()) return std::nullopt;
    if (x.sign() < 0) ++negatives;
  }
  return negatives % 2 == 0;
}

namespace {

std::string join(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].to_string();
  }
  return out + ")";
}

std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

// hi, hi-1, ..., down to and including lo; empty when hi < lo.
std::vector<Rational> descending_range(const Rational& hi, const Rational& lo) {
  std::vector<Rational> out;
  for (Rational x = hi; x >= lo; x -= 1) out.push_back(x);
  return out;
}

void append(std::vector<Rational>& into, const std::vector<Rational>& more) {
  into.insert(into.end(), more.begin(), more.end());
}

}  // namespace

std::string InfChar::to_string() const { return join(canonical()); }

bool infchar_equal(const InfChar& a, const InfChar& b) {
  if (a.type() != b.type()) throw Error(ErrorKind::Usage, "infinitesimal characters of different types");
  if (a.size() != b.size())
    throw Error(ErrorKind::Usage, "infinitesimal characters of different ranks: " + a.to_string() + " vs " +
                                      b.to_string());
  return a.canonical() == b.canonical();
}

bool infchar_equal(ClassicalType t, const InfChar& a, const InfChar& b) {
  return infchar_equal(InfChar(t, a.entries()), InfChar(t, b.entries()));
}

std::vector<Rational> rho_gl(int k) {
  if (k <= 0) return {};
  return descending_range(Rational(k - 1, 2), Rational(-(k - 1), 2));
}

InfChar rho(ClassicalType t, int n) {
  switch (t) {
    case ClassicalType::A: return InfChar(t, rho_gl(n + 1));
    case ClassicalType::B: return InfChar(t, descending_range(Rational(2 * n - 1, 2), Rational(1, 2)));
    case ClassicalType::C: return InfChar(t, descending_range(Rational(n), Rational(1)));
    case ClassicalType::D: return InfChar(t, descending_range(Rational(n - 1), Rational(0)));
  }
  throw Error(ErrorKind::Usage, "unknown type");
}

std::string to_string(PairingMode mode) {
  switch (mode) {
    case PairingMode::Parity: return "parity";
    case PairingMode::Literal: return "literal";
    case PairingMode::Uniform: return "uniform";
  }
  return "?";
}

PairingMode parse_pairing_mode(std::string_view text) {
  if (text == "parity") return PairingMode::Parity;
  if (text == "literal") return PairingMode::Literal;
  if (text == "uniform") return PairingMode::Uniform;
  throw Error(ErrorKind::Usage, "pairing mode must be parity, literal or uniform, got '" + std::string(text) + "'");
}

std::string RecipeTrace::to_text() const {
  std::ostringstream os;
  os << "columns " << join(columns) << "\n";
  os << "padded  " << join(padded) << "\n";
  for (const auto& s : steps)
    os << s.kind << ' ' << join(s.columns) << " -> " << s.formula << ' ' << join(s.contribution) << "\n";
  if (label_flip) os << "label II: negate the last canonical entry\n";
  os << "result  " << join(raw) << "\n";
  return os.str();
}

namespace {

bool rho_gl_in_class(ClassicalType t, int m) { return t == ClassicalType::B ? m % 2 == 0 : m % 2 != 0; }

[[noreturn]] void parity_violation(const OrbitDescriptor& o, const std::string& what, const std::vector<int>& cols) {
  throw Error(ErrorKind::Recipe, o.to_string() + ": " + what + " at columns " + join(cols));
}

}  // namespace

InfChar recipe_infchar(const OrbitDescriptor& o, PairingMode mode, RecipeTrace* trace) {
  RecipeTrace local;
  RecipeTrace& tr = trace ? *trace : local;
  tr = RecipeTrace{};
  const ClassicalType t = o.type;
  std::vector<int> c = transpose(o.partition).parts();
  tr.columns = c;
  std::vector<Rational> out;

  auto record = [&](std::string kind, std::vector<int> cols, std::string formula, std::vector<Rational> contrib) {
    append(out, contrib);
    tr.steps.push_back(RecipeStep{std::move(kind), std::move(cols), std::move(formula), std::move(contrib)});
  };

  if (t == ClassicalType::A) {
    tr.padded = c;
    for (int m : c) record("column", {m}, "rho_gl", rho_gl(m));
  } else {
    const bool odd_length = t != ClassicalType::D;
    if ((c.size() % 2 != 0) != odd_length) c.push_back(0);
    tr.padded = c;

    const std::size_t start = t == ClassicalType::C ? 1 : 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = start; i + 1 < c.size(); i += 2) {
        if (c[i] == c[i + 1] && c[i] > 0) {
          const int m = c[i];
          record("remove", {m, m}, "rho_gl", rho_gl(m));
          c.erase(c.begin() + static_cast<std::ptrdiff_t>(i), c.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          changed = true;
          break;
        }
      }
    }

    auto pair = [&](int a, int b, bool leading) {
      if ((a - b) % 2 != 0) parity_violation(o, "pair members of unlike parity", {a, b});
      bool substitute = false;
      if (a == b) {
        switch (mode) {
          case PairingMode::Parity: substitute = rho_gl_in_class(t, a); break;
          case PairingMode::Literal: substitute = false; break;
          case PairingMode::Uniform: substitute = !leading; break;
        }
      }
      if (substitute)
        record("pair", {a, b}, "rho_gl", rho_gl(a));
      else
        record("pair", {a, b}, "range", descending_range(Rational(a, 2), Rational(-(b - 2), 2)));
    };

    switch (t) {
      case ClassicalType::B: {
        const int m0 = c.front();
        if (m0 % 2 == 0) parity_violation(o, "leading singleton is even", {m0});
        record("singleton", {m0}, "range", descending_range(Rational(m0 - 2, 2), Rational(1, 2)));
        for (std::size_t i = 1; i + 1 < c.size(); i += 2) pair(c[i], c[i + 1], false);
        break;
      }
      case ClassicalType::C: {
        for (std::size_t i = 0; i + 1 < c.size(); i += 2) pair(c[i], c[i + 1], i == 0);
        const int last = c.back();
        if (last % 2 != 0) parity_violation(o, "trailing singleton is odd", {last});
        record("singleton", {last}, "range", descending_range(Rational(last, 2), Rational(1)));
        break;
      }
      case ClassicalType::D: {
        if (!c.empty()) {
          const int a = c.front();
          const int b = c.back();
          if ((a - b) % 2 != 0) parity_violation(o, "wrap pair members of unlike parity", {a, b});
          record("wrap", {a, b}, "range", descending_range(Rational(a - 2, 2), Rational(-b, 2)));
          for (std::size_t i = 1; i + 2 < c.size(); i += 2) pair(c[i], c[i + 1], false);
        }
        break;
      }
      case ClassicalType::A: break;
    }
  }

  const std::size_t expected = static_cast<std::size_t>(t == ClassicalType::A ? o.rank + 1 : o.rank);
  if (out.size() != expected)
    throw Error(ErrorKind::Recipe, o.to_string() + ": recipe produced " + std::to_string(out.size()) +
                                       " entries, expected " + std::to_string(expected));
  if (o.label == VeryEvenLabel::II) {
    tr.label_flip = true;
    out = InfChar(t, out).canonical();
    out.back() = -out.back();
  }
  tr.raw = out;
  return InfChar(t, std::move(out));
}

std::optional<std::string> even_dual_obstruction(const OrbitDescriptor& o) {
  if (!is_special(o)) return o.to_string() + " is not special";
  const auto dual = bv_dual(o);
  if (!is_even(dual)) return "dual orbit " + dual.to_string() + " is not even";
  return std::nullopt;
}

bool even_dual_applies(const OrbitDescriptor& o) { return !even_dual_obstruction(o).has_value(); }

InfChar even_dual_infchar(const OrbitDescriptor& o) {
  if (auto why = even_dual_obstruction(o)) throw Error(ErrorKind::Validation, "even-dual rule does not apply: " + *why);
  std::vector<Rational> out;
  for (int x : dynkin_h(bv_dual(o))) out.emplace_back(x, 2);
  return InfChar(o.type, std::move(out));
}

std::string to_string(InfCharRule rule) { return rule == InfCharRule::EvenDual ? "even-dual" : "recipe"; }

InfCharResult infchar(const OrbitDescriptor& o, PairingMode mode) {
  if (even_dual_applies(o)) return {even_dual_infchar(o), InfCharRule::EvenDual};
  return {recipe_infchar(o, mode), InfCharRule::Recipe};
}

// ---- consistency audit -----------------------------------------------------

long ConsistencyReport::check_count() const {
  long total = 0;
  for (const auto& o : orbits) total += static_cast<long>(o.checks.size());
  return total;
}

namespace {

std::vector<Rational> flip_last(std::vector<Rational> v) {
  if (!v.empty()) v.back() = -v.back();
  return v;
}

void straddle_checks(const OrbitDescriptor& o, const InfChar& lambda, PairingMode pairing, OrbitConsistency& entry) {
  const ClassicalType t = o.type;
  std::vector<int> c = transpose(o.partition).parts();
  const bool odd_length = t != ClassicalType::D;
  if ((c.size() % 2 != 0) != odd_length) c.push_back(0);
  const std::size_t start = t == ClassicalType::C ? 1 : 0;
  for (std::size_t i = start; i + 1 < c.size(); i += 2) {
    if (c[i] != c[i + 1] || c[i] == 0) continue;
    const int m = c[i];
    std::vector<int> rest = c;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i), rest.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    const Partition base_partition = transpose(Partition::from_unsorted(rest));
    const int n0 = o.rank - m;
    ConsistencyCheck check{"straddle", true, ""};
    std::ostringstream detail;
    detail << "columns " << m << "," << m << " removed; base ";
    try {
      std::optional<VeryEvenLabel> base_label;
      if (is_very_even(t, base_partition)) base_label = o.label.value_or(VeryEvenLabel::I);
      const auto base = make_orbit(t, n0, base_partition, base_label);
      detail << base.to_string();
      const int blocks[] = {m};
      const auto induced = induce(t, o.rank, base, blocks);
      // With no residual factor the two gl Levi classes give both labels;
      // the label II class is the image of the standard one under the outer
      // automorphism that negates the last coordinate.
      const bool other_class = t == ClassicalType::D && n0 == 0 && o.label == VeryEvenLabel::II;
      const bool same_orbit = induced.partition == o.partition && (other_class || induced.label == o.label);
      std::vector<Rational> expected = rho_gl(m);
      append(expected, infchar(base, pairing).value.entries());
      if (other_class) expected = flip_last(InfChar(t, expected).canonical());
      const bool same_lambda = infchar_equal(lambda, InfChar(t, expected));
      detail << "; induced " << induced.to_string() << (same_orbit ? "" : " (mismatch)") << "; rho_gl(" << m
             << ") with lambda(base) = " << InfChar(t, expected).to_string()
             << (same_lambda ? "" : " vs " + lambda.to_string());
      check.ok = same_orbit && same_lambda;
    } catch (const Error& e) {
      check.ok = false;
      detail << "error: " << e.what();
    }
    check.detail = detail.str();
    entry.checks.push_back(std::move(check));
  }
}

void triangular_check(const OrbitDescriptor& o, const InfChar& lambda, OrbitConsistency& entry) {
  ConsistencyCheck check{"triangular", true, ""};
  const auto levi = triangular_levi(o).levi;
  const auto base = zero_orbit(o.type, levi.residual_rank);
  const auto induced = induce(o.type, o.rank, base, levi.gl_blocks);
  std::vector<Rational> expected;
  for (int k : levi.gl_blocks) append(expected, rho_gl(k));
  append(expected, rho(o.type, levi.residual_rank).entries());
  const bool same_orbit = induced == o;
  const bool same_lambda = infchar_equal(lambda, InfChar(o.type, expected));
  check.ok = same_orbit && same_lambda;
  check.detail = "Levi " + levi.to_string(o.type) + " induces " + induced.to_string() + "; rho_L = " +
                 InfChar(o.type, expected).to_string() + (same_lambda ? "" : " vs " + lambda.to_string());
  entry.checks.push_back(std::move(check));
}

}  // namespace

ConsistencyReport consistency_report(ClassicalType t, int n, PairingMode pairing, StablyTrivialMode st_mode,
                                     int rank_bound) {
  if (n > rank_bound)
    throw Error(ErrorKind::Bound, "consistency report limited to rank " + std::to_string(rank_bound));
  ConsistencyReport report;
  report.type = t;
  report.rank = n;
  report.pairing = pairing;
  report.stably_trivial_mode = st_mode;
  if (t == ClassicalType::D && st_mode == StablyTrivialMode::PaperLiteral)
    report.warnings.push_back(
        "type D paper-literal stably-trivial criterion is vacuous: every valid D partition passes");

  for (const auto& o : enumerate_orbits(t, n)) {
    OrbitConsistency entry;
    entry.orbit = o;
    entry.special = is_special(o);
    entry.even_dual_domain = even_dual_applies(o);
    entry.stably_trivial = is_stably_trivial(o, st_mode);
    entry.triangular = is_triangular(o);
    if (entry.even_dual_domain) entry.even_dual = even_dual_infchar(o);
    try {
      entry.recipe = recipe_infchar(o, pairing);
    } catch (const Error& e) {
      entry.recipe_error = e.what();
    }
    entry.rule = entry.even_dual_domain ? InfCharRule::EvenDual : InfCharRule::Recipe;

    if (entry.even_dual_domain) {
      if (entry.recipe) {
        const bool ok = infchar_equal(*entry.recipe, *entry.even_dual);
        entry.checks.push_back({"recipe-vs-even-dual", ok,
                                "recipe " + entry.recipe->to_string() + ", even-dual " + entry.even_dual->to_string()});
      } else {
        report.notes.push_back(o.to_string() + ": recipe undefined on the even-dual domain (" + entry.recipe_error +
                               "); even-dual takes precedence");
      }
    } else {
      entry.checks.push_back({"recipe-defined", entry.recipe.has_value(),
                              entry.recipe ? "recipe " + entry.recipe->to_string() : entry.recipe_error});
    }

    std::optional<InfChar> lambda = entry.even_dual ? entry.even_dual : entry.recipe;
    if (lambda && t != ClassicalType::A) {
      straddle_checks(o, *lambda, pairing, entry);
      if (entry.triangular) triangular_check(o, *lambda, entry);
    }

    for (const auto& check : entry.checks)
      if (!check.ok) report.discrepancies.push_back(o.to_string() + " [" + check.kind + "] " + check.detail);
    report.orbits.push_back(std::move(entry));
  }
  return report;
}

}  // namespace norbit
