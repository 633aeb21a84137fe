#pragma once

#include <optional>
#include <string>
#include <vector>

#include "norbit/orbit.hpp"
#include "norbit/rational.hpp"

namespace norbit {

/// An infinitesimal character: a coordinate vector up to the Weyl group.
/// Type A vectors have n+1 gl coordinates, the others have `rank` entries.
class InfChar {
 public:
  InfChar() = default;
  InfChar(ClassicalType type, std::vector<Rational> entries);

  ClassicalType type() const noexcept { return type_; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Dominant Weyl representative. A: sorted decreasing. B, C: absolute values
  /// sorted decreasing. D: as B, C with the last entry negative when no entry
  /// is zero and an odd number of entries were negative.
  std::vector<Rational> canonical() const;

  /// Type D only, and only when no entry is zero: true when the number of
  /// negative entries is even.
  std::optional<bool> d_sign_parity() const;

  /// "(1/2,1/2)" of the canonical form.
  std::string to_string() const;

 private:
  ClassicalType type_ = ClassicalType::A;
  std::vector<Rational> entries_;
};

/// Weyl-group equality. Throws ErrorKind::Usage on mismatched sizes or types.
bool infchar_equal(const InfChar& a, const InfChar& b);
bool infchar_equal(ClassicalType t, const InfChar& a, const InfChar& b);

/// rho of the classical algebra (type A: rho of gl(n+1)).
InfChar rho(ClassicalType t, int n);
/// ((k-1)/2, ..., -(k-1)/2).
std::vector<Rational> rho_gl(int k);

/// How an equal pattern pair (m, m) contributes in the recipe.
enum class PairingMode {
  /// rho_gl(m) when it lies in the integrality class of the type's rho
  /// (B: m even; C, D: m odd), else the displayed range formula.
  Parity,
  /// Always the displayed range formula.
  Literal,
  /// rho_gl(m) for every interior pair; the leading C pair is displayed.
  Uniform,
};

std::string to_string(PairingMode mode);
PairingMode parse_pairing_mode(std::string_view text);

struct RecipeStep {
  std::string kind;          // "remove", "singleton", "pair", "wrap"
  std::vector<int> columns;  // column values consumed
  std::string formula;       // "rho_gl" or "range"
  std::vector<Rational> contribution;
};

struct RecipeTrace {
  std::vector<int> columns;  // transpose of the partition
  std::vector<int> padded;
  std::vector<RecipeStep> steps;
  bool label_flip = false;  // very even label II
  std::vector<Rational> raw;

  std::string to_text() const;
};

/// Column-pairing recipe. Throws ErrorKind::Recipe on a parity-pattern
/// violation, naming the offending columns.
InfChar recipe_infchar(const OrbitDescriptor& o, PairingMode mode = PairingMode::Parity,
                       RecipeTrace* trace = nullptr);

/// Empty when the even-dual rule applies, otherwise the failed condition.
std::optional<std::string> even_dual_obstruction(const OrbitDescriptor& o);
bool even_dual_applies(const OrbitDescriptor& o);

/// h(bv_dual(o)) / 2. Throws ErrorKind::Validation naming the failed
/// precondition.
InfChar even_dual_infchar(const OrbitDescriptor& o);

enum class InfCharRule { EvenDual, Recipe };
std::string to_string(InfCharRule rule);

struct InfCharResult {
  InfChar value;
  InfCharRule rule = InfCharRule::Recipe;
};

/// Even-dual rule where it applies, else the recipe.
InfCharResult infchar(const OrbitDescriptor& o, PairingMode mode = PairingMode::Parity);

// ---- consistency audit -----------------------------------------------------

struct ConsistencyCheck {
  std::string kind;  // "recipe-vs-even-dual", "recipe-defined", "straddle", "triangular"
  bool ok = true;
  std::string detail;
};

struct OrbitConsistency {
  OrbitDescriptor orbit;
  bool special = false;
  bool even_dual_domain = false;
  std::optional<InfChar> even_dual;
  std::optional<InfChar> recipe;
  std::string recipe_error;
  InfCharRule rule = InfCharRule::Recipe;
  bool stably_trivial = false;
  bool triangular = false;
  std::vector<ConsistencyCheck> checks;
};

struct ConsistencyReport {
  ClassicalType type = ClassicalType::A;
  int rank = 0;
  PairingMode pairing = PairingMode::Parity;
  StablyTrivialMode stably_trivial_mode = StablyTrivialMode::PaperLiteral;
  std::vector<OrbitConsistency> orbits;
  std::vector<std::string> discrepancies;
  std::vector<std::string> notes;
  std::vector<std::string> warnings;
  /// Known exceptions excused from the discrepancy count.
  std::vector<std::string> exceptions;

  long check_count() const;
};

inline constexpr int kDefaultConsistencyRankBound = 8;

/// Audits every orbit of type t and rank n. Throws ErrorKind::Bound when n
/// exceeds `rank_bound`.
ConsistencyReport consistency_report(ClassicalType t, int n, PairingMode pairing = PairingMode::Parity,
                                     StablyTrivialMode st_mode = StablyTrivialMode::PaperLiteral,
                                     int rank_bound = kDefaultConsistencyRankBound);

}  // namespace norbit
