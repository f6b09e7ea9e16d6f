#ifndef LOOPALG_CURRENT_HPP
#define LOOPALG_CURRENT_HPP

#include <map>
#include <string>
#include <vector>

#include "loopalg/rational.hpp"

namespace loopalg {

/// Which index ranges are legal: the Borel subalgebra admits x_k^+ and
/// h_k for k >= 0 and x_k^- for k >= 1 only; the full loop algebra
/// admits any integer degree.
enum class Mode { Borel, FullLoop };

enum class Kind { Raise, Lower, Cartan };

std::string kind_token(Kind k);  // "xp", "xm", "h"

/// One Drinfeld generator: x_k^+, x_k^- or h_k.
struct GenSymbol {
  Kind kind;
  int degree;
  auto operator<=>(const GenSymbol&) const = default;
};

bool degree_legal(Mode mode, Kind kind, int degree);
void require_degree_legal(Mode mode, Kind kind, int degree);

/// Finite linear combination of generators of a single kind.
class Current {
public:
  Current() : kind_(Kind::Cartan) {}
  explicit Current(GenSymbol g) : kind_(g.kind) { terms_[g.degree] = Rational(1); }
  Current(Kind kind, std::map<int, Rational> terms);

  static Current zero(Kind kind) { return Current(kind, {}); }

  Kind kind() const { return kind_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int degree) const;
  int min_degree() const;  // requires nonzero

  Current operator+(const Current& o) const;
  Current operator-(const Current& o) const;
  Current operator*(const Rational& c) const;
  bool operator==(const Current& o) const;

  void require_legal(Mode mode) const;

  /// Terms sorted by degree descending, e.g. "x2- - 2 x1-".
  std::string str() const;

private:
  Kind kind_;
  std::map<int, Rational> terms_;  // degree -> nonzero coefficient
};

/// Free Lie bracket from the defining relations, extended bilinearly:
/// [h_j, x_k^pm] = pm 2 x_{j+k}^pm, [x_j^+, x_k^-] = h_{j+k}, like
/// kinds and [h, h] bracket to zero.
Current bracket(const Current& x, const Current& y);

/// Product of currents with divided-power exponents, applied
/// right-to-left.  A negative exponent denotes the zero operator, an
/// empty word the identity.
struct WordFactor {
  Current current;
  int exponent = 1;
};

class OperatorWord {
public:
  OperatorWord() = default;
  explicit OperatorWord(std::vector<WordFactor> factors) : factors_(std::move(factors)) {}
  static OperatorWord identity() { return OperatorWord(); }

  const std::vector<WordFactor>& factors() const { return factors_; }
  OperatorWord then_apply(Current c, int exponent = 1) const;  // prepend on the left

private:
  std::vector<WordFactor> factors_;
};

}  // namespace loopalg

#endif
