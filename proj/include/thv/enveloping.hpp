#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "thv/central_poly.hpp"
#include "thv/generator.hpp"
#include "thv/generator_order.hpp"
#include "thv/lie_element.hpp"

namespace thv {

/// A generator word. Sorted words (nondecreasing under a GeneratorOrder) are
/// PBW monomials.
using Word = std::vector<Generator>;

/// Fixed enumeration order for serialization and term storage: longer words
/// first, then lexicographic on the (kind, index) letter sequence. Independent
/// of the PBW order, so output is byte-stable across basis choices.
struct CanonicalWordLess {
  bool operator()(const Word& a, const Word& b) const;
};

std::int64_t word_grade(const Word& w);
/// "L[-1]^2*I[-2]" (letters in word order, adjacent repeats as powers),
/// "1" for the empty word.
std::string word_text(const Word& w);
bool is_sorted_word(const Word& w, const GeneratorOrder& order);
/// Number of adjacent-transposition inversions (part of the termination
/// measure; used by debug assertions and tests).
std::uint64_t inversion_count(const Word& w, const GeneratorOrder& order);

/// Element of U(L) in canonical form: a finite CentralPoly-linear combination
/// of PBW monomials, all sorted under one GeneratorOrder, no zero
/// coefficients.
class EnvelopingElement {
 public:
  using Terms = std::map<Word, CentralPoly, CanonicalWordLess>;

  explicit EnvelopingElement(GeneratorOrder order = GeneratorOrder()) : order_(std::move(order)) {}

  static EnvelopingElement zero(GeneratorOrder order = GeneratorOrder());
  /// The empty monomial with coefficient 1.
  static EnvelopingElement unit(GeneratorOrder order = GeneratorOrder());
  static EnvelopingElement central(CentralPoly p, GeneratorOrder order = GeneratorOrder());
  static EnvelopingElement generator(const Generator& g, GeneratorOrder order = GeneratorOrder());
  /// Validates that `w` is sorted under `order` (UsageError otherwise).
  static EnvelopingElement monomial(Word w, CentralPoly coeff = CentralPoly::one(),
                                    GeneratorOrder order = GeneratorOrder());

  const GeneratorOrder& order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  EnvelopingElement& operator+=(const EnvelopingElement& o);  // UsageError on order mismatch
  EnvelopingElement& operator-=(const EnvelopingElement& o);
  EnvelopingElement operator-() const;
  EnvelopingElement& operator*=(const CentralPoly& p);
  EnvelopingElement& operator*=(const Rational& r);

  friend EnvelopingElement operator+(EnvelopingElement a, const EnvelopingElement& b) {
    return a += b;
  }
  friend EnvelopingElement operator-(EnvelopingElement a, const EnvelopingElement& b) {
    return a -= b;
  }
  friend EnvelopingElement operator*(EnvelopingElement a, const Rational& r) { return a *= r; }
  friend EnvelopingElement operator*(EnvelopingElement a, const CentralPoly& p) { return a *= p; }

  /// Same order and same terms.
  friend bool operator==(const EnvelopingElement& a, const EnvelopingElement& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  void add_term(const Word& w, const CentralPoly& coeff);

 private:
  GeneratorOrder order_;
  Terms terms_;
};

/// Which adjacent inversion of a word gets rewritten first. Straightening is
/// confluent (tested), so this is a performance knob, not a semantic one.
enum class RewriteStrategy { RightmostFirst, LeftmostFirst };

struct RewriteOptions {
  std::uint64_t step_budget = 0;  // 0 = unbounded; exceeding throws StepBudgetError
  RewriteStrategy strategy = RewriteStrategy::RightmostFirst;
};

/// Straightens an arbitrary word into canonical form: repeatedly rewrite an
/// out-of-order adjacent pair x.y -> y.x + [x,y] until every monomial is
/// sorted. Terminates because each rewrite either shortens a word or keeps
/// the length and lowers the inversion count.
EnvelopingElement normal_order(const Word& w, const GeneratorOrder& order,
                               const RewriteOptions& opts = {});

/// Re-canonicalizes an element in its own order (identity on canonical input).
EnvelopingElement normal_order(const EnvelopingElement& a, const RewriteOptions& opts = {});

/// Ring product. Both factors must carry the same order (UsageError).
EnvelopingElement multiply(const EnvelopingElement& a, const EnvelopingElement& b,
                           const RewriteOptions& opts = {});

/// The same element of U(L) expressed in another PBW basis.
EnvelopingElement renormalize(const EnvelopingElement& a, const GeneratorOrder& new_order,
                              const RewriteOptions& opts = {});

/// Selection of generators spanning a left ideal  sum_g U(L) g.
class LeftIdeal {
 public:
  /// Every I_k, k in Z (I_0 included).
  static LeftIdeal all_i();
  /// A finite generator set; must be nonempty (UsageError). Duplicates are
  /// merged.
  static LeftIdeal from_generators(std::vector<Generator> gens);

  bool selects(const Generator& g) const;
  /// An order that puts the selected generators last, so the ideal becomes a
  /// monomial tail filter. For all-I the default order already works.
  GeneratorOrder adapted_order() const;
  /// Central indeterminates of the form [g, g'] with both g, g' selected.
  /// These lie in the ideal themselves (g g' - g' g is a combination of
  /// left multiples of g and g'), so the canonical coset representative
  /// must not contain them.
  std::array<bool, 3> captured_centrals() const;  // indexed by CentralVar

  bool is_all_i() const { return all_i_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::string describe() const;  // "all-I" or "gens=L[1],I[1]"

 private:
  bool all_i_ = false;
  std::vector<Generator> gens_;
};

/// Canonical coset representative of `a` modulo the left ideal: normal-order
/// under the ideal-adapted order, drop every monomial whose rightmost
/// generator is selected (such monomials are literally left multiples of a
/// selected generator), then substitute 0 for the captured central
/// indeterminates. The result carries the adapted order.
EnvelopingElement reduce_mod_left_ideal(const EnvelopingElement& a, const LeftIdeal& ideal,
                                        const RewriteOptions& opts = {});

/// Evaluates central indeterminates at rational values; absent values keep
/// the indeterminate. A ring homomorphism (commutes with multiply).
EnvelopingElement specialize_centrals(const EnvelopingElement& a,
                                      const std::optional<Rational>& c,
                                      const std::optional<Rational>& ci,
                                      const std::optional<Rational>& cli);

/// Max monomial length; 0 for pure central polynomials and for zero.
std::size_t filtration_degree(const EnvelopingElement& a);

/// Embedding of filtration-degree <= 1 elements.
EnvelopingElement lift(const LieElement& x, GeneratorOrder order = GeneratorOrder());
/// Inverse of lift when the degree allows it.
std::optional<LieElement> to_lie(const EnvelopingElement& a);

}  // namespace thv
