#ifndef BSAKS_SEQUENCE_HPP
#define BSAKS_SEQUENCE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bsaks/finite_vector.hpp"
#include "bsaks/rational.hpp"
#include "bsaks/space.hpp"
#include "bsaks/text_format.hpp"

namespace bsaks {

/// Strictly increasing map k -> n_k on the positive integers, built from
/// powers k^e and explicit lists (a list of length L continues as
/// n_k = n_L + (k - L) past its end).
class IndexMap {
 public:
  static IndexMap identity() { return IndexMap(); }
  static IndexMap power(unsigned exponent);
  /// Throws invalid-index-map unless the list is positive and strictly increasing.
  static IndexMap explicit_list(std::vector<std::uint64_t> values, std::string label = "explicit");

  std::uint64_t operator()(std::uint64_t k) const;
  bool is_identity() const { return atoms_.empty(); }
  std::string name() const;

  /// (f o g)(k) = f(g(k)).
  friend IndexMap compose(const IndexMap& f, const IndexMap& g);
  friend bool operator==(const IndexMap& a, const IndexMap& b) { return a.name() == b.name(); }

  TextBlock to_text() const;
  static IndexMap from_text(const TextBlock& block);
  /// "id", "k^E", or "a,b,c".
  static IndexMap parse(const std::string& text);

 private:
  struct Atom {
    unsigned exponent = 1;              // power atom when values is empty
    std::vector<std::uint64_t> values;  // list atom otherwise
    std::string label;
  };
  // applied right to left: map(k) = atoms_[0](atoms_[1](... (k)))
  std::vector<Atom> atoms_;
};

class SequenceSpec;

/// Base sequence of a spec: a catalog id plus parameters.
struct Generator {
  std::string id;
  std::vector<Rational> params;
  std::vector<FiniteVector> vectors;        // explicit / constant generators
  std::shared_ptr<const SequenceSpec> inner;  // blocks generator
  std::shared_ptr<const Space> home;          // explicit / constant generators
};

struct Stage {
  enum class Kind { kSubsequence, kAffine, kCesaro };
  Kind kind = Kind::kCesaro;
  IndexMap map;         // subsequence
  FiniteVector shift;   // affine: y = scale * (x - shift)
  Rational scale{1};
};

/// Facts about a sequence that finite prefixes cannot reveal, carried along
/// the stage list.
struct SequenceTraits {
  Space home = Space::sup();
  Rational bound{1};
  FiniteVector weak_limit;
  std::optional<FiniteVector> pointwise_limit;
  bool convergent = false;                 // eventually constant
  std::optional<Rational> ca_closed_form;  // exact ca in the home space
  std::optional<Rational> uniform_distance;  // ||x_k - x_l|| for all k != l
  bool spreading_monotone = false;  // ||sum b_j x_{g_j}|| >= ||sum b_j x_{f_j}|| when g_j >= f_j
};

class SequenceSpec {
 public:
  explicit SequenceSpec(Generator generator);

  const Generator& generator() const { return generator_; }
  const std::vector<Stage>& stages() const { return stages_; }
  std::size_t cesaro_depth() const;

  SequenceSpec subsequence(const IndexMap& map) const;
  SequenceSpec cesaro() const;
  SequenceSpec shift_scale(const FiniteVector& shift, const Rational& scale) const;

  const SequenceTraits& traits() const { return traits_; }
  std::string name() const;

  TextBlock to_text() const;
  static SequenceSpec from_text(const TextBlock& block);

  friend bool operator==(const SequenceSpec& a, const SequenceSpec& b);

 private:
  void push(Stage stage);

  Generator generator_;
  std::vector<Stage> stages_;
  SequenceTraits traits_;
};

/// x_k for k >= 1.
FiniteVector generate(const SequenceSpec& spec, std::uint64_t k);
/// x_1, ..., x_n (streams Cesaro stages).
std::vector<FiniteVector> generate_prefix(const SequenceSpec& spec, std::uint64_t n);

TextBlock vector_to_text(const FiniteVector& v);
FiniteVector vector_from_text(const TextBlock& block);
/// Every child block named "vector", in order.
std::vector<FiniteVector> vectors_from_text(const TextBlock& block);

/// Base generator evaluation and metadata (catalog.cpp).
FiniteVector generate_base(const Generator& g, std::uint64_t k);
SequenceTraits base_traits(const Generator& g);
std::string generator_name(const Generator& g);

}  // namespace bsaks

#endif  // BSAKS_SEQUENCE_HPP
