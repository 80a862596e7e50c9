#ifndef BSAKS_CATALOG_HPP
#define BSAKS_CATALOG_HPP

#include <string>
#include <vector>

#include "bsaks/sequence.hpp"

namespace bsaks {

enum class BoundKind { kExact, kUpper, kLower, kHeuristic };
const char* bound_kind_name(BoundKind kind);

struct GeneratorInfo {
  std::string id;
  std::string params;  // parameter names, empty when none
  std::string summary;
  std::string citation;
};

const std::vector<GeneratorInfo>& catalog_generators();

Generator make_generator(const std::string& id, std::vector<Rational> params = {});

/// "id", "id(p1,p2)" followed by optional "|stage" suffixes: "|cesaro",
/// "|k^E", "|list:a,b,c", "|scale:L".
SequenceSpec catalog_sequence(const std::string& text);

/// The listed vectors, then the last one forever.
SequenceSpec explicit_sequence(std::vector<FiniteVector> vectors, const Space& home);
SequenceSpec constant_sequence(const FiniteVector& v, const Space& home);
/// y_k = scale * sum_{i=1..n} alpha_i u_{m0 + k n + i}, n = #alpha.
SequenceSpec blocks_sequence(const SequenceSpec& inner, std::vector<Rational> alpha, std::uint64_t m0,
                             const Rational& scale);

struct AnalyticValue {
  std::string quantity;  // bs, wbs, beta, chi, omega, wk, wck, swu, sm, phi, phi'
  Rational value;
  BoundKind kind;  // exact, lower (quantity >= value) or upper (quantity <= value)
  std::string citation;
};

struct CatalogSetRecord {
  std::string id;
  std::string summary;
  Space space = Space::sup();
  std::vector<SequenceSpec> members;
  std::vector<AnalyticValue> analytic;
};

std::vector<std::string> catalog_set_ids();
/// ball-l1, ball-c0, ball-c, omega-A(n), A-eps(e).
CatalogSetRecord catalog_set(const std::string& text);

}  // namespace bsaks

#endif  // BSAKS_CATALOG_HPP
