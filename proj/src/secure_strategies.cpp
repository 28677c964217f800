#include "seal/secure_strategies.hpp"

#include <array>

#include "seal/grade_service.hpp"
#include "seal/minisql.hpp"

namespace seal::strategy {

Response UpdateStrategy::delegate(const Payload& payload,
                                  const store::SensitiveStore& store) const {
  const std::array<std::string, 1> params{payload.raw};
  if (sql::execute_parameterized(store, grades::kTrustQuery, params).empty()) {
    return Response::not_found();
  }
  return BenignStrategy{}.delegate(payload, store);
}

Response ErrorStrategy::delegate(const Payload& payload,
                                 const store::SensitiveStore& store) const {
  if (!grades::whitelist(store).contains(payload.raw)) return Response::obscured();
  return BenignStrategy{}.delegate(payload, store);
}

Response BenignStrategy::delegate(const Payload& payload,
                                  const store::SensitiveStore& store) const {
  return grades::has_entergrades_secure(store, payload.raw);
}

std::unique_ptr<StrategyFactory> make_factory(ThreatClass threat) {
  switch (threat) {
    case ThreatClass::UpdateBased: return std::make_unique<StrategyFactoryFor<UpdateStrategy>>();
    case ThreatClass::ErrorBased: return std::make_unique<StrategyFactoryFor<ErrorStrategy>>();
    case ThreatClass::Benign: break;
  }
  return std::make_unique<StrategyFactoryFor<BenignStrategy>>();
}

Response delegate_strategy(const StrategyFactory& factory, const Payload& payload,
                           const store::SensitiveStore& store) {
  return factory.create()->delegate(payload, store);
}

}  // namespace seal::strategy
