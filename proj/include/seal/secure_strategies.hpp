#pragma once

#include <memory>

#include "seal/response.hpp"
#include "seal/sensitive_store.hpp"
#include "seal/threat_detection.hpp"

namespace seal::strategy {

using threat::Payload;
using threat::ThreatClass;

/// A security strategy for one threat class. Strategies only ever see a
/// const store.
class SecureStrategy {
 public:
  virtual ~SecureStrategy() = default;

  virtual ThreatClass serves() const noexcept = 0;
  virtual Response delegate(const Payload& payload,
                            const store::SensitiveStore& store) const = 0;
};

// Parameterized lookup of the whole payload as a username; unknown names get
// "User doesn't exist", known names fall through to the benign check.
class UpdateStrategy final : public SecureStrategy {
 public:
  ThreatClass serves() const noexcept override { return ThreatClass::UpdateBased; }
  Response delegate(const Payload& payload, const store::SensitiveStore& store) const override;
};

// Whitelist gate with a single payload-independent failure message.
class ErrorStrategy final : public SecureStrategy {
 public:
  ThreatClass serves() const noexcept override { return ThreatClass::ErrorBased; }
  Response delegate(const Payload& payload, const store::SensitiveStore& store) const override;
};

class BenignStrategy final : public SecureStrategy {
 public:
  ThreatClass serves() const noexcept override { return ThreatClass::Benign; }
  Response delegate(const Payload& payload, const store::SensitiveStore& store) const override;
};

class StrategyFactory {
 public:
  virtual ~StrategyFactory() = default;

  virtual ThreatClass tag() const noexcept = 0;
  virtual std::unique_ptr<SecureStrategy> create() const = 0;
};

template <typename Strategy>
class StrategyFactoryFor final : public StrategyFactory {
 public:
  ThreatClass tag() const noexcept override { return Strategy{}.serves(); }
  std::unique_ptr<SecureStrategy> create() const override { return std::make_unique<Strategy>(); }
};

std::unique_ptr<StrategyFactory> make_factory(ThreatClass threat);

// Creates a fresh strategy from `factory` and runs it.
Response delegate_strategy(const StrategyFactory& factory, const Payload& payload,
                           const store::SensitiveStore& store);

}  // namespace seal::strategy
