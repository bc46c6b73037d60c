#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "metareason/disambiguation.hpp"
#include "metareason/evaluation_tree.hpp"
#include "metareason/instances.hpp"

namespace metareason {

enum class DocumentKind {
  Knapsack,
  SetCover,
  Ssat,
  PerformanceProfiles,
  ActionEvaluation,
  StateDisambiguation,
};

std::string_view kind_name(DocumentKind kind);
std::optional<DocumentKind> kind_from_name(std::string_view name);

/// A parsed instance file of any supported kind.
class InstanceDocument {
 public:
  using Payload = std::variant<KnapsackInstance, SetCoverInstance, SsatInstance,
                               PerformanceProfilesInstance, ActionEvaluationInstance,
                               DisambiguationInstance>;

  explicit InstanceDocument(Payload payload) : payload_(std::move(payload)) {}

  DocumentKind kind() const;
  const Payload& payload() const { return payload_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&payload_);
  }

  /// Typed access; throws DomainError when the document holds another kind.
  template <class T>
  const T& as() const;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;

 private:
  Payload payload_;
};

}  // namespace metareason
