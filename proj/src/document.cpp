#include "metareason/document.hpp"

#include <string>

#include "metareason/errors.hpp"

namespace metareason {

std::string_view kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Knapsack: return "knapsack";
    case DocumentKind::SetCover: return "setcover";
    case DocumentKind::Ssat: return "ssat";
    case DocumentKind::PerformanceProfiles: return "performance-profiles";
    case DocumentKind::ActionEvaluation: return "action-evaluation";
    case DocumentKind::StateDisambiguation: return "state-disambiguation";
  }
  throw DomainError("unknown document kind");
}

std::optional<DocumentKind> kind_from_name(std::string_view name) {
  for (DocumentKind k :
       {DocumentKind::Knapsack, DocumentKind::SetCover, DocumentKind::Ssat,
        DocumentKind::PerformanceProfiles, DocumentKind::ActionEvaluation,
        DocumentKind::StateDisambiguation})
    if (name == kind_name(k)) return k;
  return std::nullopt;
}

DocumentKind InstanceDocument::kind() const {
  return static_cast<DocumentKind>(payload_.index());
}

template <class T>
const T& InstanceDocument::as() const {
  const T* p = std::get_if<T>(&payload_);
  if (p == nullptr)
    throw DomainError("document holds a " + std::string(kind_name(kind())) +
                      " instance, not the requested kind");
  return *p;
}

template const KnapsackInstance& InstanceDocument::as<KnapsackInstance>() const;
template const SetCoverInstance& InstanceDocument::as<SetCoverInstance>() const;
template const SsatInstance& InstanceDocument::as<SsatInstance>() const;
template const PerformanceProfilesInstance&
InstanceDocument::as<PerformanceProfilesInstance>() const;
template const ActionEvaluationInstance&
InstanceDocument::as<ActionEvaluationInstance>() const;
template const DisambiguationInstance& InstanceDocument::as<DisambiguationInstance>() const;

}  // namespace metareason
