#ifndef WARRANT_REPORT_HPP
#define WARRANT_REPORT_HPP

#include <string>

#include <json.hpp>

#include "warrant/verify.hpp"

namespace warrant {

using Json = nlohmann::ordered_json;

// Machine- and human-readable renderings of synthesis output and
// verification verdicts. JSON output is deterministic: object keys keep
// insertion order and all lists follow declaration or BFS order.

Json guarantees_to_json(const GuaranteeSet& gs, const Abstraction& abs);
std::string guarantees_to_text(const GuaranteeSet& gs, const Abstraction& abs);

Json state_to_json(const Problem& prob, const State& s);
std::string state_to_text(const Problem& prob, const State& s);

Json report_to_json(const Problem& prob, const GuaranteeReport& r);
Json report_to_json(const Problem& prob, const SoundnessReport& r);
Json report_to_json(const Problem& prob, const MembershipReport& r);
Json report_to_json(const Problem& prob, const InvariantReport& r);
Json report_to_json(const Problem& prob, const PolicyReport& r);

std::string report_to_text(const Problem& prob, const GuaranteeReport& r);
std::string report_to_text(const Problem& prob, const SoundnessReport& r);
std::string report_to_text(const Problem& prob, const MembershipReport& r);
std::string report_to_text(const Problem& prob, const InvariantReport& r);
std::string report_to_text(const Problem& prob, const PolicyReport& r);

} // namespace warrant

#endif
