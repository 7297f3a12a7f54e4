#pragma once

#include "dunamis/surd.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dunamis {

/// Identifiers of the propositions a derivation step may appeal to.
enum class Tag {
    VII_13,       // alternation of a proportion
    VII_20,       // the least pair measures any pair in the same ratio
    VII_22,       // coprime numbers are the least in their ratio
    VII_24,       // squares of coprime numbers are coprime
    X_9,          // commensurable in length iff squares as square to square
    PropA,        // sqrt of an integer is rational iff it is a perfect square
    PropAPrime,   // sqrt of an integer is an integer iff it is a perfect square
    Integrality,  // m/n in lowest terms with m^2/n^2 integral forces n = 1
    Dichotomy,    // every number is square or oblong
};

/// "VII.13", "PROP-A'", "INTEGRALITY", ...
std::string_view to_string(Tag tag);
std::optional<Tag> parse_tag(std::string_view text);

using ExactValue = std::variant<Natural, Ratio, Surd>;

std::string to_string(const ExactValue& v);

struct Witness {
    std::string name;
    ExactValue value;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct TraceStep {
    Tag tag;
    std::string statement;
    std::vector<Witness> witnesses;
    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// A linear derivation. Never empty once returned from a decider.
class ProofTrace {
public:
    ProofTrace& add(Tag tag, std::string statement, std::vector<Witness> witnesses = {});

    const std::vector<TraceStep>& steps() const noexcept { return steps_; }
    bool empty() const noexcept { return steps_.empty(); }
    bool contains(Tag tag) const;
    std::vector<Tag> tags() const;

    /// Non-empty and every statement non-empty. Tags and witness values are
    /// closed by construction.
    bool valid() const;

    friend bool operator==(const ProofTrace&, const ProofTrace&) = default;

private:
    std::vector<TraceStep> steps_;
};

/// One line per step: "TAG | statement | name=value, name=value".
std::string to_text(const ProofTrace& trace);

/// Array of {"tag", "statement", "witnesses": [{"name","kind","value"}]}.
/// Values are exact text forms; kind is natural | ratio | surd.
nlohmann::ordered_json to_json(const ProofTrace& trace);
nlohmann::ordered_json to_json(const ExactValue& v);

/// Inverse of to_json. Throws ParseError on unknown tags or kinds.
ProofTrace trace_from_json(const nlohmann::ordered_json& doc);
ExactValue exact_value_from_json(const nlohmann::ordered_json& doc);

}  // namespace dunamis
