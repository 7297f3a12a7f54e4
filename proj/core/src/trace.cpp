#include "dunamis/trace.hpp"

#include "dunamis/errors.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace dunamis {

namespace {

constexpr std::array<std::pair<Tag, std::string_view>, 9> kTagNames{{
    {Tag::VII_13, "VII.13"},
    {Tag::VII_20, "VII.20"},
    {Tag::VII_22, "VII.22"},
    {Tag::VII_24, "VII.24"},
    {Tag::X_9, "X.9"},
    {Tag::PropA, "PROP-A"},
    {Tag::PropAPrime, "PROP-A'"},
    {Tag::Integrality, "INTEGRALITY"},
    {Tag::Dichotomy, "DICHOTOMY"},
}};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string_view to_string(Tag tag) {
    for (const auto& [t, name] : kTagNames) {
        if (t == tag) return name;
    }
    return "?";
}

std::optional<Tag> parse_tag(std::string_view text) {
    for (const auto& [t, name] : kTagNames) {
        if (name == text) return t;
    }
    return std::nullopt;
}

std::string to_string(const ExactValue& v) {
    return std::visit([](const auto& x) { return x.to_string(); }, v);
}

ProofTrace& ProofTrace::add(Tag tag, std::string statement, std::vector<Witness> witnesses) {
    steps_.push_back({tag, std::move(statement), std::move(witnesses)});
    return *this;
}

bool ProofTrace::contains(Tag tag) const {
    return std::any_of(steps_.begin(), steps_.end(), [tag](const TraceStep& s) { return s.tag == tag; });
}

std::vector<Tag> ProofTrace::tags() const {
    std::vector<Tag> out;
    out.reserve(steps_.size());
    for (const auto& s : steps_) out.push_back(s.tag);
    return out;
}

bool ProofTrace::valid() const {
    if (steps_.empty()) return false;
    return std::all_of(steps_.begin(), steps_.end(), [](const TraceStep& s) {
        return !s.statement.empty() && parse_tag(to_string(s.tag)).has_value();
    });
}

std::string to_text(const ProofTrace& trace) {
    std::string out;
    for (const auto& step : trace.steps()) {
        out += to_string(step.tag);
        out += " | ";
        out += step.statement;
        out += " |";
        for (std::size_t i = 0; i < step.witnesses.size(); ++i) {
            out += (i == 0 ? " " : ", ");
            out += step.witnesses[i].name + "=" + to_string(step.witnesses[i].value);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json to_json(const ExactValue& v) {
    nlohmann::ordered_json j;
    j["kind"] = std::visit(overloaded{
                               [](const Natural&) { return "natural"; },
                               [](const Ratio&) { return "ratio"; },
                               [](const Surd&) { return "surd"; },
                           },
                           v);
    j["value"] = to_string(v);
    return j;
}

nlohmann::ordered_json to_json(const ProofTrace& trace) {
    auto steps = nlohmann::ordered_json::array();
    for (const auto& step : trace.steps()) {
        nlohmann::ordered_json s;
        s["tag"] = std::string(to_string(step.tag));
        s["statement"] = step.statement;
        auto ws = nlohmann::ordered_json::array();
        for (const auto& w : step.witnesses) {
            nlohmann::ordered_json wj;
            wj["name"] = w.name;
            auto vj = to_json(w.value);
            wj["kind"] = vj["kind"];
            wj["value"] = vj["value"];
            ws.push_back(std::move(wj));
        }
        s["witnesses"] = std::move(ws);
        steps.push_back(std::move(s));
    }
    return steps;
}

ExactValue exact_value_from_json(const nlohmann::ordered_json& doc) {
    try {
        const auto kind = doc.at("kind").get<std::string>();
        const auto value = doc.at("value").get<std::string>();
        if (kind == "natural") return Natural::parse(value);
        if (kind == "ratio") return Ratio::parse(value);
        if (kind == "surd") return Surd::parse(value);
        throw ParseError("unknown exact value kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed exact value: ") + e.what());
    }
}

ProofTrace trace_from_json(const nlohmann::ordered_json& doc) {
    ProofTrace trace;
    try {
        for (const auto& s : doc) {
            const auto tag_text = s.at("tag").get<std::string>();
            const auto tag = parse_tag(tag_text);
            if (!tag) throw ParseError("unknown trace tag '" + tag_text + "'");
            std::vector<Witness> ws;
            for (const auto& w : s.at("witnesses")) {
                ws.push_back({w.at("name").get<std::string>(), exact_value_from_json(w)});
            }
            trace.add(*tag, s.at("statement").get<std::string>(), std::move(ws));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed trace document: ") + e.what());
    }
    return trace;
}

}  // namespace dunamis
