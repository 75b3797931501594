#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "omegat/cca.hpp"
#include "omegat/error.hpp"

namespace omegat::cca {

namespace {

using json = nlohmann::ordered_json;

std::string label_text(const Label& l) { return l ? std::string(1, *l) : "eps"; }

std::vector<std::size_t> sorted_states(const CCA& a) {
  std::vector<std::size_t> order(a.num_states());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a.name(x) < a.name(y); });
  return order;
}

std::vector<Transition> sorted_transitions(const CCA& a) {
  std::vector<Transition> ts = a.transitions();
  auto key = [&](const Transition& t) {
    return std::make_tuple(a.name(t.from), t.label ? int(*t.label) : -1, a.name(t.to), t.counter,
                           static_cast<int>(t.op));
  };
  std::sort(ts.begin(), ts.end(),
            [&](const Transition& x, const Transition& y) { return key(x) < key(y); });
  return ts;
}

Op op_from(const std::string& s) {
  if (s == "no_op") return Op::no_op;
  if (s == "inc") return Op::inc;
  if (s == "check") return Op::check;
  throw FormatError("unknown op '" + s + "'");
}

std::string to_json(const CCA& a) {
  json j;
  j["states"] = json::array();
  for (auto s : sorted_states(a)) j["states"].push_back(a.name(s));
  j["alphabet"] = json::array();
  for (char c : a.alphabet()) j["alphabet"].push_back(std::string(1, c));
  j["initial"] = a.num_states() ? json(a.name(a.initial())) : json(nullptr);
  j["final"] = a.final_state() ? json(a.name(*a.final_state())) : json(nullptr);
  j["counters"] = a.counters();
  j["transitions"] = json::array();
  for (const auto& t : sorted_transitions(a)) {
    j["transitions"].push_back(json{{"from", a.name(t.from)},
                                    {"label", label_text(t.label)},
                                    {"to", a.name(t.to)},
                                    {"counter", t.counter},
                                    {"op", std::string(to_string(t.op))}});
  }
  return j.dump(2) + "\n";
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string to_dot(const CCA& a) {
  std::ostringstream os;
  os << "digraph cca {\n  rankdir=LR;\n";
  for (auto s : sorted_states(a)) {
    os << "  " << dot_quote(a.name(s)) << " [shape="
       << (a.final_state() == static_cast<StateId>(s) ? "doublecircle" : "circle");
    if (a.initial() == s) os << ", style=bold";
    os << "];\n";
  }
  for (const auto& t : sorted_transitions(a)) {
    const std::string label = (t.label ? std::string(1, *t.label) : std::string("ε")) + "/" +
                              std::to_string(t.counter) + ":" + std::string(to_string(t.op));
    os << "  " << dot_quote(a.name(t.from)) << " -> " << dot_quote(a.name(t.to))
       << " [label=" << dot_quote(label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_automaton(const CCA& a, Format format) {
  return format == Format::json ? to_json(a) : to_dot(a);
}

CCA import_automaton(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    Alphabet alphabet;
    for (const auto& l : j.at("alphabet")) {
      const auto s = l.get<std::string>();
      if (s.size() != 1) throw FormatError("alphabet entries must be single letters");
      alphabet.insert(s[0]);
    }
    const auto counters = j.at("counters").get<std::uint32_t>();
    CCA a(std::move(alphabet), counters);
    auto state = [&](const json& v) {
      const auto name = v.get<std::string>();
      auto id = a.find(name);
      if (!id) throw FormatError("unknown state '" + name + "'");
      return *id;
    };
    for (const auto& s : j.at("states")) a.add_state(s.get<std::string>());
    if (!j.at("initial").is_null()) a.set_initial(state(j.at("initial")));
    if (j.contains("final") && !j.at("final").is_null()) a.set_final(state(j.at("final")));
    for (const auto& t : j.at("transitions")) {
      const auto label = t.at("label").get<std::string>();
      Label l;
      if (label != "eps") {
        if (label.size() != 1) throw FormatError("bad transition label '" + label + "'");
        l = label[0];
      }
      a.add_transition(state(t.at("from")), l, state(t.at("to")),
                       t.at("counter").get<std::uint32_t>(), op_from(t.at("op").get<std::string>()));
    }
    return a;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed automaton: ") + e.what());
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("invalid automaton: ") + e.what());
  }
}

}  // namespace omegat::cca
