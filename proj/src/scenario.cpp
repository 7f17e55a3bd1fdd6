#include "mma/scenario.hpp"

#include <fstream>
#include <sstream>

namespace mma {

using nlohmann::json;

ScenarioError::ScenarioError(Kind kind, const std::string& message, std::vector<Violation> violations)
    : std::runtime_error(message), kind_(kind), violations_(std::move(violations)) {}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw ScenarioError(ScenarioError::Kind::schema, "schema: " + what);
}

const json& require(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) schema_error(std::string("missing key '") + key + "'");
    return obj.at(key);
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) schema_error(where + " must be a string");
    return v.get<std::string>();
}

ArgSet parse_args(const json& v, const std::string& where) {
    if (!v.is_array()) schema_error(where + " must be an array of argument ids");
    ArgSet out;
    for (const auto& item : v) out.insert(ArgumentId(as_string(item, where)));
    return out;
}

AttackSet parse_attacks(const json& v, const std::string& where) {
    if (!v.is_array()) schema_error(where + " must be an array of [from, to] pairs");
    AttackSet out;
    for (const auto& item : v) {
        if (!item.is_array() || item.size() != 2) schema_error(where + " entries must be [from, to] pairs");
        out.insert({ArgumentId(as_string(item[0], where)), ArgumentId(as_string(item[1], where))});
    }
    return out;
}

Frame parse_frame(const json& v, const std::string& where) {
    if (!v.is_object()) schema_error(where + " must be an object with 'arguments' and 'attacks'");
    ArgSet args = v.contains("arguments") ? parse_args(v.at("arguments"), where + ".arguments") : ArgSet{};
    AttackSet attacks = v.contains("attacks") ? parse_attacks(v.at("attacks"), where + ".attacks") : AttackSet{};
    try {
        return Frame(std::move(args), std::move(attacks));
    } catch (const DomainError& e) {
        schema_error(where + ": " + e.what());
    }
}

json args_to_json(const ArgSet& s) {
    json out = json::array();
    for (const auto& a : s) out.push_back(a.str());
    return out;
}

json attacks_to_json(const AttackSet& r) {
    json out = json::array();
    for (const auto& [from, to] : r) out.push_back(json::array({from.str(), to.str()}));
    return out;
}

json frame_to_json(const Frame& f) {
    return json{{"arguments", args_to_json(f.args())}, {"attacks", attacks_to_json(f.attacks())}};
}

json extensions_to_json(const ExtensionSet& g) {
    json out = json::array();
    for (const auto& s : g) out.push_back(args_to_json(s));
    return out;
}

// {"viewer": {"subject": value}} matrices.
template <typename F>
void for_each_pair(const json& doc, const char* key, F&& f) {
    if (!doc.contains(key)) return;
    const json& m = doc.at(key);
    if (!m.is_object()) schema_error(std::string(key) + " must be an object keyed by viewer");
    for (const auto& [viewer, row] : m.items()) {
        if (!row.is_object()) schema_error(std::string(key) + "." + viewer + " must be an object keyed by subject");
        for (const auto& [subject, value] : row.items()) {
            f(AgentId(viewer), AgentId(subject), value, std::string(key) + "." + viewer + "." + subject);
        }
    }
}

template <typename V, typename F>
json pairs_to_json(const std::map<AgentPair, V>& m, F&& convert) {
    json out = json::object();
    for (const auto& [key, value] : m) out[key.first.str()][key.second.str()] = convert(value);
    return out;
}

AnnouncementEvent parse_event(const json& v, const std::string& where) {
    if (!v.is_object()) schema_error(where + " must be an object");
    AnnouncementEvent ev;
    if (v.contains("announcers")) {
        if (!v.at("announcers").is_array()) schema_error(where + ".announcers must be an array");
        for (const auto& a : v.at("announcers")) ev.announcers.insert(AgentId(as_string(a, where + ".announcers")));
    }
    ev.payload = parse_frame(v, where);
    return ev;
}

json event_to_json(const AnnouncementEvent& ev) {
    json out = frame_to_json(ev.payload);
    json who = json::array();
    for (const auto& e : ev.announcers) who.push_back(e.str());
    out["announcers"] = who;
    return out;
}

} // namespace

Scenario scenario_from_json(const json& doc) {
    if (!doc.is_object()) schema_error("document must be a JSON object");
    Scenario sc;
    MmaState& m = sc.initial;
    try {
        if (doc.contains("notes")) sc.notes = as_string(doc.at("notes"), "notes");

        const json& arguments = require(doc, "arguments");
        if (!arguments.is_array()) schema_error("arguments must be an array");
        ArgSet all_args;
        for (const auto& item : arguments) {
            if (!item.is_object()) schema_error("arguments entries must be objects");
            ArgumentId id(as_string(require(item, "id"), "arguments.id"));
            ArgumentInfo info;
            if (item.contains("owner")) info.owner = AgentId(as_string(item.at("owner"), "arguments.owner"));
            if (item.contains("label")) info.label = as_string(item.at("label"), "arguments.label");
            if (!all_args.insert(id).second) schema_error("duplicate argument '" + id.str() + "'");
            sc.arguments.emplace(id, std::move(info));
        }
        AttackSet global_attacks;
        if (doc.contains("global_attacks")) global_attacks = parse_attacks(doc.at("global_attacks"), "global_attacks");
        for (const auto& [from, to] : global_attacks) {
            if (!all_args.count(from) || !all_args.count(to)) {
                schema_error("global attack (" + from.str() + "," + to.str() + ") uses an undeclared argument");
            }
        }
        m.global = Frame(all_args, std::move(global_attacks));

        if (doc.contains("public")) m.pub = parse_frame(doc.at("public"), "public");

        const json& scopes = require(doc, "scopes");
        if (!scopes.is_object() || scopes.empty()) schema_error("scopes must be a nonempty object keyed by agent");
        for (const auto& [agent, args] : scopes.items()) {
            AgentId e(agent);
            m.agents.insert(e);
            m.scope.emplace(e, induced_scope(m.global, parse_args(args, "scopes." + agent)));
        }
        for (const auto& [id, info] : sc.arguments) {
            if (!info.owner) continue;
            const auto it = m.scope.find(*info.owner);
            if (it == m.scope.end() || !it->second.contains(id)) {
                schema_error("argument '" + id.str() + "' has owner " + info.owner->str() + " but is not in its scope");
            }
        }

        const json& awareness = require(doc, "awareness");
        if (!awareness.is_object()) schema_error("awareness must be an object keyed by agent");
        for (const auto& [agent, frame] : awareness.items()) {
            m.aware.emplace(AgentId(agent), parse_frame(frame, "awareness." + agent));
        }

        const json& gsem = require(doc, "gsem");
        if (gsem.is_string()) {
            const SemanticsKind uniform = parse_semantics_kind(gsem.get<std::string>());
            for (const auto& v : m.agents) {
                for (const auto& s : m.agents) m.sem_model[{v, s}] = uniform;
            }
        } else {
            for_each_pair(doc, "gsem", [&](AgentId v, AgentId s, const json& value, const std::string& where) {
                m.sem_model[{std::move(v), std::move(s)}] = parse_semantics_kind(as_string(value, where));
            });
        }

        for_each_pair(doc, "factual", [&](AgentId v, AgentId s, const json& value, const std::string& where) {
            m.factual[{std::move(v), std::move(s)}] = parse_args(value, where);
        });

        if (doc.contains("trust_bound")) {
            if (!doc.at("trust_bound").is_number_integer() || doc.at("trust_bound").get<Trust>() < 0) {
                schema_error("trust_bound must be a non-negative integer");
            }
            m.trust_bound = doc.at("trust_bound").get<Trust>();
        }
        for (const auto& v : m.agents) {
            for (const auto& s : m.agents) m.trust[{v, s}] = 0;
        }
        for_each_pair(doc, "trust", [&](AgentId v, AgentId s, const json& value, const std::string& where) {
            if (!value.is_number_integer()) schema_error(where + " must be an integer");
            m.trust[{std::move(v), std::move(s)}] = value.get<Trust>();
        });

        for_each_pair(doc, "omega_overrides", [&](AgentId v, AgentId s, const json& value, const std::string& where) {
            m.omega[{std::move(v), std::move(s)}] = parse_frame(value, where);
        });

        if (doc.contains("script")) {
            const json& script = doc.at("script");
            if (!script.is_array()) schema_error("script must be an array");
            for (std::size_t i = 0; i < script.size(); ++i) {
                const std::string where = "script[" + std::to_string(i) + "]";
                ScriptStep step{parse_event(script[i], where), {}};
                if (script[i].contains("note")) step.note = as_string(script[i].at("note"), where + ".note");
                sc.script.push_back(std::move(step));
            }
        }

        if (doc.contains("policy")) {
            const json& p = doc.at("policy");
            for (const char* key : {"honest", "dishonest"}) {
                if (!p.contains(key) || !p.at(key).is_number_integer() || p.at(key).get<Trust>() < 0) {
                    schema_error(std::string("policy.") + key + " must be a non-negative integer");
                }
            }
            sc.policy = TrustPolicy{p.at("honest").get<Trust>(), p.at("dishonest").get<Trust>()};
        }
    } catch (const DomainError& e) {
        schema_error(e.what());
    } catch (const json::exception& e) {
        schema_error(e.what());
    }

    if (auto violations = validate(m); !violations.empty()) {
        throw ScenarioError(ScenarioError::Kind::validation,
                            "initial state is not a valid multi-agent argumentation:\n" + format_violations(violations),
                            std::move(violations));
    }
    return sc;
}

Scenario load_scenario(std::istream& source) {
    json doc;
    try {
        doc = json::parse(source);
    } catch (const json::parse_error& e) {
        throw ScenarioError(ScenarioError::Kind::parse, std::string("parse: ") + e.what());
    }
    return scenario_from_json(doc);
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError(ScenarioError::Kind::parse, "cannot open '" + path + "'");
    return load_scenario(in);
}

json scenario_to_json(const Scenario& sc) {
    const MmaState& m = sc.initial;
    json doc = json::object();
    if (!sc.notes.empty()) doc["notes"] = sc.notes;

    json arguments = json::array();
    for (const auto& a : m.global.args()) {
        json item{{"id", a.str()}};
        if (const auto it = sc.arguments.find(a); it != sc.arguments.end()) {
            if (it->second.owner) item["owner"] = it->second.owner->str();
            if (!it->second.label.empty()) item["label"] = it->second.label;
        }
        arguments.push_back(std::move(item));
    }
    doc["arguments"] = std::move(arguments);
    doc["global_attacks"] = attacks_to_json(m.global.attacks());
    doc["public"] = frame_to_json(m.pub);

    json scopes = json::object();
    for (const auto& [e, f] : m.scope) scopes[e.str()] = args_to_json(f.args());
    doc["scopes"] = std::move(scopes);
    json awareness = json::object();
    for (const auto& [e, f] : m.aware) awareness[e.str()] = frame_to_json(f);
    doc["awareness"] = std::move(awareness);

    doc["gsem"] = pairs_to_json(m.sem_model, [](SemanticsKind k) { return to_string(k); });
    doc["factual"] = pairs_to_json(m.factual, args_to_json);
    doc["trust"] = pairs_to_json(m.trust, [](Trust t) { return t; });
    doc["trust_bound"] = m.trust_bound;
    doc["omega_overrides"] = pairs_to_json(m.omega, frame_to_json);

    json script = json::array();
    for (const auto& step : sc.script) {
        json item = event_to_json(step.event);
        if (!step.note.empty()) item["note"] = step.note;
        script.push_back(std::move(item));
    }
    doc["script"] = std::move(script);
    doc["policy"] = json{{"honest", sc.policy.delta_honest}, {"dishonest", sc.policy.delta_dishonest}};
    return doc;
}

Trace run(const Scenario& sc, const RunOptions& options) {
    Trace trace;
    trace.states.push_back(sc.initial);
    const std::size_t limit = options.max_steps ? std::min(*options.max_steps, sc.script.size()) : sc.script.size();
    for (std::size_t i = 0; i < limit; ++i) {
        const MmaState& current = trace.states.back();
        const ScriptStep& step = sc.script[i];
        if (auto violations = check_announcement(current, step.event); !violations.empty()) {
            trace.failure = RunFailure{i + 1, std::move(violations)};
            break;
        }
        const Transition t = announce(current, step.event);
        TraceStep rec;
        rec.index = i + 1;
        rec.event = step.event;
        rec.note = step.note;
        for (const auto& a : t.after.pub.args()) {
            if (!t.before.pub.contains(a)) rec.public_added_args.insert(a);
        }
        for (const auto& r : t.after.pub.attacks()) {
            if (!t.before.pub.attacks(r.from, r.to)) rec.public_added_attacks.insert(r);
        }
        for (const auto& a : t.after.global.args()) {
            if (!t.before.global.contains(a)) rec.global_added_args.insert(a);
        }
        for (const auto& r : t.after.global.attacks()) {
            if (!t.before.global.attacks(r.from, r.to)) rec.global_added_attacks.insert(r);
        }
        rec.detections = detection_matrix(t, options.exec);
        VerdictMatrix verdicts;
        for (const auto& [key, d] : rec.detections) verdicts.emplace(key, d.verdict);
        MmaState next = apply_verdicts(t.after, verdicts, sc.policy);
        rec.trust_before = t.before.trust;
        rec.trust_after = next.trust;
        if (options.with_semantics) {
            std::map<AgentId, ExtensionSet> sem;
            for (const auto& e : next.agents) sem.emplace(e, trust_adjusted_public_semantics(next, e));
            rec.trust_adjusted = std::move(sem);
        }
        trace.steps.push_back(std::move(rec));
        trace.states.push_back(std::move(next));
    }
    return trace;
}

json trace_to_json(const Scenario& sc, const Trace& trace) {
    json doc = json::object();
    doc["policy"] = json{{"honest", sc.policy.delta_honest}, {"dishonest", sc.policy.delta_dishonest}};
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json item = json::object();
        item["step"] = s.index;
        item["event"] = event_to_json(s.event);
        if (!s.note.empty()) item["note"] = s.note;
        item["public_added"] = json{{"arguments", args_to_json(s.public_added_args)},
                                    {"attacks", attacks_to_json(s.public_added_attacks)}};
        item["global_added"] = json{{"arguments", args_to_json(s.global_added_args)},
                                    {"attacks", attacks_to_json(s.global_added_attacks)}};
        item["detections"] = pairs_to_json(s.detections, [](const DetectionDetail& d) {
            return json{{"verdict", to_string(d.verdict)},
                        {"checked", args_to_json(d.checked)},
                        {"source", extensions_to_json(d.source)},
                        {"target", extensions_to_json(d.target)}};
        });
        item["trust_before"] = pairs_to_json(s.trust_before, [](Trust t) { return t; });
        item["trust_after"] = pairs_to_json(s.trust_after, [](Trust t) { return t; });
        if (s.trust_adjusted) {
            json sem = json::object();
            for (const auto& [e, g] : *s.trust_adjusted) sem[e.str()] = extensions_to_json(g);
            item["trust_adjusted_semantics"] = std::move(sem);
        }
        steps.push_back(std::move(item));
    }
    doc["steps"] = std::move(steps);
    const MmaState& last = trace.final_state();
    doc["final"] = json{{"public", frame_to_json(last.pub)},
                        {"global", frame_to_json(last.global)},
                        {"trust", pairs_to_json(last.trust, [](Trust t) { return t; })}};
    if (trace.failure) {
        json violations = json::array();
        for (const auto& v : trace.failure->violations) {
            violations.push_back(json{{"condition", v.condition}, {"detail", v.detail}});
        }
        doc["error"] = json{{"step", trace.failure->step}, {"violations", std::move(violations)}};
    }
    return doc;
}

std::string trace_to_table(const Trace& trace) {
    std::ostringstream os;
    for (const auto& s : trace.steps) {
        os << "step " << s.index;
        if (!s.event.announcers.empty()) {
            os << " by";
            for (const auto& e : s.event.announcers) os << ' ' << e.str();
        }
        os << ": " << format_set(s.event.payload.args()) << ' ' << format_attacks(s.event.payload.attacks());
        if (!s.note.empty()) os << "  # " << s.note;
        os << '\n';
        for (const auto& [key, d] : s.detections) {
            const Trust before = s.trust_before.at(key);
            const Trust after = s.trust_after.at(key);
            os << "  " << key.first.str() << " -> " << key.second.str() << "  " << to_string(d.verdict);
            if (!d.checked.empty()) {
                os << "  checked " << format_set(d.checked) << "  source " << format_extensions(d.source)
                   << "  target " << format_extensions(d.target);
            }
            os << "  trust " << before;
            if (after != before) os << " -> " << after;
            os << '\n';
        }
        if (s.trust_adjusted) {
            for (const auto& [e, g] : *s.trust_adjusted) {
                os << "  accepts(" << e.str() << ") " << format_extensions(g) << '\n';
            }
        }
    }
    if (trace.failure) {
        os << "step " << trace.failure->step << ": invalid announcement\n"
           << format_violations(trace.failure->violations);
    }
    return os.str();
}

MmaState state_at(const Scenario& sc, std::size_t step) {
    if (step > sc.script.size()) {
        throw DomainError("step " + std::to_string(step) + " exceeds script length " + std::to_string(sc.script.size()));
    }
    RunOptions options;
    options.max_steps = step;
    Trace trace = run(sc, options);
    if (trace.failure) throw InvalidAnnouncement(trace.failure->violations);
    return trace.final_state();
}

View parse_view(const std::string& text) {
    if (text == "public") return View::public_;
    if (text == "local") return View::local;
    if (text == "trust-adjusted" || text == "trust_adjusted") return View::trust_adjusted;
    throw DomainError("unknown view '" + text + "'");
}

ExtensionSet query(const MmaState& m, const AgentId& viewer, const AgentId& subject, View view,
                   std::optional<SemanticsKind> kind) {
    if (!m.agents.count(viewer)) throw DomainError("unknown agent '" + viewer.str() + "'");
    if (view != View::trust_adjusted && !m.agents.count(subject)) {
        throw DomainError("unknown agent '" + subject.str() + "'");
    }
    switch (view) {
    case View::public_:
        return kind ? semantics(*kind, public_model(m, viewer, subject))
                    : trust_neutral_public_semantics(m, viewer, subject);
    case View::local:
        return kind ? semantics(*kind, adjusted_perceived(m, viewer, subject))
                    : trust_neutral_local_semantics(m, viewer, subject);
    case View::trust_adjusted:
        return kind ? semantics(*kind, trust_adjusted_public_frame(m, viewer))
                    : trust_adjusted_public_semantics(m, viewer);
    }
    throw DomainError("unknown view");
}

} // namespace mma
