#include "braidcone/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace braidcone {

using nlohmann::json;

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> split_tokens(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

} // namespace

Poset parse_poset(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;

    int n = -1;
    bool named = false;
    std::vector<std::string> names;
    std::map<std::string, int> by_name;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> pair_lines;
    int header_line = 0;

    auto resolve = [&](const Token& t, int ln) -> int {
        if (named) {
            auto it = by_name.find(t.text);
            if (it == by_name.end())
                throw ParseError("unknown element '" + t.text + "'", ln, t.column);
            return it->second;
        }
        try {
            std::size_t pos = 0;
            int v = std::stoi(t.text, &pos);
            if (pos != t.text.size()) throw std::invalid_argument("");
            if (v < 1 || v > n)
                throw ParseError("element " + t.text + " outside 1.." + std::to_string(n), ln,
                                 t.column);
            return v - 1;
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("expected an element number, got '" + t.text + "'", ln, t.column);
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<Token> toks = split_tokens(line);
        if (toks.empty()) continue;

        if (n < 0) {
            if (toks[0].text == "poset") {
                if (toks.size() != 2)
                    throw ParseError("expected 'poset <n>'", lineno, toks[0].column);
                try {
                    n = std::stoi(toks[1].text);
                } catch (const std::exception&) {
                    throw ParseError("bad element count '" + toks[1].text + "'", lineno,
                                     toks[1].column);
                }
                if (n < 2) throw ParseError("a poset needs at least 2 elements", lineno, toks[1].column);
            } else if (toks[0].text == "elements") {
                if (toks.size() < 3)
                    throw ParseError("expected 'elements <name> <name> ...' with at least 2 names",
                                     lineno, toks[0].column);
                named = true;
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    if (!by_name.emplace(toks[i].text, static_cast<int>(i) - 1).second)
                        throw ParseError("duplicate element name '" + toks[i].text + "'", lineno,
                                         toks[i].column);
                    names.push_back(toks[i].text);
                }
                n = static_cast<int>(names.size());
            } else {
                throw ParseError("file must start with 'poset <n>' or 'elements ...'", lineno,
                                 toks[0].column);
            }
            header_line = lineno;
            continue;
        }

        if (toks.size() != 3 || toks[1].text != "<")
            throw ParseError("expected '<a> < <b>'", lineno, toks[0].column);
        int a = resolve(toks[0], lineno);
        int b = resolve(toks[2], lineno);
        pairs.emplace_back(a, b);
        pair_lines.push_back(lineno);
    }

    if (n < 0) throw ParseError("empty input; expected 'poset <n>' or 'elements ...'", 1, 1);

    // Incremental cycle detection so the diagnostic can point at the
    // line that closed the cycle.
    {
        std::vector<ElemSet> up(static_cast<std::size_t>(std::max(n, 0)));
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto [a, b] = pairs[i];
            if (a == b || up[static_cast<std::size_t>(b)].test(a))
                throw ParseError("relation creates a cycle", pair_lines[i], 1);
            up[static_cast<std::size_t>(a)].set(b);
            // close: everything below-or-equal a gains everything above-or-equal b
            for (int x = 0; x < n; ++x)
                if (x == a || up[static_cast<std::size_t>(x)].test(a)) {
                    up[static_cast<std::size_t>(x)].set(b);
                    up[static_cast<std::size_t>(x)] |= up[static_cast<std::size_t>(b)];
                }
            for (int x = 0; x < n; ++x)
                if (up[static_cast<std::size_t>(x)].test(x))
                    throw ParseError("relation creates a cycle", pair_lines[i], 1);
        }
    }

    try {
        return Poset::from_relations(n, pairs, std::move(names));
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(e.what(), header_line, 1);
    }
}

std::string emit_poset(const Poset& p) {
    std::ostringstream out;
    if (p.has_names()) {
        out << "elements";
        for (const std::string& s : p.names()) out << " " << s;
        out << "\n";
    } else {
        out << "poset " << p.size() << "\n";
    }
    for (auto [a, b] : p.covers()) out << p.name_of(a) << " < " << p.name_of(b) << "\n";
    return out.str();
}

namespace {

json json_int(const Int& v) {
    if (fits_int64(v)) return json(static_cast<std::int64_t>(v.get_si()));
    return json(to_string(v));
}

json set_names(const Poset& p, const ElemSet& s) {
    json a = json::array();
    s.for_each([&](int i) { a.push_back(p.name_of(i)); });
    return a;
}

json labeling_json(const Poset& p, const Labeling& l) {
    json m = json::object();
    for (int i = 0; i < p.size(); ++i) m[p.name_of(i)] = json_int(l.phi[static_cast<std::size_t>(i)]);
    return m;
}

json input_echo(const Poset& p) {
    json in = json::object();
    in["n"] = p.size();
    if (p.has_names()) in["names"] = p.names();
    json rel = json::array();
    for (auto [a, b] : p.covers()) rel.push_back(json::array({p.name_of(a), p.name_of(b)}));
    in["covers"] = rel;
    return in;
}

const char* verdict_str(Verdict v) {
    switch (v) {
    case Verdict::Gorenstein: return "gorenstein";
    case Verdict::QGorensteinOnly: return "q_gorenstein_only";
    default: return "not_q_gorenstein";
    }
}

const char* method_str(Method m) {
    switch (m) {
    case Method::Bounded: return "bounded";
    case Method::Fast: return "fast";
    case Method::Brute: return "brute";
    default: return "blocks";
    }
}

json stage_json(const Poset& p, const QuotientStage& st) {
    json s = json::object();
    s["iteration"] = st.iteration;
    s["dualized"] = st.dualized;
    json classes = json::array();
    for (const ElemSet& cls : st.classes) classes.push_back(set_names(p, cls));
    s["classes"] = classes;
    json covers = json::array();
    for (auto [a, b] : st.covers) covers.push_back(json::array({a, b}));
    s["covers"] = covers;
    return s;
}

// A stage-level set rendered through the stage classes: the union of
// original-element names it stands for.
json stage_set_names(const Poset& p, const QuotientStage& st, const ElemSet& stage_set) {
    ElemSet flat;
    stage_set.for_each([&](int cls) { flat |= st.classes[static_cast<std::size_t>(cls)]; });
    return set_names(p, flat);
}

json witness_json(const Poset& p, const Witness& w) {
    json out = json::object();
    if (std::holds_alternative<InconsistentPairWitness>(w)) {
        const auto& iw = std::get<InconsistentPairWitness>(w);
        out["kind"] = "inconsistent_constraints";
        out["upsets"] = json::array({set_names(p, iw.a), set_names(p, iw.b)});
    } else if (std::holds_alternative<NonIntegralWitness>(w)) {
        const auto& nw = std::get<NonIntegralWitness>(w);
        out["kind"] = "non_integral_solution";
        json sol = json::object();
        for (int i = 0; i < p.size(); ++i)
            sol[p.name_of(i)] = to_string(nw.solution[static_cast<std::size_t>(i)]);
        out["solution"] = sol;
    } else if (std::holds_alternative<MSetCycleWitness>(w)) {
        const auto& mw = std::get<MSetCycleWitness>(w);
        out["kind"] = "m_set_cycle";
        out["stage"] = stage_json(p, mw.stage);
        json cyc = json::array();
        for (auto [a, b] : mw.cycle_edges)
            cyc.push_back(json::array({stage_set_names(p, mw.stage, ElemSet::single(a)),
                                       stage_set_names(p, mw.stage, ElemSet::single(b))}));
        out["cycle"] = cyc;
    } else if (std::holds_alternative<TdcViolationWitness>(w)) {
        const auto& tw = std::get<TdcViolationWitness>(w);
        out["kind"] = "tree_downset_violation";
        out["stage"] = stage_json(p, tw.stage);
        out["s"] = stage_set_names(p, tw.stage, tw.tdc.s);
        out["excluded_tree"] = stage_set_names(p, tw.stage, tw.tdc.excluded_tree);
        out["downset"] = stage_set_names(p, tw.stage, tw.tdc.a_j);
        out["expected_components"] = tw.tdc.expected_m;
        out["found_components"] = tw.tdc.found_cc;
    }
    return out;
}

std::string labeling_text(const Poset& p, const Labeling& l) {
    std::ostringstream out;
    for (int i = 0; i < p.size(); ++i) {
        if (i) out << "  ";
        out << p.name_of(i) << ":" << to_string(l.phi[static_cast<std::size_t>(i)]);
    }
    return out.str();
}

std::string set_text(const Poset& p, const ElemSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ",";
        out += p.name_of(i);
        first = false;
    });
    return out + "}";
}

} // namespace

std::string emit_certificate(const Poset& p, const GorensteinCertificate& cert, Format f,
                             std::optional<double> wall_seconds) {
    if (f == Format::Json) {
        json j = json::object();
        j["input"] = input_echo(p);
        j["verdict"] = verdict_str(cert.verdict);
        j["gorenstein"] = cert.verdict == Verdict::Gorenstein;
        j["q_gorenstein"] = cert.q_gorenstein();
        j["crepant"] = cert.crepant;
        j["method"] = method_str(cert.method);
        if (cert.index) j["index"] = json_int(*cert.index);
        if (cert.labeling) j["labeling"] = labeling_json(p, *cert.labeling);
        if (!std::holds_alternative<std::monostate>(cert.witness))
            j["witness"] = witness_json(p, cert.witness);
        if (wall_seconds) j["meta"] = json::object({{"wall_seconds", *wall_seconds}});
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    switch (cert.verdict) {
    case Verdict::Gorenstein: out << "Gorenstein (index 1)\n"; break;
    case Verdict::QGorensteinOnly:
        out << "Q-Gorenstein only, index " << to_string(*cert.index) << "\n";
        break;
    default: out << "not Q-Gorenstein\n"; break;
    }
    out << "crepant resolution: " << (cert.crepant ? "yes" : "no") << "\n";
    out << "method: " << method_str(cert.method) << "\n";
    if (cert.labeling) out << "labeling: " << labeling_text(p, *cert.labeling) << "\n";
    if (!std::holds_alternative<std::monostate>(cert.witness))
        out << "witness: " << witness_json(p, cert.witness).dump() << "\n";
    if (wall_seconds) out << "wall time: " << *wall_seconds << " s\n";
    return out.str();
}

std::string emit_crepant(const Poset& p, const CrepantResult& r, Format f) {
    if (f == Format::Json) {
        json j = json::object();
        j["input"] = input_echo(p);
        j["crepant"] = r.crepant;
        if (r.labeling) j["labeling"] = labeling_json(p, *r.labeling);
        if (r.violation)
            j["violation"] =
                json::array({set_names(p, r.violation->first), set_names(p, r.violation->second)});
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "crepant: " << (r.crepant ? "yes" : "no") << "\n";
    if (r.labeling) out << "labeling: " << labeling_text(p, *r.labeling) << "\n";
    if (r.violation)
        out << "violating upsets: " << set_text(p, r.violation->first) << " vs "
            << set_text(p, r.violation->second) << "\n";
    return out.str();
}

std::string emit_rays(const Poset& p, const RaySet& r, Format f) {
    if (f == Format::Json) {
        json j = json::object();
        j["input"] = input_echo(p);
        json cone = json::array(), fan = json::array();
        for (const SubsetWithDim& s : r.cone_rays) cone.push_back(set_names(p, s.members));
        for (const SubsetWithDim& s : r.fan_rays) {
            json e = json::object();
            e["upset"] = set_names(p, s.members);
            e["dim"] = s.dim;
            fan.push_back(e);
        }
        j["cone_rays"] = cone;
        j["fan_rays"] = fan;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "cone rays (" << r.cone_rays.size() << "):";
    for (const SubsetWithDim& s : r.cone_rays) out << " " << set_text(p, s.members);
    out << "\nfan rays (" << r.fan_rays.size() << "):";
    for (const SubsetWithDim& s : r.fan_rays)
        out << " " << set_text(p, s.members) << "(dim " << s.dim << ")";
    out << "\n";
    return out.str();
}

std::string emit_mobius(const Poset& p, const MobiusTable& t, Format f) {
    if (f == Format::Json) {
        json j = json::object();
        j["input"] = input_echo(p);
        j["mu_hat0"] = json_int(t.mu_hat0);
        json m = json::object();
        for (int i = 0; i < p.size(); ++i) m[p.name_of(i)] = json_int(t.mu[static_cast<std::size_t>(i)]);
        j["mu"] = m;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "mu(0-hat) = 1\n";
    for (int i = 0; i < p.size(); ++i)
        out << "mu(" << p.name_of(i) << ") = " << to_string(t.mu[static_cast<std::size_t>(i)]) << "\n";
    return out.str();
}

std::string emit_quotients(const Poset& p, const std::vector<QuotientPoset>& steps, Format f) {
    if (f == Format::Json) {
        json j = json::object();
        j["input"] = input_echo(p);
        json arr = json::array();
        for (const QuotientPoset& q : steps) {
            json s = json::object();
            s["n"] = q.order.size();
            json names = json::array();
            for (int i = 0; i < q.order.size(); ++i) names.push_back(q.order.name_of(i));
            s["class_names"] = names;
            json covers = json::array();
            for (auto [a, b] : q.order.covers())
                covers.push_back(json::array({q.order.name_of(a), q.order.name_of(b)}));
            s["covers"] = covers;
            arr.push_back(s);
        }
        j["quotients"] = arr;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const QuotientPoset& q = steps[i];
        out << "step " << (i + 1) << ": " << q.order.size() << " classes\n";
        for (auto [a, b] : q.order.covers())
            out << "  " << q.order.name_of(a) << " < " << q.order.name_of(b) << "\n";
    }
    return out.str();
}

std::string emit_smooth(const Poset& p, bool smooth, Format f) {
    if (f == Format::Json) {
        json j = json::object();
        j["input"] = input_echo(p);
        j["smooth"] = smooth;
        return j.dump(2) + "\n";
    }
    return std::string("smooth: ") + (smooth ? "yes" : "no") + "\n";
}

std::string emit_report(const SweepReport& rep, Format f, bool timings) {
    if (f == Format::Json) {
        json j = json::object();
        j["mode"] = rep.mode;
        j["max_n"] = rep.max_n;
        j["dedup"] = rep.dedup;
        json per = json::object();
        for (const auto& [n, c] : rep.per_n) {
            json e = json::object();
            e["total"] = c.total;
            e["gorenstein"] = c.gorenstein;
            e["q_gorenstein_only"] = c.q_gorenstein_only;
            e["not_q_gorenstein"] = c.not_q_gorenstein;
            e["crepant"] = c.crepant;
            per[std::to_string(n)] = e;
        }
        j["per_n"] = per;
        json ces = json::array();
        for (const SweepCounterexample& ce : rep.counterexamples) {
            json e = json::object();
            e["n"] = ce.n;
            json rel = json::array();
            for (auto [a, b] : ce.relations) rel.push_back(json::array({a + 1, b + 1}));
            e["relations"] = rel;
            e["kind"] = ce.kind;
            e["detail"] = ce.detail;
            ces.push_back(e);
        }
        j["counterexamples"] = ces;
        if (timings) {
            json t = json::object();
            for (const auto& [n, s] : rep.wall_seconds) t[std::to_string(n)] = s;
            j["meta"] = json::object({{"wall_seconds", t}});
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << rep.mode << " up to n = " << rep.max_n << (rep.dedup ? " (up to isomorphism)" : "") << "\n";
    out << "   n      total Gorenstein  Q-only   not-Q-G  crepant\n";
    for (const auto& [n, c] : rep.per_n) {
        out << "  " << n << "  " << c.total << "  " << c.gorenstein << "  " << c.q_gorenstein_only
            << "  " << c.not_q_gorenstein << "  " << c.crepant;
        if (timings) out << "   (" << rep.wall_seconds.at(n) << " s)";
        out << "\n";
    }
    out << "counterexamples: " << rep.counterexamples.size() << "\n";
    for (const SweepCounterexample& ce : rep.counterexamples) {
        out << "  n=" << ce.n << " " << ce.kind << " " << ce.detail << " relations:";
        for (auto [a, b] : ce.relations) out << " " << (a + 1) << "<" << (b + 1);
        out << "\n";
    }
    return out.str();
}

std::string export_hasse(const Poset& p, const std::optional<Labeling>& labeling) {
    // Rank elements by height so the layout mirrors the Hasse diagram.
    std::vector<int> height(static_cast<std::size_t>(p.size()), 0);
    std::vector<int> order(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = p.down(a).count(), cb = p.down(b).count();
        return ca != cb ? ca < cb : a < b;
    });
    int max_h = 0;
    for (int x : order) {
        p.down(x).for_each([&](int y) {
            height[static_cast<std::size_t>(x)] =
                std::max(height[static_cast<std::size_t>(x)], height[static_cast<std::size_t>(y)] + 1);
        });
        max_h = std::max(max_h, height[static_cast<std::size_t>(x)]);
    }

    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n";
    for (int i = 0; i < p.size(); ++i) {
        out << "  v" << i << " [label=\"" << p.name_of(i);
        if (labeling) {
            const Int& v = labeling->phi[static_cast<std::size_t>(i)];
            out << " (" << (v > 0 ? "+" : "") << to_string(v) << ")";
        }
        out << "\"];\n";
    }
    for (int h = 0; h <= max_h; ++h) {
        out << "  { rank=same;";
        for (int i = 0; i < p.size(); ++i)
            if (height[static_cast<std::size_t>(i)] == h) out << " v" << i << ";";
        out << " }\n";
    }
    for (auto [a, b] : p.covers()) out << "  v" << a << " -> v" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace braidcone
