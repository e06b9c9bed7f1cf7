#include "hairpin/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hairpin {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

class Reader {
public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw InputError(source_ + ": " + field + ": " + what);
    }

    const json& member(const json& obj, const std::string& field, const std::string& key) const {
        if (!obj.is_object()) fail(field, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end()) fail(field, "missing key \"" + key + "\"");
        return *it;
    }

    long integer(const json& v, const std::string& field) const {
        if (!v.is_number_integer()) fail(field, "expected an integer");
        return v.get<long>();
    }

    State state(const json& v, const std::string& field, std::size_t states) const {
        const long s = integer(v, field);
        if (s < 0 || static_cast<std::size_t>(s) >= states) {
            fail(field, "state " + std::to_string(s) + " outside [0, " + std::to_string(states) + ")");
        }
        return static_cast<State>(s);
    }

    Letter letter(const json& v, const std::string& field, const InvolutiveAlphabet& sigma) const {
        if (!v.is_string()) fail(field, "expected a letter token");
        auto a = sigma.find(v.get<std::string>());
        if (!a) fail(field, "undeclared letter '" + v.get<std::string>() + "'");
        return *a;
    }

    std::vector<State> state_list(const json& v, const std::string& field, std::size_t states) const {
        if (!v.is_array()) fail(field, "expected an array of states");
        std::vector<State> out;
        for (std::size_t i = 0; i < v.size(); ++i) out.push_back(state(v[i], field + "[" + std::to_string(i) + "]", states));
        return out;
    }

    std::size_t state_count(const json& rec, const std::string& field) const {
        const long n = integer(member(rec, field, "states"), field + ".states");
        if (n < 1) fail(field + ".states", "at least one state is required");
        return static_cast<std::size_t>(n);
    }

    InvolutiveAlphabet alphabet(const json& doc) const {
        const json& pairs = member(doc, "alphabet", "alphabet");
        if (!pairs.is_array()) fail("alphabet", "expected a list of [letter, partner] pairs");
        std::vector<std::pair<std::string, std::string>> out;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const json& p = pairs[i];
            const std::string field = "alphabet[" + std::to_string(i) + "]";
            if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
                fail(field, "expected a pair of letter tokens");
            }
            out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
        try {
            return InvolutiveAlphabet::from_pairs(out);
        } catch (const Error& e) {
            fail("alphabet", e.what());
        }
    }

    Dfa dfa(const json& rec, const std::string& field, const InvolutiveAlphabet& sigma,
            std::vector<std::string>& notes) const {
        const std::size_t n = state_count(rec, field);
        const State initial = state(member(rec, field, "initial"), field + ".initial", n);
        std::vector<bool> finals(n, false);
        for (State f : state_list(member(rec, field, "finals"), field + ".finals", n)) finals[f] = true;
        std::vector<State> delta(n * sigma.size(), no_state);
        const json& tr = member(rec, field, "transitions");
        if (!tr.is_array()) fail(field + ".transitions", "expected an array of [from, letter, to]");
        for (std::size_t i = 0; i < tr.size(); ++i) {
            const std::string f = field + ".transitions[" + std::to_string(i) + "]";
            if (!tr[i].is_array() || tr[i].size() != 3) fail(f, "expected [from, letter, to]");
            const State from = state(tr[i][0], f, n);
            const Letter a = letter(tr[i][1], f, sigma);
            const State to = state(tr[i][2], f, n);
            State& slot = delta[from * sigma.size() + a];
            if (slot != no_state) fail(f, "second transition for state " + std::to_string(from) + " on '" + sigma.token(a) + "'");
            slot = to;
        }
        bool added = false;
        Dfa d = complete_dfa(sigma, n, initial, std::move(finals), std::move(delta), &added);
        if (added) notes.push_back(field + ": partial transition table completed with sink state " + std::to_string(n));
        return d;
    }

    Nfa nfa(const json& rec, const std::string& field, const InvolutiveAlphabet& sigma) const {
        const std::size_t n = state_count(rec, field);
        auto initials = state_list(member(rec, field, "initials"), field + ".initials", n);
        auto finals = state_list(member(rec, field, "finals"), field + ".finals", n);
        std::vector<Arc> arcs;
        const json& tr = member(rec, field, "transitions");
        if (!tr.is_array()) fail(field + ".transitions", "expected an array of [from, letter, to]");
        for (std::size_t i = 0; i < tr.size(); ++i) {
            const std::string f = field + ".transitions[" + std::to_string(i) + "]";
            if (!tr[i].is_array() || tr[i].size() != 3) fail(f, "expected [from, letter, to]");
            arcs.push_back({state(tr[i][0], f, n), letter(tr[i][1], f, sigma), state(tr[i][2], f, n)});
        }
        std::sort(initials.begin(), initials.end());
        initials.erase(std::unique(initials.begin(), initials.end()), initials.end());
        std::sort(finals.begin(), finals.end());
        finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
        try {
            return Nfa(sigma, n, std::move(initials), std::move(finals), std::move(arcs));
        } catch (const Error& e) {
            fail(field, e.what());
        }
    }

private:
    std::string source_;
};

ordered_json dfa_json(const Dfa& d) {
    ordered_json rec;
    rec["states"] = d.size();
    rec["initial"] = d.initial();
    rec["finals"] = d.finals();
    ordered_json tr = ordered_json::array();
    const auto& sigma = d.alphabet();
    for (State q = 0; q < d.size(); ++q) {
        for (std::size_t a = 0; a < sigma.size(); ++a) {
            tr.push_back({q, sigma.token(static_cast<Letter>(a)), d.next(q, static_cast<Letter>(a))});
        }
    }
    rec["transitions"] = std::move(tr);
    return rec;
}

}  // namespace

ParsedInstance parse_instance_text(const std::string& text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(source + ": malformed JSON at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                         e.what());
    }
    Reader r(source);
    if (!doc.is_object()) r.fail("<document>", "expected a JSON object");
    ParsedInstance out;
    const InvolutiveAlphabet sigma = r.alphabet(doc);
    const long kappa = r.integer(r.member(doc, "kappa", "kappa"), "kappa");
    if (kappa < 1) r.fail("kappa", "kappa must be at least 1, got " + std::to_string(kappa));
    Dfa d1 = r.dfa(r.member(doc, "dfa_L1", "dfa_L1"), "dfa_L1", sigma, out.notes);
    Dfa d2;
    const bool has_dfa = doc.contains("dfa_ovL2"), has_nfa = doc.contains("nfa_L2");
    if (has_dfa && has_nfa) r.fail("dfa_ovL2", "give at most one of dfa_ovL2 and nfa_L2");
    if (has_dfa) {
        d2 = r.dfa(doc["dfa_ovL2"], "dfa_ovL2", sigma, out.notes);
    } else if (has_nfa) {
        d2 = determinize(reverse_complement_acceptor(r.nfa(doc["nfa_L2"], "nfa_L2", sigma)));
        out.notes.push_back("nfa_L2: converted to a " + std::to_string(d2.size()) + "-state DFA for ov(L2)");
    } else {
        d2 = Dfa::empty_language(sigma);
        out.notes.push_back("no L2 section: L2 is empty");
    }
    try {
        out.instance = make_instance(static_cast<int>(kappa), std::move(d1), std::move(d2));
    } catch (const Error& e) {
        r.fail("<instance>", e.what());
    }
    return out;
}

ParsedInstance parse_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str(), path);
}

std::string serialize_instance(const HairpinInstance& inst) {
    ordered_json doc;
    ordered_json pairs = ordered_json::array();
    for (const auto& [x, y] : inst.alphabet.pairs()) pairs.push_back({x, y});
    doc["alphabet"] = std::move(pairs);
    doc["kappa"] = inst.kappa;
    doc["dfa_L1"] = dfa_json(inst.dfa1);
    doc["dfa_ovL2"] = dfa_json(inst.dfa2);
    return doc.dump(2) + "\n";
}

}  // namespace hairpin
