#include "qhammer/labels.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace qhammer {

namespace {

constexpr std::array<std::string_view, 10> kSingleQubitGates = {
    "p", "rz", "rx", "ry", "sx", "sxdg", "y", "u", "h", "x"};

bool is_single_qubit_gate(std::string_view g) {
    return std::find(kSingleQubitGates.begin(), kSingleQubitGates.end(), g) !=
           kSingleQubitGates.end();
}

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    void skip_spaces() {
        while (!done() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool consume_word(std::string_view w) {
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string &msg) const { throw LabelParseError(msg, pos); }

    void expect(char c, const std::string &what) {
        if (!consume(c))
            fail("expected '" + std::string(1, c) + "' " + what);
    }

    std::string word() {
        std::size_t start = pos;
        while (!done() && std::isalpha(static_cast<unsigned char>(text[pos])))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    std::uint64_t number(const std::string &what) {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected " + what);
        std::uint64_t v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v > 0xFFFFFFFFull)
                fail(what + " out of range");
            ++pos;
        }
        return v;
    }
};

ConfigKind parse_config(Scanner &s) {
    std::size_t at = s.pos;
    if (s.consume_word("302H"))
        return ConfigKind::Thirty2H;
    if (s.consume_word("301H"))
        return ConfigKind::Thirty1H;
    if (s.consume_word("30"))
        return ConfigKind::Thirty;
    if (s.consume('4')) {
        s.skip_spaces();
        if (s.consume_word("cross"))
            return ConfigKind::Cross4;
        throw LabelParseError("unknown config token", at);
    }
    if (s.consume_word("6"))
        return ConfigKind::Six;
    throw LabelParseError("unknown config token", at);
}

} // namespace

LabelParseError::LabelParseError(const std::string &msg, std::size_t offset)
    : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset(offset) {}

std::string_view config_token(ConfigKind config) {
    switch (config) {
    case ConfigKind::Thirty: return "30";
    case ConfigKind::Thirty1H: return "301H";
    case ConfigKind::Thirty2H: return "302H";
    case ConfigKind::Cross4: return "4 cross";
    case ConfigKind::Six: return "6";
    case ConfigKind::Control:
        throw std::invalid_argument("control labels carry no config token");
    }
    throw std::logic_error("unreachable config kind");
}

ExperimentLabel parse_label(std::string_view text) {
    Scanner s{text};
    ExperimentLabel label;

    s.skip_spaces();
    if (s.consume('-'))
        label.neighbor_prep_one = true;

    std::size_t gate_at = s.pos;
    std::string gate = s.word();
    if (gate.empty())
        s.fail("expected gate name");

    if (gate == "Precision") {
        if (label.neighbor_prep_one)
            throw LabelParseError("control labels take no preparation flag", gate_at);
        label.gate = gate;
        label.config = ConfigKind::Control;
        s.expect('(', "after gate name");
        label.center = static_cast<QubitId>(s.number("centre qubit id"));
        s.expect(')', "after centre");
        s.skip_spaces();
        if (!s.done())
            s.fail("trailing input after control label");
        return label;
    }

    if (!is_single_qubit_gate(gate) && gate != "cx")
        throw LabelParseError("unknown gate '" + gate + "'", gate_at);
    label.gate = gate;

    s.expect('(', "after gate name");
    if (s.consume('-'))
        label.target_prep_one = true;
    label.center = static_cast<QubitId>(s.number("centre qubit id"));
    s.expect('-', "between centre and extra-set count");
    label.extra_sets = static_cast<std::uint32_t>(s.number("extra-set count"));
    s.expect(')', "after extra-set count");
    s.skip_spaces();

    std::size_t config_at = s.pos;
    label.config = parse_config(s);
    s.skip_spaces();
    if (!s.done())
        s.fail("trailing input after config token");

    bool needs_cx = label.config == ConfigKind::Thirty || label.config == ConfigKind::Thirty1H ||
                    label.config == ConfigKind::Thirty2H || label.config == ConfigKind::Cross4;
    if (needs_cx && gate != "cx")
        throw LabelParseError("config '" + std::string(config_token(label.config)) +
                                  "' requires gate cx",
                              config_at);
    if (label.config == ConfigKind::Six && gate == "cx")
        throw LabelParseError("config '6' requires a single-qubit gate", config_at);

    return label;
}

std::string format_label(const ExperimentLabel &label) {
    if (label.config == ConfigKind::Control)
        return "Precision(" + std::to_string(label.center) + ")";

    std::string out;
    if (label.neighbor_prep_one)
        out += '-';
    out += label.gate;
    out += '(';
    if (label.target_prep_one)
        out += '-';
    out += std::to_string(label.center);
    out += '-';
    out += std::to_string(label.extra_sets);
    out += ") ";
    out += config_token(label.config);
    return out;
}

} // namespace qhammer
