#include "twpa/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <queue>
#include <set>
#include <sstream>

#include "twpa/errors.hpp"

namespace twpa {

namespace {

bool is_ground(const std::string& node) { return node == "0"; }

}  // namespace

Netlist::Netlist(std::vector<Component> components) : components_(std::move(components)) {
    int next = 0;
    for (const Component& c : components_) {
        if (c.kind == ComponentKind::MutualCoupling) continue;
        for (const std::string& node : c.nodes) {
            if (!is_ground(node) && node_index_.insert({node, next}).second) ++next;
        }
    }
    for (const Component& c : components_) {
        if (c.kind == ComponentKind::Port) ports_.push_back(c);
    }
    std::sort(ports_.begin(), ports_.end(),
              [](const Component& a, const Component& b) { return a.port_number < b.port_number; });
    validate();
}

const Component* Netlist::find(const std::string& name) const {
    for (const Component& c : components_) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

void Netlist::validate() const {
    if (components_.empty()) throw SemanticError("empty netlist");

    std::set<std::string> names;
    std::set<std::string> inductor_names;
    bool touches_ground = false;
    for (const Component& c : components_) {
        if (c.name.empty()) throw SemanticError("component with empty name");
        if (!names.insert(c.name).second) throw SemanticError("duplicate component name " + c.name);
        if (c.kind == ComponentKind::Inductor) inductor_names.insert(c.name);
        if (c.kind == ComponentKind::MutualCoupling) {
            if (!(std::abs(c.value) <= 1.0))
                throw SemanticError("mutual " + c.name + ": |k| must be <= 1");
        } else {
            if (c.nodes[0].empty() || c.nodes[1].empty())
                throw SemanticError("component " + c.name + ": empty node identifier");
            if (c.nodes[0] == c.nodes[1])
                throw SemanticError("component " + c.name + ": both terminals on node " +
                                    c.nodes[0]);
            if (!(c.value > 0.0))
                throw SemanticError("component " + c.name + ": value must be positive");
            if (is_ground(c.nodes[0]) || is_ground(c.nodes[1])) touches_ground = true;
        }
    }
    for (const Component& c : components_) {
        if (c.kind != ComponentKind::MutualCoupling) continue;
        for (const std::string& ref : c.nodes) {
            if (inductor_names.find(ref) == inductor_names.end())
                throw SemanticError("mutual " + c.name + " references missing inductor " + ref);
        }
    }
    if (ports_.empty()) throw SemanticError("netlist has no port");
    if (!touches_ground) throw SemanticError("netlist does not touch ground node 0");

    // Connectivity: every node reachable from ground through two-terminal
    // elements (mutuals are couplings, not connections).
    std::map<std::string, std::vector<std::string>> adj;
    for (const Component& c : components_) {
        if (c.kind == ComponentKind::MutualCoupling) continue;
        adj[c.nodes[0]].push_back(c.nodes[1]);
        adj[c.nodes[1]].push_back(c.nodes[0]);
    }
    std::set<std::string> seen;
    std::queue<std::string> frontier;
    frontier.push("0");
    seen.insert("0");
    while (!frontier.empty()) {
        std::string u = frontier.front();
        frontier.pop();
        for (const std::string& v : adj[u]) {
            if (seen.insert(v).second) frontier.push(v);
        }
    }
    for (const auto& [node, idx] : node_index_) {
        (void)idx;
        if (seen.find(node) == seen.end())
            throw SemanticError("node " + node + " not connected to ground");
    }
}

double parse_value(const std::string& token, int line) {
    if (token.empty()) throw SyntaxError(line, "empty value");
    std::string body = token;
    double scale = 1.0;
    char last = body.back();
    if (std::isalpha(static_cast<unsigned char>(last))) {
        switch (last) {
            case 'f': scale = 1e-15; break;
            case 'p': scale = 1e-12; break;
            case 'n': scale = 1e-9; break;
            case 'u': scale = 1e-6; break;
            case 'm': scale = 1e-3; break;
            default: throw SyntaxError(line, "unknown engineering suffix '" + std::string(1, last) +
                                                 "' in \"" + token + "\"");
        }
        body.pop_back();
    }
    double mag = 0.0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), mag);
    if (ec != std::errc() || ptr != body.data() + body.size())
        throw SyntaxError(line, "malformed number \"" + token + "\"");
    return mag * scale;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

// "key=value" -> value if the token starts with "key=", else nullopt-style empty.
bool take_option(const std::string& tok, const char* key, std::string& value) {
    std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) == 0) {
        value = tok.substr(prefix.size());
        return true;
    }
    return false;
}

}  // namespace

Netlist parse_netlist(const std::string& text) {
    std::vector<Component> parsed;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& head = tok[0];
        Component c;
        c.name = head;
        switch (head[0]) {
            case 'C': c.kind = ComponentKind::Capacitor; break;
            case 'L': c.kind = ComponentKind::Inductor; break;
            case 'K': c.kind = ComponentKind::MutualCoupling; break;
            case 'B': c.kind = ComponentKind::JosephsonJunction; break;
            case 'P': c.kind = ComponentKind::Port; break;
            default: throw SyntaxError(line_no, "unknown component type \"" + head + "\"");
        }
        if (tok.size() < 3) throw SyntaxError(line_no, "expected two terminals after " + head);
        c.nodes = {tok[1], tok[2]};
        std::vector<std::string> rest(tok.begin() + 3, tok.end());

        switch (c.kind) {
            case ComponentKind::Capacitor: {
                if (rest.empty()) throw SyntaxError(line_no, head + ": missing capacitance");
                c.value = parse_value(rest[0], line_no);
                for (std::size_t i = 1; i < rest.size(); ++i) {
                    std::string v;
                    if (take_option(rest[i], "tan", v))
                        c.loss_tangent = parse_value(v, line_no);
                    else
                        throw SyntaxError(line_no, head + ": unexpected token \"" + rest[i] + "\"");
                }
                break;
            }
            case ComponentKind::Inductor: {
                if (rest.size() != 1) throw SyntaxError(line_no, head + ": expected one inductance value");
                c.value = parse_value(rest[0], line_no);
                break;
            }
            case ComponentKind::MutualCoupling: {
                if (rest.size() != 1)
                    throw SyntaxError(line_no, head + ": expected one coupling coefficient");
                c.value = parse_value(rest[0], line_no);
                break;
            }
            case ComponentKind::JosephsonJunction: {
                if (rest.size() != 1) throw SyntaxError(line_no, head + ": expected Ic=<val>");
                std::string v;
                if (!take_option(rest[0], "Ic", v))
                    throw SyntaxError(line_no, head + ": expected Ic=<val>, got \"" + rest[0] + "\"");
                c.value = parse_value(v, line_no);
                break;
            }
            case ComponentKind::Port: {
                bool have_r = false, have_num = false;
                for (const std::string& t : rest) {
                    std::string v;
                    if (take_option(t, "R", v)) {
                        c.value = parse_value(v, line_no);
                        have_r = true;
                    } else if (take_option(t, "port", v)) {
                        c.port_number = static_cast<int>(parse_value(v, line_no));
                        have_num = true;
                    } else {
                        throw SyntaxError(line_no, head + ": unexpected token \"" + t + "\"");
                    }
                }
                if (!have_r) throw SyntaxError(line_no, head + ": missing R=<val>");
                if (!have_num) throw SyntaxError(line_no, head + ": missing port=<n>");
                break;
            }
        }
        parsed.push_back(std::move(c));
    }
    return Netlist(std::move(parsed));
}

std::string emit_netlist(const Netlist& netlist) {
    std::ostringstream os;
    char buf[128];
    for (const Component& c : netlist.components()) {
        os << c.name << ' ' << c.nodes[0] << ' ' << c.nodes[1];
        switch (c.kind) {
            case ComponentKind::Capacitor:
                std::snprintf(buf, sizeof buf, " %.17g", c.value);
                os << buf;
                if (c.loss_tangent != 0.0) {
                    std::snprintf(buf, sizeof buf, " tan=%.17g", c.loss_tangent);
                    os << buf;
                }
                break;
            case ComponentKind::Inductor:
            case ComponentKind::MutualCoupling:
                std::snprintf(buf, sizeof buf, " %.17g", c.value);
                os << buf;
                break;
            case ComponentKind::JosephsonJunction:
                std::snprintf(buf, sizeof buf, " Ic=%.17g", c.value);
                os << buf;
                break;
            case ComponentKind::Port:
                std::snprintf(buf, sizeof buf, " R=%.17g port=%d", c.value, c.port_number);
                os << buf;
                break;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace twpa
