#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace twpa {

enum class ComponentKind { Capacitor, Inductor, MutualCoupling, JosephsonJunction, Port };

/// One circuit element. For MutualCoupling the two "nodes" are the names of
/// the coupled inductors and `value` is the coupling coefficient k; for every
/// other kind they are node identifiers with ground spelled "0".
struct Component {
    ComponentKind kind;
    std::string name;
    std::array<std::string, 2> nodes;
    double value = 0.0;          ///< F, H, A (junction critical current), Ohm (port), or k
    double loss_tangent = 0.0;   ///< capacitors only
    int port_number = 0;         ///< ports only, 1-based

    bool operator==(const Component&) const = default;
};

/// Immutable typed circuit graph. Construct via parse_netlist(), build_twpa()
/// or from a component list; construction validates the structural invariants
/// (unique names, ground present and connected, live mutual references, at
/// least one port).
class Netlist {
public:
    explicit Netlist(std::vector<Component> components);

    const std::vector<Component>& components() const { return components_; }
    /// Dense node numbering in first-appearance order; ground "0" excluded.
    const std::map<std::string, int>& node_index() const { return node_index_; }
    /// Ports ordered by port number.
    const std::vector<Component>& ports() const { return ports_; }
    std::size_t node_count() const { return node_index_.size(); }

    const Component* find(const std::string& name) const;

    bool operator==(const Netlist& other) const { return components_ == other.components_; }

private:
    void validate() const;

    std::vector<Component> components_;
    std::map<std::string, int> node_index_;
    std::vector<Component> ports_;
};

/// Parse the netlist text format:
///   C<name> n1 n2 <val> [tan=<x>]
///   L<name> n1 n2 <val>
///   B<name> n1 n2 Ic=<val>
///   K<name> L<a> L<b> <k>
///   P<name> n1 n2 R=<val> port=<n>
/// `#` starts a comment; values accept engineering suffixes f/p/n/u/m.
/// Throws SyntaxError with a line number, or SemanticError from validation.
Netlist parse_netlist(const std::string& text);

/// Canonical serializer; parse_netlist(emit_netlist(n)) == n.
std::string emit_netlist(const Netlist& netlist);

/// Parse a single value token with optional engineering suffix ("250f", "1.3u").
/// Throws SyntaxError referencing `line` on malformed input.
double parse_value(const std::string& token, int line);

}  // namespace twpa
