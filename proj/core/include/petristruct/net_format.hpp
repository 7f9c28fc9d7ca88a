#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "petristruct/net.hpp"

namespace petristruct {

/// A net together with the markings declared alongside it.
struct NetDocument {
  Net net;
  /// Declaration order is preserved.
  std::vector<std::pair<std::string, Marking>> markings;
  /// Names listed by `init` directives; these form the finite set Init.
  std::vector<std::string> init;

  /// Throws domain_error("unknown marking ...").
  const Marking& marking(std::string_view name) const;
  bool has_marking(std::string_view name) const;
  /// Markings named by `init`, in directive order.
  std::vector<Marking> init_markings() const;

  friend bool operator==(const NetDocument&, const NetDocument&) = default;
};

/// Parses the line-oriented net format:
///
///     net <ident>
///     place <ident>
///     trans <ident>
///     arc <place> -> <trans> [<nat>]   |   arc <trans> -> <place> [<nat>]
///     marking <ident> { <place>: <nat> [, ...] }
///     init <marking> [, <marking> ...]
///
/// `#` starts a comment. Nodes must be declared before an arc or marking
/// mentions them. Omitted weights are 1; absent arcs weigh 0.
/// Throws parse_error with 1-based line/column.
NetDocument parse_net(std::string_view text);

/// Canonical text: places, transitions, arcs grouped by transition (inputs,
/// then outputs, in place order; weight 1 omitted), markings listing only
/// non-zero places, then one `init` line.
std::string serialize_net(const NetDocument& doc);

NetDocument read_net_file(const std::string& path);

}  // namespace petristruct
